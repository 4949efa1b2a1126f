#include "common.hpp"
#include "generators.hpp"

#include <ccrep/formula.hpp>
#include <ccrep/parse.hpp>
#include <ccrep/signature.hpp>
#include <ccrep/term.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace ccrep;
using namespace ccrep::testing;

TEST(Signature, ParsesCovariantAndContravariant)
{
    const Signature s = parse_signature("r: a\nl: b");
    EXPECT_EQ(s, Signature({"a"}, {"b"}, {}));
    EXPECT_FALSE(s.has_bivariant());
}

TEST(Signature, ParsesBivariantLine)
{
    const Signature s = parse_signature("r: a\nl: b\nbi: c");
    EXPECT_EQ(s, Signature({"a"}, {"b"}, {"c"}));
    EXPECT_EQ(s.variance("c"), Variance::Bivariant);
    EXPECT_TRUE(s.is_forward("c"));
    EXPECT_TRUE(s.is_backward("c"));
    EXPECT_FALSE(s.is_backward("a"));
}

TEST(Signature, CommentsAndEmptyClasses)
{
    const Signature s = parse_signature("# toy\nr: a c   # two\nl:\n");
    EXPECT_EQ(s, Signature({"a", "c"}, {}, {}));
    EXPECT_EQ(s.actions(), (std::vector<std::string>{"a", "c"}));
}

TEST(Signature, RejectsOverlap)
{
    EXPECT_EQ(error_of([] { (void)parse_signature("r: a\nl: a"); }), ErrorCode::DuplicateAction);
    EXPECT_EQ(error_of([] { (void)parse_signature("r: a a\nl: b"); }), ErrorCode::DuplicateAction);
    EXPECT_EQ(error_of([] { (void)Signature({"a"}, {"b"}, {"a"}); }), ErrorCode::DuplicateAction);
}

TEST(Signature, RejectsBadNames)
{
    EXPECT_EQ(error_of([] { (void)parse_signature("r: a^r\nl: b"); }), ErrorCode::InvalidActionName);
    EXPECT_EQ(error_of([] { (void)parse_signature("r: w\nl: b"); }), ErrorCode::InvalidActionName);
    EXPECT_EQ(error_of([] { (void)parse_signature("r: tt\nl: b"); }), ErrorCode::InvalidActionName);
    EXPECT_EQ(error_of([] { (void)parse_signature("r: a\n"); }), ErrorCode::Syntax);
    EXPECT_EQ(error_of([] { (void)parse_signature("r: a\nl: b\nr: c"); }), ErrorCode::Syntax);
    EXPECT_EQ(error_of([] { (void)parse_signature("x: a\nl: b"); }), ErrorCode::Syntax);
}

TEST(Term, ParsesChoiceOfPrefixes)
{
    const Signature sig = sig_ab();
    const Term p = T("a.0 + b.w", sig);
    ASSERT_EQ(p.kind(), Term::Kind::Choice);
    EXPECT_EQ(p.left(), Term::prefix("a", Term::nil()));
    EXPECT_EQ(p.right(), Term::prefix("b", Term::omega()));
    EXPECT_TRUE(T("0", sig).is_nil());
    EXPECT_TRUE(T("w", sig).is_omega());
}

TEST(Term, UnknownActionIsReported)
{
    const Signature sig = sig_ab();
    try {
        (void)T("c.0", sig);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownAction);
        EXPECT_EQ(e.subject(), "c");
    }
}

TEST(Term, SyntaxErrorsCarryPosition)
{
    const Signature sig = sig_ab();
    try {
        (void)T("a.0 +\n  + b.0", sig);
        FAIL() << "expected an error";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.code(), ErrorCode::Syntax);
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
    EXPECT_EQ(error_of([&] { (void)T("a.", sig); }), ErrorCode::Syntax);
    EXPECT_EQ(error_of([&] { (void)T("(a.0", sig); }), ErrorCode::Syntax);
    EXPECT_EQ(error_of([&] { (void)T("a.0 b.0", sig); }), ErrorCode::Syntax);
    EXPECT_EQ(error_of([&] { (void)T("", sig); }), ErrorCode::Syntax);
}

TEST(Term, Printing)
{
    EXPECT_EQ(Term::choice(Term::prefix("a", Term::nil()), Term::omega()).text(), "a.0 + w");
    EXPECT_EQ(Term::prefix("a", Term::choice(Term::nil(), Term::omega())).text(), "a.(0 + w)");
    EXPECT_EQ(Term::sum({}).text(), "0");
}

TEST(Term, ChoiceIsCanonicalUpToOrder)
{
    const Signature sig = sig_ab();
    EXPECT_EQ(T("b.0 + a.0", sig), T("a.0 + b.0", sig));
    EXPECT_EQ(T("(a.0 + w) + b.0", sig), T("a.0 + (w + b.0)", sig));
    // duplicates are kept: a.0 + a.0 is a different term from a.0
    EXPECT_NE(T("a.0 + a.0", sig), T("a.0", sig));
}

TEST(Term, Size)
{
    const Signature sig = sig_ab();
    EXPECT_EQ(term_size(T("0", sig)), 1u);
    EXPECT_EQ(term_size(T("a.0", sig)), 2u);
    EXPECT_EQ(term_size(T("a.0 + 0", sig)), 4u);
    EXPECT_EQ(T("a.(b.0 + a.a.0)", sig).prefix_depth(), 3u);
    EXPECT_EQ(T("a.0 + b.0 + w", sig).width(), 3u);
}

TEST(Formula, ParsesConnectivesAndModalities)
{
    const Signature sig = sig_ab();
    const Formula f = F("<a>tt & [b]ff", sig);
    ASSERT_EQ(f.kind(), Formula::Kind::And);
    ASSERT_EQ(f.operands().size(), 2u);
    EXPECT_EQ(f.operands()[0], Formula::diamond("a", Formula::top()));
    EXPECT_EQ(f.operands()[1], Formula::box("b", Formula::bot()));
}

TEST(Formula, ModalityMustMatchVariance)
{
    EXPECT_EQ(error_of([] { (void)F("[a]tt", sig_ab()); }), ErrorCode::ModalityMismatch);
    EXPECT_EQ(error_of([] { (void)F("<b>tt", sig_ab()); }), ErrorCode::ModalityMismatch);
    EXPECT_EQ(error_of([] { (void)F("<z>tt", sig_ab()); }), ErrorCode::UnknownAction);
    EXPECT_EQ(F("<c>tt", sig_bi()), Formula::diamond("c", Formula::top()));
    EXPECT_EQ(F("[c]ff", sig_bi()), Formula::box("c", Formula::bot()));
}

TEST(Formula, EmptyConnectives)
{
    EXPECT_EQ(Formula::conj({}).text(), "tt");
    EXPECT_EQ(Formula::disj({}).text(), "ff");
    EXPECT_EQ(Formula::conj({Formula::bot()}), Formula::bot());
}

TEST(Formula, Precedence)
{
    const Signature sig = sig_ab();
    EXPECT_EQ(F("<a>tt | [b]ff & <a>ff", sig).text(), "<a>ff & [b]ff | <a>tt");
    EXPECT_EQ(F("(<a>tt | [b]ff) & <a>ff", sig).text(), "<a>ff & (<a>tt | [b]ff)");
    EXPECT_EQ(F("<a>(tt & ff)", sig).text(), "<a>(ff & tt)");
}

TEST(Formula, ModalDepth)
{
    const Signature sig = sig_ab();
    EXPECT_EQ(modal_depth(F("tt", sig)), 0u);
    EXPECT_EQ(modal_depth(F("<a>[b]ff", sig)), 2u);
    EXPECT_EQ(modal_depth(F("<a>tt & [b]ff", sig)), 1u);
}

TEST(Syntax, RequireOverSignature)
{
    const Term p = Term::prefix("c", Term::nil());
    EXPECT_EQ(error_of([&] { require_term_over(p, sig_ab()); }), ErrorCode::SignatureMismatch);
    EXPECT_FALSE(error_of([&] { require_term_over(p, sig_bi()); }));
    EXPECT_EQ(error_of([] { require_formula_over(Formula::box("a", Formula::top()), sig_ab()); }),
              ErrorCode::SignatureMismatch);
}

TEST(Syntax, RoundTripRandomTerms)
{
    Rng rng(1);
    for (const Signature& sig : {sig_ab(), sig_wide(), sig_bi()})
        for (int i = 0; i < 500; ++i) {
            const Term p = random_term(rng, sig, {4, 3, true});
            EXPECT_EQ(parse_term(print_term(p), sig), p) << p.text();
        }
}

TEST(Syntax, RoundTripRandomFormulae)
{
    Rng rng(2);
    for (const Signature& sig : {sig_ab(), sig_wide(), sig_bi()})
        for (int i = 0; i < 500; ++i) {
            const Formula f = to_formula(random_formula(rng, sig, {3, 3}));
            EXPECT_EQ(parse_formula(print_formula(f), sig), f) << f.text();
        }
}

TEST(Syntax, PrintingIsInjectiveOnCanonicalTrees)
{
    // Distinct structures give distinct texts: compare a structural key
    // built independently of the printer.
    const auto key = [](const auto& self, const Term& p) -> std::string {
        switch (p.kind()) {
        case Term::Kind::Nil:
            return "N";
        case Term::Kind::Omega:
            return "O";
        case Term::Kind::Prefix:
            return "P(" + p.action() + "," + self(self, p.body()) + ")";
        case Term::Kind::Choice:
            return "C(" + self(self, p.left()) + "," + self(self, p.right()) + ")";
        }
        return {};
    };
    Rng rng(3);
    std::map<std::string, std::string> by_text;
    for (int i = 0; i < 3000; ++i) {
        const Term p = random_term(rng, sig_wide(), {3, 3, true});
        const auto [it, fresh] = by_text.emplace(p.text(), key(key, p));
        if (!fresh)
            EXPECT_EQ(it->second, key(key, p)) << p.text();
    }
}
