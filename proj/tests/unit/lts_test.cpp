#include "common.hpp"
#include "generators.hpp"

#include <ccrep/lts.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace ccrep;
using namespace ccrep::testing;

TEST(Transitions, NilHasNone) { EXPECT_TRUE(transitions(Term::nil(), sig_ab()).empty()); }

TEST(Transitions, OmegaLoopsOnContravariantActions)
{
    const auto ts = transitions(Term::omega(), sig_ab());
    ASSERT_EQ(ts.size(), 1u);
    EXPECT_EQ(ts[0].action, "b");
    EXPECT_TRUE(ts[0].target.is_omega());
    // bivariant actions get no loop
    const auto bi = transitions(Term::omega(), sig_bi());
    ASSERT_EQ(bi.size(), 1u);
    EXPECT_EQ(bi[0].action, "b");
    EXPECT_EQ(transitions(Term::omega(), sig_wide()).size(), 2u);
}

TEST(Transitions, PrefixAndChoice)
{
    const Signature sig = sig_ab();
    const auto ts = transitions(T("a.0 + b.0", sig), sig);
    ASSERT_EQ(ts.size(), 2u);
    EXPECT_EQ(ts[0].action, "a");
    EXPECT_EQ(ts[1].action, "b");
    EXPECT_TRUE(ts[0].target.is_nil());
    // a.0 + a.0 has a single distinct a-move
    EXPECT_EQ(transitions(T("a.0 + a.0", sig), sig).size(), 1u);
}

TEST(Transitions, DerivativesAreSmaller)
{
    Rng rng(10);
    for (const Signature& sig : {sig_ab(), sig_wide(), sig_bi()})
        for (int i = 0; i < 1000; ++i) {
            const Term p = random_term(rng, sig, {4, 3, true});
            if (p.is_omega())
                continue;
            for (const auto& [a, q] : transitions(p, sig))
                EXPECT_LT(term_size(q), term_size(p)) << p.text() << " -" << a << "-> " << q.text();
        }
}

TEST(BuildLts, Shapes)
{
    const Signature sig = sig_ab();
    const Lts zero = build_lts(Term::nil(), sig);
    EXPECT_EQ(zero.states().size(), 1u);
    EXPECT_TRUE(zero.edges().empty());

    const Lts w = build_lts(Term::omega(), sig);
    ASSERT_EQ(w.states().size(), 1u);
    ASSERT_EQ(w.edges().size(), 1u);
    EXPECT_EQ(w.edges()[0].source, w.edges()[0].target);
    EXPECT_EQ(w.edges()[0].action, "b");

    const Lts ab = build_lts(T("a.b.0", sig), sig);
    EXPECT_EQ(ab.states().size(), 3u);
    ASSERT_EQ(ab.edges().size(), 2u);
    EXPECT_EQ(ab.initial(), "a.b.0");
    const std::set<std::tuple<std::string, std::string, std::string>> got{
        {ab.edges()[0].source, ab.edges()[0].action, ab.edges()[0].target},
        {ab.edges()[1].source, ab.edges()[1].action, ab.edges()[1].target}};
    EXPECT_EQ(got, (std::set<std::tuple<std::string, std::string, std::string>>{{"a.b.0", "a", "b.0"},
                                                                               {"b.0", "b", "0"}}));
}

namespace {

void subterms(const Term& p, std::set<std::string>& out)
{
    out.insert(p.text());
    if (p.kind() == Term::Kind::Prefix)
        subterms(p.body(), out);
    if (p.kind() == Term::Kind::Choice) {
        subterms(p.left(), out);
        subterms(p.right(), out);
    }
}

} // namespace

TEST(BuildLts, StateCountBoundedBySubterms)
{
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Term p = random_term(rng, sig_wide(), {4, 3, true});
        std::set<std::string> subs;
        subterms(p, subs);
        EXPECT_LE(build_lts(p, sig_wide()).states().size(), subs.size() + 1) << p.text();
    }
}

TEST(BuildLts, SeveralRootsShareStates)
{
    const Signature sig = sig_ab();
    const std::vector<Term> roots{T("a.0", sig), T("b.0", sig)};
    const Lts lts = build_lts(roots, sig);
    EXPECT_EQ(lts.states().size(), 3u);
    EXPECT_EQ(lts.initial(), "a.0");
    EXPECT_TRUE(lts.has_state("0"));
    EXPECT_EQ(error_of([&] { (void)lts.index_of("zz"); }), ErrorCode::PreconditionViolated);
}

TEST(Lts, ValidatesInput)
{
    const Signature sig = sig_ab();
    EXPECT_EQ(error_of([&] { Lts(sig, {"X"}, "Y", {}); }), ErrorCode::PreconditionViolated);
    EXPECT_EQ(error_of([&] { Lts(sig, {"X"}, "X", {{"X", "a", "Y"}}); }), ErrorCode::PreconditionViolated);
    EXPECT_EQ(error_of([&] { Lts(sig, {"X"}, "X", {{"X", "z", "X"}}); }), ErrorCode::SignatureMismatch);
    const Lts dup(sig, {"X", "X"}, "X", {{"X", "a", "X"}, {"X", "a", "X"}});
    EXPECT_EQ(dup.states().size(), 1u);
    EXPECT_EQ(dup.edges().size(), 1u);
}

TEST(Lts, JsonRoundTrip)
{
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const Lts lts = build_lts(random_term(rng, sig_bi(), {3, 2, true}), sig_bi());
        const std::string text = to_json(lts);
        const Lts back = lts_from_json(text);
        EXPECT_EQ(to_json(back), text);
        EXPECT_EQ(back.initial(), lts.initial());
    }
}

TEST(Lts, JsonFormat)
{
    const Signature sig = sig_ab();
    EXPECT_EQ(to_json(build_lts(T("a.0", sig), sig)),
              R"({"edges":[["a.0","a","0"]],"initial":"a.0","signature":{"bi":[],"l":["b"],"r":["a"]},"states":["0","a.0"]})");
    EXPECT_EQ(error_of([] { (void)lts_from_json("{\"edges\": 3}"); }), ErrorCode::Syntax);
    EXPECT_EQ(error_of([] { (void)lts_from_json("not json"); }), ErrorCode::Syntax);
}

TEST(Lts, DisjointUnion)
{
    const Signature sig = sig_ab();
    const Lts u = disjoint_union(build_lts(T("a.0", sig), sig), "L:", build_lts(T("a.0", sig), sig), "R:");
    EXPECT_EQ(u.states().size(), 4u);
    EXPECT_EQ(u.initial(), "L:a.0");
    EXPECT_EQ(error_of([&] { (void)disjoint_union(u, "", u, ""); }), ErrorCode::PreconditionViolated);
    EXPECT_EQ(error_of([&] { (void)disjoint_union(u, "x", build_lts(Term::nil(), sig_bi()), "y"); }),
              ErrorCode::SignatureMismatch);
}
