#include "ccrep/cli.hpp"

#include <ccrep/bivariant.hpp>
#include <ccrep/characteristic.hpp>
#include <ccrep/error.hpp>
#include <ccrep/logic.hpp>
#include <ccrep/lts.hpp>
#include <ccrep/normal_form.hpp>
#include <ccrep/parse.hpp>
#include <ccrep/representation.hpp>
#include <ccrep/simulation.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace ccrep::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultSnfLimit = 100000;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::PreconditionViolated, "cannot read file '" + path + "'", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inline text, or the contents of FILE for an argument "@FILE".
std::string resolve(const std::string& arg)
{
    if (arg.empty() || arg.front() != '@')
        return arg;
    std::string text = read_file(arg.substr(1));
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0)
        text.pop_back();
    return text;
}

bool looks_like_lts(const std::string& text)
{
    auto it = std::find_if(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)) == 0; });
    return it != text.end() && *it == '{';
}

std::size_t snf_limit_from_env()
{
    const char* raw = std::getenv("CCREP_MAX_SNF_DISJUNCTS");
    if (raw == nullptr || *raw == '\0')
        return kDefaultSnfLimit;
    try {
        return static_cast<std::size_t>(std::stoull(raw));
    } catch (const std::exception&) {
        throw Error(ErrorCode::PreconditionViolated,
                    "CCREP_MAX_SNF_DISJUNCTS must be a non-negative integer, got '" + std::string(raw) + "'");
    }
}

std::string brace_list(const std::vector<Term>& terms)
{
    std::string s = "{";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0)
            s += ", ";
        s += terms[i].text();
    }
    return s + "}";
}

json text_array(const std::vector<Term>& terms)
{
    json a = json::array();
    for (const auto& t : terms)
        a.push_back(t.text());
    return a;
}

class Session {
public:
    Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    std::string sig_path;
    bool json_mode = false;

    const Signature& sig()
    {
        if (!sig_) {
            if (sig_path.empty())
                throw Error(ErrorCode::PreconditionViolated, "this command needs --sig FILE");
            sig_ = parse_signature(read_file(sig_path));
        }
        return *sig_;
    }

    SnfOptions snf_options() const { return {snf_limit_from_env()}; }

    Term term(const std::string& arg) { return parse_term(resolve(arg), sig()); }
    Term split_term(const std::string& arg) { return parse_term(resolve(arg), split_signature(sig())); }
    Formula formula(const std::string& arg) { return parse_formula(resolve(arg), sig()); }

    // An LTS document, or the system of a term.
    Lts system(const std::string& arg)
    {
        const std::string text = resolve(arg);
        if (looks_like_lts(text))
            return lts_from_json(text);
        return build_lts(parse_term(text, sig()), sig());
    }

    int emit(const json& doc, const std::string& text, int code = kYes)
    {
        if (json_mode)
            out_ << doc.dump() << '\n';
        else
            out_ << text;
        return code;
    }

    int verdict(const std::string& command, bool yes, json extra, const std::string& text)
    {
        extra["command"] = command;
        extra["verdict"] = yes;
        return emit(extra, text, yes ? kYes : kNo);
    }

    std::ostream& err() { return err_; }

private:
    std::ostream& out_;
    std::ostream& err_;
    std::optional<Signature> sig_;
};

} // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Session s(out, err);
    std::function<int()> action;

    CLI::App app{"Covariant-contravariant simulation and modal logic toolkit", "ccrep"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--sig", s.sig_path, "Signature file (r:/l:/bi: lines)");
    app.add_flag("--json", s.json_mode, "Structured output");

    std::string a1;
    std::string a2;
    bool flag = false;

    auto* parse_cmd = app.add_subcommand("parse", "Print the canonical form of a term (or formula)");
    parse_cmd->add_option("X", a1)->required();
    parse_cmd->add_flag("--formula", flag, "Parse a formula instead of a term");
    parse_cmd->callback([&] {
        action = [&] {
            const std::string text = flag ? s.formula(a1).text() : s.term(a1).text();
            return s.emit({{"command", "parse"}, {"kind", flag ? "formula" : "term"}, {"text", text}}, text + "\n");
        };
    });

    auto* lts_cmd = app.add_subcommand("lts", "Print the transition system of a term");
    lts_cmd->add_option("P", a1)->required();
    lts_cmd->callback([&] {
        action = [&] {
            const Lts lts = s.system(a1);
            return s.emit({{"command", "lts"}, {"lts", json::parse(to_json(lts))}}, to_json(lts, 2) + "\n");
        };
    });

    bool witness = false;
    auto* sim_cmd = app.add_subcommand("sim", "Decide P <=cc Q");
    sim_cmd->add_option("P", a1)->required();
    sim_cmd->add_option("Q", a2)->required();
    sim_cmd->add_flag("--witness", witness, "Print the simulation relation");
    sim_cmd->callback([&] {
        action = [&] {
            const Term p = s.term(a1);
            const Term q = s.term(a2);
            const auto w = simulation_witness(p, q, s.sig());
            json doc{{"p", p.text()}, {"q", q.text()}};
            std::string text = p.text() + " <=cc " + q.text() + ": " + (w ? "yes" : "no") + "\n";
            if (witness && w) {
                json pairs = json::array();
                for (const auto& [x, y] : w->pairs) {
                    pairs.push_back({x, y});
                    text += "  (" + x + ", " + y + ")\n";
                }
                doc["witness"] = pairs;
            }
            return s.verdict("sim", w.has_value(), doc, text);
        };
    });

    bool explain = false;
    auto* check_cmd = app.add_subcommand("check", "Decide P |= F");
    check_cmd->add_option("P", a1)->required();
    check_cmd->add_option("F", a2)->required();
    check_cmd->add_flag("--explain", explain, "Print the evaluation tree");
    check_cmd->callback([&] {
        action = [&] {
            const Term p = s.term(a1);
            const Formula f = s.formula(a2);
            const bool yes = s.sig().has_bivariant() ? bi_satisfies(p, f, s.sig()) : satisfies(p, f, s.sig());
            json doc{{"p", p.text()}, {"formula", f.text()}};
            std::string text = p.text() + " |= " + f.text() + ": " + (yes ? "yes" : "no") + "\n";
            if (explain) {
                const std::string tree = explain_satisfaction(p, f, s.sig());
                doc["explain"] = tree;
                text += tree;
            }
            return s.verdict("check", yes, doc, text);
        };
    });

    auto* charform_cmd = app.add_subcommand("charform", "Print the characteristic formula of P");
    charform_cmd->add_option("P", a1)->required();
    charform_cmd->callback([&] {
        action = [&] {
            const Term p = s.term(a1);
            const Formula chi = char_formula(p, s.sig());
            return s.emit({{"command", "charform"},
                           {"term", p.text()},
                           {"formula", chi.text()},
                           {"modal_depth", chi.modal_depth()}},
                          chi.text() + "\n");
        };
    });

    bool stats = false;
    auto* snf_cmd = app.add_subcommand("snf", "Print the strong normal form of F");
    snf_cmd->add_option("F", a1)->required();
    snf_cmd->add_flag("--stats", stats, "Print disjunct count, modal depth and box completions");
    snf_cmd->callback([&] {
        action = [&] {
            const Formula f = s.formula(a1);
            SnfStats st;
            const StrongNormalForm snf = to_strong_normal_form(f, s.sig(), s.snf_options(), &st);
            json disjuncts = json::array();
            for (const auto& u : snf.disjuncts)
                disjuncts.push_back(u.formula().text());
            json doc{{"command", "snf"}, {"formula", snf.formula().text()}, {"disjuncts", disjuncts}};
            std::string text = snf.formula().text() + "\n";
            if (stats) {
                doc["stats"] = {{"disjuncts", st.disjuncts},
                                {"modal_depth", st.modal_depth},
                                {"completed_boxes", st.completed_boxes}};
                text += "disjuncts: " + std::to_string(st.disjuncts) + "\n" +
                        "modal depth: " + std::to_string(st.modal_depth) + "\n" +
                        "completed boxes: " + std::to_string(st.completed_boxes) + "\n";
            }
            return s.emit(doc, text);
        };
    });

    auto* represent_cmd = app.add_subcommand("represent", "Print the antichain of processes representing F");
    represent_cmd->add_option("F", a1)->required();
    represent_cmd->callback([&] {
        action = [&] {
            const Formula f = s.formula(a1);
            const auto rep = represent(f, s.sig(), s.snf_options());
            return s.emit({{"command", "represent"}, {"formula", f.text()}, {"members", text_array(rep.members)}},
                          brace_list(rep.members) + "\n");
        };
    });

    auto* prime_cmd = app.add_subcommand("prime", "Decide whether F is prime");
    prime_cmd->add_option("F", a1)->required();
    prime_cmd->callback([&] {
        action = [&] {
            const Formula f = s.formula(a1);
            const bool prime = is_prime(f, s.sig(), s.snf_options());
            const auto members = represent(f, s.sig(), s.snf_options()).members;
            const bool single = prime && members.size() == 1;
            std::string text;
            if (!prime)
                text = "not prime: antichain " + brace_list(members) + "\n";
            else if (members.empty())
                text = "prime (vacuously): inconsistent\n";
            else
                text = "prime: represented by " + members.front().text() + "\n";
            text += std::string("representable by a single process: ") + (single ? "yes" : "no") + "\n";
            json doc{{"formula", f.text()}, {"antichain", text_array(members)}, {"representable", single}};
            if (single)
                doc["representative"] = members.front().text();
            return s.verdict("prime", prime, doc, text);
        };
    });

    auto* consistent_cmd = app.add_subcommand("consistent", "Decide whether F has a model");
    consistent_cmd->add_option("F", a1)->required();
    consistent_cmd->callback([&] {
        action = [&] {
            const Formula f = s.formula(a1);
            const auto w = consistency_witness(f, s.sig(), s.snf_options());
            json doc{{"formula", f.text()}};
            if (w)
                doc["witness"] = w->text();
            return s.verdict("consistent", w.has_value(), doc,
                             w ? "consistent: witness " + w->text() + "\n" : std::string("inconsistent\n"));
        };
    });

    auto* entails_cmd = app.add_subcommand("entails", "Decide F <= G");
    entails_cmd->add_option("F", a1)->required();
    entails_cmd->add_option("G", a2)->required();
    entails_cmd->callback([&] {
        action = [&] {
            const Formula f = s.formula(a1);
            const Formula g = s.formula(a2);
            const auto cex = entailment_counterexample(f, g, s.sig(), s.snf_options());
            json doc{{"f", f.text()}, {"g", g.text()}};
            if (cex)
                doc["counterwitness"] = cex->text();
            return s.verdict("entails", !cex, doc,
                             cex ? "does not entail: " + cex->text() + " satisfies " + f.text() + " but not " +
                                       g.text() + "\n"
                                 : std::string("entails\n"));
        };
    });

    auto* equiv_cmd = app.add_subcommand("equiv", "Decide F == G");
    equiv_cmd->add_option("F", a1)->required();
    equiv_cmd->add_option("G", a2)->required();
    equiv_cmd->callback([&] {
        action = [&] {
            const Formula f = s.formula(a1);
            const Formula g = s.formula(a2);
            auto cex = entailment_counterexample(f, g, s.sig(), s.snf_options());
            const Formula* holds = &f;
            const Formula* fails = &g;
            if (!cex) {
                cex = entailment_counterexample(g, f, s.sig(), s.snf_options());
                std::swap(holds, fails);
            }
            json doc{{"f", f.text()}, {"g", g.text()}};
            if (cex)
                doc["counterwitness"] = cex->text();
            return s.verdict("equiv", !cex, doc,
                             cex ? "not equivalent: " + cex->text() + " satisfies " + holds->text() + " but not " +
                                       fails->text() + "\n"
                                 : std::string("equivalent\n"));
        };
    });

    bool bi_flag = false;
    auto* bisim_cmd = app.add_subcommand("bisim", "Decide P <=cc Q with bivariant actions");
    bisim_cmd->add_option("P", a1)->required();
    bisim_cmd->add_option("Q", a2)->required();
    bisim_cmd->add_flag("--bi", bi_flag, "Treat the bivariant class with both clauses (always on)");
    bisim_cmd->callback([&] {
        action = [&] {
            const Term p = s.term(a1);
            const Term q = s.term(a2);
            const bool yes = bi_simulates(p, q, s.sig());
            return s.verdict("bisim", yes, {{"p", p.text()}, {"q", q.text()}},
                             p.text() + " <=cc " + q.text() + ": " + (yes ? "yes" : "no") + "\n");
        };
    });

    auto* encode_cmd = app.add_subcommand("encode", "Split every bivariant action into c^r and c^l");
    encode_cmd->add_option("P", a1)->required();
    encode_cmd->callback([&] {
        action = [&] {
            const std::string text = resolve(a1);
            if (looks_like_lts(text)) {
                const Lts out_lts = encode_split(lts_from_json(text));
                return s.emit({{"command", "encode"}, {"lts", json::parse(to_json(out_lts))}},
                              to_json(out_lts, 2) + "\n");
            }
            const Term t = encode_split(parse_term(text, s.sig()), s.sig());
            return s.emit({{"command", "encode"}, {"term", t.text()}}, t.text() + "\n");
        };
    });

    auto* encode0_cmd = app.add_subcommand("encode0", "MTS-route encoding with the sink state u");
    encode0_cmd->add_option("P", a1)->required();
    encode0_cmd->callback([&] {
        action = [&] {
            const Lts out_lts = encode_mts(s.system(a1));
            return s.emit({{"command", "encode0"}, {"lts", json::parse(to_json(out_lts))}},
                          to_json(out_lts, 2) + "\n");
        };
    });

    auto* translate_cmd = app.add_subcommand("translate", "Translate F to the split signature");
    translate_cmd->add_option("F", a1)->required();
    translate_cmd->callback([&] {
        action = [&] {
            const Formula f = translate_formula(s.formula(a1), s.sig());
            return s.emit({{"command", "translate"}, {"formula", f.text()}}, f.text() + "\n");
        };
    });

    auto* decode_cmd = app.add_subcommand("decode", "Reconstruct a bivariant term from a split-signature term");
    decode_cmd->add_option("P", a1)->required();
    decode_cmd->callback([&] {
        action = [&] {
            const Term p = s.split_term(a1);
            const Reconstruction r = reconstruct_bivariant(p, s.sig());
            if (const auto* t = std::get_if<Term>(&r))
                return s.verdict("decode", true, {{"input", p.text()}, {"term", t->text()}}, t->text() + "\n");
            const auto& nr = std::get<NotRepresentable>(r);
            return s.verdict("decode", false, {{"input", p.text()}, {"candidate", nr.candidate.text()}},
                             "not representable: " + p.text() + " is not cc-equivalent to " + nr.candidate.text() +
                                 "\n");
        };
    });

    auto* isrep_cmd = app.add_subcommand("isrep", "Decide whether P pairs every c^r with a c^l");
    isrep_cmd->add_option("P", a1)->required();
    isrep_cmd->callback([&] {
        action = [&] {
            const Term p = s.split_term(a1);
            const bool yes = is_representation(p, s.sig());
            return s.verdict("isrep", yes, {{"term", p.text()}},
                             std::string(yes ? "representation" : "not a representation") + "\n");
        };
    });

    std::string what;
    std::size_t depth = 1;
    std::size_t width = 1;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List bounded terms or formulae");
    enumerate_cmd->add_option("KIND", what, "terms | formulae")->required()->check(CLI::IsMember({"terms", "formulae"}));
    enumerate_cmd->add_option("--depth", depth, "Prefix / modal depth bound");
    enumerate_cmd->add_option("--width", width, "Choice / connective width bound");
    enumerate_cmd->callback([&] {
        action = [&] {
            std::vector<std::string> items;
            if (what == "terms")
                for (const auto& t : enumerate_terms(s.sig(), depth, width))
                    items.push_back(t.text());
            else
                for (const auto& f : enumerate_formulae(s.sig(), depth, width))
                    items.push_back(f.text());
            std::string text;
            for (const auto& i : items)
                text += i + "\n";
            return s.emit({{"command", "enumerate"}, {"kind", what}, {"items", items}}, text);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::SnfLimitExceeded ? kLimit : kUsage;
    }
}

} // namespace ccrep::cli
