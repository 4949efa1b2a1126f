#include "ccrep/parse.hpp"

#include "ccrep/error.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace ccrep {

namespace {

bool is_word_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '^';
}

struct Token {
    enum class Kind { Word, Punct, End };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++column;
            ++i;
            continue;
        }
        if (is_word_char(c)) {
            const std::size_t start = i;
            while (i < text.size() && is_word_char(text[i]))
                ++i;
            tokens.push_back({Token::Kind::Word, std::string(text.substr(start, i - start)), line, column});
            column += i - start;
            continue;
        }
        static constexpr std::string_view punct = ".+()&|<>[]";
        if (punct.find(c) == std::string_view::npos)
            throw SyntaxError(std::string("unexpected character '") + c + "'", line, column);
        tokens.push_back({Token::Kind::Punct, std::string(1, c), line, column});
        ++column;
        ++i;
    }
    tokens.push_back({Token::Kind::End, "end of input", line, column});
    return tokens;
}

class Parser {
public:
    Parser(std::string_view text, const Signature& sig) : tokens_(tokenize(text)), sig_(sig) {}

    Term whole_term()
    {
        Term t = term_sum();
        expect_end();
        return t;
    }

    Formula whole_formula()
    {
        Formula f = formula_or();
        expect_end();
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    bool at_punct(char c) const
    {
        return peek().kind == Token::Kind::Punct && peek().text[0] == c;
    }

    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        const Token& t = peek();
        throw SyntaxError(what + ", found '" + t.text + "'", t.line, t.column);
    }

    void expect_punct(char c)
    {
        if (!at_punct(c))
            fail(std::string("expected '") + c + "'");
        advance();
    }

    void expect_end() const
    {
        if (peek().kind != Token::Kind::End)
            fail("expected end of input");
    }

    std::string action_word()
    {
        if (peek().kind != Token::Kind::Word || is_reserved_word(peek().text))
            fail("expected an action name");
        const Token& t = advance();
        if (!sig_.contains(t.text))
            throw Error(ErrorCode::UnknownAction,
                        "action '" + t.text + "' at line " + std::to_string(t.line) + ", column " +
                            std::to_string(t.column) + " is not in the signature",
                        t.text);
        return t.text;
    }

    Term term_sum()
    {
        std::vector<Term> summands{term_prefixed()};
        while (at_punct('+')) {
            advance();
            summands.push_back(term_prefixed());
        }
        return summands.size() == 1 ? summands.front() : Term::sum(std::move(summands));
    }

    Term term_prefixed()
    {
        if (at_punct('(')) {
            advance();
            Term t = term_sum();
            expect_punct(')');
            return t;
        }
        if (peek().kind != Token::Kind::Word)
            fail("expected a term");
        if (peek().text == "0") {
            advance();
            return Term::nil();
        }
        if (peek().text == "w") {
            advance();
            return Term::omega();
        }
        std::string a = action_word();
        expect_punct('.');
        return Term::prefix(std::move(a), term_prefixed());
    }

    Formula formula_or()
    {
        std::vector<Formula> parts{formula_and()};
        while (at_punct('|')) {
            advance();
            parts.push_back(formula_and());
        }
        return parts.size() == 1 ? parts.front() : Formula::disj(std::move(parts));
    }

    Formula formula_and()
    {
        std::vector<Formula> parts{formula_unary()};
        while (at_punct('&')) {
            advance();
            parts.push_back(formula_unary());
        }
        return parts.size() == 1 ? parts.front() : Formula::conj(std::move(parts));
    }

    Formula formula_unary()
    {
        if (at_punct('(')) {
            advance();
            Formula f = formula_or();
            expect_punct(')');
            return f;
        }
        if (at_punct('<')) {
            advance();
            std::string a = action_word();
            if (!sig_.is_forward(a))
                throw Error(ErrorCode::ModalityMismatch,
                            "<" + a + "> requires a covariant or bivariant action", a);
            expect_punct('>');
            return Formula::diamond(std::move(a), formula_unary());
        }
        if (at_punct('[')) {
            advance();
            std::string a = action_word();
            if (!sig_.is_backward(a))
                throw Error(ErrorCode::ModalityMismatch,
                            "[" + a + "] requires a contravariant or bivariant action", a);
            expect_punct(']');
            return Formula::box(std::move(a), formula_unary());
        }
        if (peek().kind == Token::Kind::Word && peek().text == "tt") {
            advance();
            return Formula::top();
        }
        if (peek().kind == Token::Kind::Word && peek().text == "ff") {
            advance();
            return Formula::bot();
        }
        fail("expected a formula");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Signature& sig_;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0)
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0)
        s.remove_suffix(1);
    return s;
}

} // namespace

Signature parse_signature(std::string_view text)
{
    std::optional<ActionSet> classes[3]; // r, l, bi
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        start = end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (trim(line).empty())
            continue;

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw SyntaxError("expected 'r:', 'l:' or 'bi:'", line_no, 1);
        const std::string_view key = trim(line.substr(0, colon));
        int slot = -1;
        if (key == "r")
            slot = 0;
        else if (key == "l")
            slot = 1;
        else if (key == "bi")
            slot = 2;
        else
            throw SyntaxError("unknown action class '" + std::string(key) + "'", line_no, 1);
        if (classes[slot])
            throw SyntaxError("action class '" + std::string(key) + "' declared twice", line_no, 1);
        classes[slot].emplace();

        std::size_t i = colon + 1;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i])) != 0) {
                ++i;
                continue;
            }
            const std::size_t word_start = i;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])) == 0)
                ++i;
            const std::string name(line.substr(word_start, i - word_start));
            if (name.find('^') != std::string::npos)
                throw Error(ErrorCode::InvalidActionName,
                            "'" + name + "' contains '^', which is reserved for generated actions", name);
            validate_action_name(name);
            if (!classes[slot]->insert(name).second)
                throw Error(ErrorCode::DuplicateAction, "action '" + name + "' listed twice", name);
        }
        if (end == text.size())
            break;
    }
    if (!classes[0])
        throw SyntaxError("missing 'r:' line", line_no, 1);
    if (!classes[1])
        throw SyntaxError("missing 'l:' line", line_no, 1);
    return Signature(std::move(*classes[0]), std::move(*classes[1]), classes[2].value_or(ActionSet{}));
}

Term parse_term(std::string_view text, const Signature& sig) { return Parser(text, sig).whole_term(); }

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser(text, sig).whole_formula(); }

} // namespace ccrep
