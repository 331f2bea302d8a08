#include "freehilb/regex.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "freehilb/errors.hpp"

namespace freehilb {

RegexExpr RegexExpr::one() { return RegexExpr{Kind::empty_word, 0, {}}; }

RegexExpr RegexExpr::single(Letter letter) { return RegexExpr{Kind::letter, letter, {}}; }

RegexExpr RegexExpr::concat_of(std::vector<RegexExpr> parts) {
    if (parts.empty()) throw std::invalid_argument("concat of no parts");
    if (parts.size() == 1) return std::move(parts[0]);
    return RegexExpr{Kind::concat, 0, std::move(parts)};
}

RegexExpr RegexExpr::alternation_of(std::vector<RegexExpr> parts) {
    if (parts.empty()) throw std::invalid_argument("alternation of no parts");
    if (parts.size() == 1) return std::move(parts[0]);
    return RegexExpr{Kind::alternation, 0, std::move(parts)};
}

RegexExpr RegexExpr::star_of(RegexExpr inner) {
    return RegexExpr{Kind::star, 0, {std::move(inner)}};
}

namespace {

struct Token {
    enum class Kind { name, one, lparen, rparen, pipe, star, end };
    Kind kind;
    std::string_view text;
    std::size_t position;
};

bool is_punct(char c) {
    return c == '(' || c == ')' || c == '|' || c == '*';
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (is_punct(c)) {
            Token::Kind k = c == '(' ? Token::Kind::lparen
                          : c == ')' ? Token::Kind::rparen
                          : c == '|' ? Token::Kind::pipe
                                     : Token::Kind::star;
            tokens.push_back({k, text.substr(i, 1), i});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               !is_punct(text[i]))
            ++i;
        std::string_view name = text.substr(start, i - start);
        tokens.push_back({name == "1" ? Token::Kind::one : Token::Kind::name, name, start});
    }
    tokens.push_back({Token::Kind::end, {}, text.size()});
    return tokens;
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet)
        : alphabet_(alphabet), tokens_(tokenize(text)) {}

    RegexExpr parse() {
        RegexExpr e = parse_expr();
        if (peek().kind != Token::Kind::end)
            throw ParseError("regex: unexpected '" + std::string(peek().text) + "' at position " +
                             std::to_string(peek().position));
        return e;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& take() { return tokens_[index_++]; }

    bool at_atom_start() const {
        auto k = peek().kind;
        return k == Token::Kind::name || k == Token::Kind::one || k == Token::Kind::lparen;
    }

    RegexExpr parse_expr() {
        std::vector<RegexExpr> terms;
        terms.push_back(parse_term());
        while (peek().kind == Token::Kind::pipe) {
            take();
            terms.push_back(parse_term());
        }
        return RegexExpr::alternation_of(std::move(terms));
    }

    RegexExpr parse_term() {
        if (!at_atom_start())
            throw ParseError("regex: expected a letter, '1' or '(' at position " +
                             std::to_string(peek().position));
        std::vector<RegexExpr> factors;
        while (at_atom_start()) factors.push_back(parse_factor());
        return RegexExpr::concat_of(std::move(factors));
    }

    RegexExpr parse_factor() {
        RegexExpr atom = parse_atom();
        if (peek().kind == Token::Kind::star) {
            take();
            return RegexExpr::star_of(std::move(atom));
        }
        return atom;
    }

    RegexExpr parse_atom() {
        const Token& token = take();
        switch (token.kind) {
            case Token::Kind::one:
                return RegexExpr::one();
            case Token::Kind::name: {
                auto index = alphabet_.index_of(token.text);
                if (!index)
                    throw ParseError("regex: unknown letter '" + std::string(token.text) +
                                     "' at position " + std::to_string(token.position));
                return RegexExpr::single(*index);
            }
            case Token::Kind::lparen: {
                RegexExpr e = parse_expr();
                if (peek().kind != Token::Kind::rparen)
                    throw ParseError("regex: expected ')' at position " +
                                     std::to_string(peek().position));
                take();
                return e;
            }
            default:
                throw ParseError("regex: unexpected '" + std::string(token.text) +
                                 "' at position " + std::to_string(token.position));
        }
    }

    const Alphabet& alphabet_;
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

} // namespace

RegexExpr parse_regex(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse();
}

RegexExpr full_alphabet(std::size_t alphabet_size) {
    std::vector<RegexExpr> letters;
    letters.reserve(alphabet_size);
    for (std::size_t i = 0; i < alphabet_size; ++i)
        letters.push_back(RegexExpr::single(static_cast<Letter>(i)));
    return RegexExpr::alternation_of(std::move(letters));
}

RegexExpr close_right(const RegexExpr& e, std::size_t alphabet_size) {
    std::vector<RegexExpr> parts;
    parts.push_back(e);
    parts.push_back(RegexExpr::star_of(full_alphabet(alphabet_size)));
    return RegexExpr::concat_of(std::move(parts));
}

RegexExpr close_two_sided(const RegexExpr& e, std::size_t alphabet_size) {
    std::vector<RegexExpr> parts;
    parts.push_back(RegexExpr::star_of(full_alphabet(alphabet_size)));
    parts.push_back(e);
    parts.push_back(RegexExpr::star_of(full_alphabet(alphabet_size)));
    return RegexExpr::concat_of(std::move(parts));
}

namespace {

bool collect_letters(const RegexExpr& e, std::vector<Letter>& out) {
    switch (e.kind) {
        case RegexExpr::Kind::empty_word:
            return true;
        case RegexExpr::Kind::letter:
            out.push_back(e.letter);
            return true;
        case RegexExpr::Kind::concat:
            for (const RegexExpr& child : e.children)
                if (!collect_letters(child, out)) return false;
            return true;
        default:
            return false;
    }
}

using Positions = std::set<std::size_t>;

// All positions reachable from `from` by matching e against w.
Positions advance(const RegexExpr& e, const Positions& from, const Word& w) {
    switch (e.kind) {
        case RegexExpr::Kind::empty_word:
            return from;
        case RegexExpr::Kind::letter: {
            Positions out;
            for (std::size_t p : from)
                if (p < w.degree() && w[p] == e.letter) out.insert(p + 1);
            return out;
        }
        case RegexExpr::Kind::concat: {
            Positions current = from;
            for (const RegexExpr& child : e.children) {
                current = advance(child, current, w);
                if (current.empty()) break;
            }
            return current;
        }
        case RegexExpr::Kind::alternation: {
            Positions out;
            for (const RegexExpr& child : e.children) {
                Positions part = advance(child, from, w);
                out.insert(part.begin(), part.end());
            }
            return out;
        }
        case RegexExpr::Kind::star: {
            Positions closure = from;
            Positions frontier = from;
            while (!frontier.empty()) {
                Positions next = advance(e.children[0], frontier, w);
                Positions fresh;
                for (std::size_t p : next)
                    if (closure.insert(p).second) fresh.insert(p);
                frontier = std::move(fresh);
            }
            return closure;
        }
    }
    return {};
}

} // namespace

std::optional<Word> as_single_word(const RegexExpr& e, std::size_t alphabet_size) {
    std::vector<Letter> letters;
    if (!collect_letters(e, letters)) return std::nullopt;
    return Word(alphabet_size, std::move(letters));
}

bool regex_match(const RegexExpr& e, const Word& w) {
    return advance(e, Positions{0}, w).count(w.degree()) > 0;
}

} // namespace freehilb
