#include "freehilb/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "freehilb/errors.hpp"

namespace freehilb {

namespace {

bool valid_letter_name(std::string_view name) {
    if (name.empty() || name == "1") return false;
    for (char c : name) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') return false;
        if (c == '(' || c == ')' || c == '|' || c == '*' || c == '#' || c == '=') return false;
    }
    return true;
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw ParseError("alphabet must contain at least one letter");
    std::unordered_set<std::string_view> seen;
    for (const auto& name : letters_) {
        if (!valid_letter_name(name))
            throw ParseError("invalid letter name '" + name + "'");
        if (!seen.insert(name).second)
            throw ParseError("duplicate letter name '" + name + "'");
    }
}

std::optional<Letter> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
}

Word::Word(std::size_t alphabet_size, std::vector<Letter> letters)
    : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
    if (alphabet_size_ == 0) throw std::invalid_argument("alphabet size must be positive");
    for (Letter l : letters_)
        if (l >= alphabet_size_)
            throw std::invalid_argument("letter index out of range for alphabet");
}

std::string Word::str(const Alphabet& alphabet) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += ' ';
        out += alphabet.name(letters_[i]);
    }
    return out;
}

std::string Word::key() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += '.';
        out += std::to_string(letters_[i]);
    }
    return out;
}

bool Word::operator<(const Word& other) const {
    if (letters_.size() != other.letters_.size())
        return letters_.size() < other.letters_.size();
    return letters_ < other.letters_;
}

Word concat(const Word& u, const Word& v) {
    if (u.alphabet_size() != v.alphabet_size())
        throw std::invalid_argument("concat: alphabet mismatch");
    std::vector<Letter> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(u.alphabet_size(), std::move(letters));
}

bool is_prefix(const Word& u, const Word& w) {
    if (u.alphabet_size() != w.alphabet_size())
        throw std::invalid_argument("is_prefix: alphabet mismatch");
    if (u.degree() > w.degree()) return false;
    return std::equal(u.letters().begin(), u.letters().end(), w.letters().begin());
}

bool is_factor(const Word& u, const Word& w) {
    if (u.alphabet_size() != w.alphabet_size())
        throw std::invalid_argument("is_factor: alphabet mismatch");
    if (u.degree() > w.degree()) return false;
    if (u.empty()) return true;
    const auto& uu = u.letters();
    const auto& ww = w.letters();
    return std::search(ww.begin(), ww.end(), uu.begin(), uu.end()) != ww.end();
}

std::optional<Word> strip_leading_letter(const Word& g, Letter letter) {
    if (g.empty()) throw std::invalid_argument("strip_leading_letter: empty word");
    if (g[0] != letter) return std::nullopt;
    std::vector<Letter> tail(g.letters().begin() + 1, g.letters().end());
    return Word(g.alphabet_size(), std::move(tail));
}

} // namespace freehilb
