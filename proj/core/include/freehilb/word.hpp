#ifndef FREEHILB_WORD_HPP
#define FREEHILB_WORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freehilb {

using Letter = std::uint32_t;

/// An ordered alphabet of distinct, nonempty letter names. All computation
/// works with letter indices; names appear only when parsing and rendering.
///
/// Names may not contain whitespace or the characters ()|*#= used by the
/// regular-expression and spec-file grammars, and the token "1" is reserved
/// for the empty word.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);

    std::size_t size() const { return letters_.size(); }
    const std::string& name(Letter i) const { return letters_.at(i); }
    const std::vector<std::string>& letters() const { return letters_; }
    std::optional<Letter> index_of(std::string_view name) const;

    bool operator==(const Alphabet& other) const = default;

private:
    std::vector<std::string> letters_;
};

/// A word over an alphabet: a finite sequence of letter indices. The empty
/// sequence is the monoid identity 1 (degree 0). A word records only the
/// size of its alphabet; operations on words from alphabets of different
/// sizes are rejected.
class Word {
public:
    Word(std::size_t alphabet_size, std::vector<Letter> letters);

    /// The empty word 1.
    static Word one(std::size_t alphabet_size) { return Word(alphabet_size, {}); }

    std::size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t alphabet_size() const { return alphabet_size_; }

    /// Letter names joined by single spaces; "1" for the empty word.
    std::string str(const Alphabet& alphabet) const;

    /// Index-based rendering independent of any alphabet, used for
    /// canonical keys.
    std::string key() const;

    bool operator==(const Word& other) const = default;

    /// Graded order: shorter words first, ties broken lexicographically by
    /// letter index. This is the canonical sort used everywhere.
    bool operator<(const Word& other) const;

private:
    std::size_t alphabet_size_;
    std::vector<Letter> letters_;
};

/// u followed by v. Throws std::invalid_argument on alphabet mismatch.
Word concat(const Word& u, const Word& v);

/// True iff w = u v for some word v.
bool is_prefix(const Word& u, const Word& w);

/// True iff w = a u b for some words a, b.
bool is_factor(const Word& u, const Word& w);

/// For nonempty g: the word v with g = letter v, when g starts with that
/// letter; std::nullopt otherwise. This is the single-letter overlap used
/// by the colon transition of two-sided generators.
std::optional<Word> strip_leading_letter(const Word& g, Letter letter);

} // namespace freehilb

#endif
