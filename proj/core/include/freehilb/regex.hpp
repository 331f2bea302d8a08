#ifndef FREEHILB_REGEX_HPP
#define FREEHILB_REGEX_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "freehilb/word.hpp"

namespace freehilb {

/// Regular expression over an alphabet. Leaves are single letters or the
/// empty word 1; inner nodes are concatenation, alternation and star.
struct RegexExpr {
    enum class Kind { empty_word, letter, concat, alternation, star };

    Kind kind = Kind::empty_word;
    Letter letter = 0;
    std::vector<RegexExpr> children;

    static RegexExpr one();
    static RegexExpr single(Letter letter);
    static RegexExpr concat_of(std::vector<RegexExpr> parts);
    static RegexExpr alternation_of(std::vector<RegexExpr> parts);
    static RegexExpr star_of(RegexExpr inner);

    bool operator==(const RegexExpr& other) const = default;
};

/// Parses the whitespace-tokenized grammar
///
///   expr   := term { "|" term }
///   term   := factor { factor }
///   factor := atom [ "*" ]
///   atom   := LETTER | "1" | "(" expr ")"
///
/// where LETTER is a name declared in the alphabet. Throws ParseError with
/// a byte position on syntax errors and unknown letters.
RegexExpr parse_regex(std::string_view text, const Alphabet& alphabet);

/// The union of all single letters (the language X of the alphabet).
RegexExpr full_alphabet(std::size_t alphabet_size);

/// e (x_1 | ... | x_n)*, the right-ideal closure G X* of the language of e.
RegexExpr close_right(const RegexExpr& e, std::size_t alphabet_size);

/// X* e X*, the two-sided closure.
RegexExpr close_two_sided(const RegexExpr& e, std::size_t alphabet_size);

/// The word denoted by an expression built only from letters, 1 and
/// concatenation; std::nullopt if the expression uses alternation or star.
std::optional<Word> as_single_word(const RegexExpr& e, std::size_t alphabet_size);

/// Direct matcher on the syntax tree, independent of the automaton
/// pipeline. Used by the brute-force oracle.
bool regex_match(const RegexExpr& e, const Word& w);

} // namespace freehilb

#endif
