#ifndef FREEHILB_IDEAL_STATE_HPP
#define FREEHILB_IDEAL_STATE_HPP

#include <concepts>
#include <memory>
#include <string>
#include <vector>

#include "freehilb/word.hpp"

namespace freehilb {

/// The unique minimal right basis of a finitely generated monomial right
/// ideal: canonically sorted and prefix-free. If the empty word 1 is
/// present it is the only element (the unit ideal). The empty set is the
/// zero ideal.
class RightBasis {
public:
    RightBasis() = default;

    /// Removes duplicates and every word having a distinct kept word as
    /// proper prefix; a set containing 1 collapses to {1}.
    static RightBasis canonicalize(std::vector<Word> words);

    const std::vector<Word>& words() const { return words_; }
    bool is_zero() const { return words_.empty(); }
    bool is_unit() const { return words_.size() == 1 && words_[0].empty(); }
    /// True iff some basis word is a prefix of w.
    bool member(const Word& w) const;

    std::string key() const;
    std::string str(const Alphabet& alphabet) const;

    bool operator==(const RightBasis& other) const = default;

private:
    std::vector<Word> words_;
};

/// Orbit state for a finitely generated monomial right ideal, identified
/// by its canonical minimal basis. Equal membership functions give equal
/// states.
class FgRightIdealState {
public:
    explicit FgRightIdealState(std::size_t alphabet_size, std::vector<Word> generators);
    FgRightIdealState(std::size_t alphabet_size, RightBasis basis);

    static FgRightIdealState zero(std::size_t alphabet_size);
    static FgRightIdealState unit(std::size_t alphabet_size);

    /// The colon transition (I : letter), again in canonical form.
    FgRightIdealState colon_by_letter(Letter letter) const;
    bool is_unit() const { return basis_.is_unit(); }
    bool is_member(const Word& w) const { return basis_.member(w); }
    std::string key() const { return basis_.key(); }
    std::string describe(const Alphabet& alphabet) const { return basis_.str(alphabet); }
    std::size_t alphabet_size() const { return alphabet_size_; }

    const RightBasis& basis() const { return basis_; }

    bool operator==(const FgRightIdealState& other) const = default;

private:
    std::size_t alphabet_size_;
    RightBasis basis_;
};

/// Orbit state for the right ideal <R> + I where I is the two-sided ideal
/// of a finite, factor-minimal generator set G shared across the whole
/// orbit. The right part R is kept canonical: no element has a factor in
/// G, none is a prefix of another. With G fixed, equal ideals have equal
/// right parts, so keys use R alone.
class TwoSidedAugmentedState {
public:
    /// The initial state of the orbit of the two-sided ideal of
    /// `two_sided_generators` (which gets deduplicated and factor
    /// minimized; a generator equal to 1 collapses the state to the unit
    /// ideal).
    static TwoSidedAugmentedState initial(std::size_t alphabet_size,
                                          std::vector<Word> two_sided_generators);

    TwoSidedAugmentedState colon_by_letter(Letter letter) const;
    bool is_unit() const { return right_part_.is_unit(); }
    bool is_member(const Word& w) const;
    std::string key() const { return right_part_.key(); }
    std::string describe(const Alphabet& alphabet) const;
    std::size_t alphabet_size() const { return alphabet_size_; }

    const RightBasis& right_part() const { return right_part_; }
    const std::vector<Word>& two_sided_generators() const { return *generators_; }

private:
    TwoSidedAugmentedState(std::size_t alphabet_size,
                           std::shared_ptr<const std::vector<Word>> generators,
                           RightBasis right_part);

    std::size_t alphabet_size_;
    std::shared_ptr<const std::vector<Word>> generators_;
    RightBasis right_part_;
};

/// What the orbit enumeration needs from a colon-ideal representation:
/// letter transitions, the unit test, direct membership, an exact
/// canonical key, and a printable description.
template <typename S>
concept IdealStateBackend = requires(const S state, Letter letter, const Word& w, const Alphabet& alphabet) {
    { state.colon_by_letter(letter) } -> std::same_as<S>;
    { state.is_unit() } -> std::same_as<bool>;
    { state.is_member(w) } -> std::same_as<bool>;
    { state.key() } -> std::same_as<std::string>;
    { state.describe(alphabet) } -> std::same_as<std::string>;
    { state.alphabet_size() } -> std::convertible_to<std::size_t>;
};

/// (I : w), the left-to-right composition of letter transitions over the
/// letters of w. The empty word is the identity.
template <IdealStateBackend S>
S colon_by_word(S state, const Word& w) {
    for (Letter letter : w.letters()) state = state.colon_by_letter(letter);
    return state;
}

} // namespace freehilb

#endif
