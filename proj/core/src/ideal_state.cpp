#include "freehilb/ideal_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace freehilb {

RightBasis RightBasis::canonicalize(std::vector<Word> words) {
    RightBasis basis;
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    // Graded order puts every proper prefix before the words it divides,
    // so one forward pass suffices.
    for (const Word& w : words) {
        bool redundant = false;
        for (const Word& kept : basis.words_)
            if (is_prefix(kept, w)) {
                redundant = true;
                break;
            }
        if (!redundant) basis.words_.push_back(w);
    }
    return basis;
}

bool RightBasis::member(const Word& w) const {
    for (const Word& b : words_)
        if (is_prefix(b, w)) return true;
    return false;
}

std::string RightBasis::key() const {
    std::string out;
    for (const Word& w : words_) {
        if (!out.empty()) out += '|';
        out += w.key();
    }
    return out;
}

std::string RightBasis::str(const Alphabet& alphabet) const {
    std::string out = "<";
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (i > 0) out += ", ";
        out += words_[i].str(alphabet);
    }
    out += ">";
    return out;
}

FgRightIdealState::FgRightIdealState(std::size_t alphabet_size, std::vector<Word> generators)
    : alphabet_size_(alphabet_size), basis_(RightBasis::canonicalize(std::move(generators))) {
    for (const Word& w : basis_.words())
        if (w.alphabet_size() != alphabet_size_)
            throw std::invalid_argument("generator alphabet mismatch");
}

FgRightIdealState::FgRightIdealState(std::size_t alphabet_size, RightBasis basis)
    : alphabet_size_(alphabet_size), basis_(std::move(basis)) {}

FgRightIdealState FgRightIdealState::zero(std::size_t alphabet_size) {
    return FgRightIdealState(alphabet_size, RightBasis());
}

FgRightIdealState FgRightIdealState::unit(std::size_t alphabet_size) {
    return FgRightIdealState(alphabet_size, std::vector<Word>{Word::one(alphabet_size)});
}

FgRightIdealState FgRightIdealState::colon_by_letter(Letter letter) const {
    std::vector<Word> out;
    for (const Word& w : basis_.words()) {
        if (w.empty() || (w.degree() == 1 && w[0] == letter)) {
            return unit(alphabet_size_);
        }
        if (auto tail = strip_leading_letter(w, letter)) out.push_back(std::move(*tail));
    }
    return FgRightIdealState(alphabet_size_, std::move(out));
}

namespace {

// Drops words having a factor in the (factor-minimal) generator set, then
// canonicalizes the remainder as a right basis.
RightBasis reduce_right_part(std::vector<Word> words, const std::vector<Word>& generators) {
    std::vector<Word> kept;
    for (Word& w : words) {
        bool absorbed = false;
        for (const Word& g : generators)
            if (is_factor(g, w)) {
                absorbed = true;
                break;
            }
        if (!absorbed) kept.push_back(std::move(w));
    }
    return RightBasis::canonicalize(std::move(kept));
}

} // namespace

TwoSidedAugmentedState::TwoSidedAugmentedState(std::size_t alphabet_size,
                                               std::shared_ptr<const std::vector<Word>> generators,
                                               RightBasis right_part)
    : alphabet_size_(alphabet_size),
      generators_(std::move(generators)),
      right_part_(std::move(right_part)) {}

TwoSidedAugmentedState TwoSidedAugmentedState::initial(std::size_t alphabet_size,
                                                       std::vector<Word> two_sided_generators) {
    for (const Word& w : two_sided_generators)
        if (w.alphabet_size() != alphabet_size)
            throw std::invalid_argument("generator alphabet mismatch");
    std::sort(two_sided_generators.begin(), two_sided_generators.end());
    two_sided_generators.erase(
        std::unique(two_sided_generators.begin(), two_sided_generators.end()),
        two_sided_generators.end());
    // A generator equal to 1 makes the whole ideal trivial.
    for (const Word& w : two_sided_generators)
        if (w.empty())
            return TwoSidedAugmentedState(
                alphabet_size, std::make_shared<const std::vector<Word>>(),
                RightBasis::canonicalize({Word::one(alphabet_size)}));
    // Factor minimization; graded order puts factors before multiples.
    std::vector<Word> minimal;
    for (const Word& w : two_sided_generators) {
        bool redundant = false;
        for (const Word& kept : minimal)
            if (is_factor(kept, w)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(w);
    }
    return TwoSidedAugmentedState(alphabet_size,
                                  std::make_shared<const std::vector<Word>>(std::move(minimal)),
                                  RightBasis());
}

TwoSidedAugmentedState TwoSidedAugmentedState::colon_by_letter(Letter letter) const {
    if (is_unit()) return *this;
    std::vector<Word> produced;
    // Right part transitions as for a plain right basis.
    for (const Word& w : right_part_.words()) {
        if (w.empty() || (w.degree() == 1 && w[0] == letter))
            return TwoSidedAugmentedState(
                alphabet_size_, generators_,
                RightBasis::canonicalize({Word::one(alphabet_size_)}));
        if (auto tail = strip_leading_letter(w, letter)) produced.push_back(std::move(*tail));
    }
    // Each two-sided generator starting with the letter contributes its
    // tail; the two-sided part itself is carried along unchanged.
    for (const Word& g : *generators_) {
        if (auto tail = strip_leading_letter(g, letter)) {
            if (tail->empty())
                return TwoSidedAugmentedState(
                    alphabet_size_, generators_,
                    RightBasis::canonicalize({Word::one(alphabet_size_)}));
            produced.push_back(std::move(*tail));
        }
    }
    return TwoSidedAugmentedState(alphabet_size_, generators_,
                                  reduce_right_part(std::move(produced), *generators_));
}

bool TwoSidedAugmentedState::is_member(const Word& w) const {
    if (right_part_.member(w)) return true;
    for (const Word& g : *generators_)
        if (is_factor(g, w)) return true;
    return false;
}

std::string TwoSidedAugmentedState::describe(const Alphabet& alphabet) const {
    if (is_unit()) return "<1>";
    if (right_part_.is_zero()) return "I";
    std::string out = right_part_.str(alphabet);
    out += " + I";
    return out;
}

} // namespace freehilb
