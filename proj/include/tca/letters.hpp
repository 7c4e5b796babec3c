#ifndef TCA_LETTERS_HPP
#define TCA_LETTERS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tca/automaton.hpp"

namespace tca {

// Defect data of a rank n-1 transformation: the excluded state has no
// preimage, the duplicated state has exactly two, and the root is the pair
// of preimages of the duplicated state (smaller state first).
struct DefectInfo {
    State excluded;
    State duplicated;
    std::pair<State, State> root;

    bool operator==(const DefectInfo&) const = default;
};

enum class LetterKind { permutation, one_defect, low_rank };

struct LetterClass {
    LetterKind kind;
    int rank;
    std::optional<DefectInfo> defect;  // set iff kind == one_defect
};

// Rank-based classification: permutation at rank n, one_defect at rank n-1
// with its defect data, low_rank below.
LetterClass classify(const Automaton& a, const Transformation& t);

LetterClass classify_word(const Automaton& a, const Word& w);

// Per-letter classification of the whole alphabet, computed once per
// automaton and shared read-only afterwards.
struct AlphabetClasses {
    std::vector<LetterClass> by_letter;
    std::vector<int> permutation_letters;                      // letter order
    std::vector<std::pair<int, DefectInfo>> one_defect_letters;  // letter order
};

AlphabetClasses classify_alphabet(const Automaton& a);

std::vector<int> permutation_letters(const Automaton& a);
std::vector<std::pair<int, DefectInfo>> one_defect_letters(const Automaton& a);

}  // namespace tca

#endif
