#include "tca/letters.hpp"

#include <cassert>

namespace tca {

LetterClass classify(const Automaton& a, const Transformation& t) {
    const int n = a.num_states;
    assert(t.size() == n);
    std::vector<int> preimages(n, 0);
    for (State q = 0; q < n; ++q) ++preimages[t.map[q]];

    int rank = 0;
    for (State q = 0; q < n; ++q)
        if (preimages[q] > 0) ++rank;

    if (rank == n) return {LetterKind::permutation, rank, std::nullopt};
    if (rank != n - 1) return {LetterKind::low_rank, rank, std::nullopt};

    DefectInfo info{-1, -1, {-1, -1}};
    for (State q = 0; q < n; ++q) {
        if (preimages[q] == 0) info.excluded = q;
        if (preimages[q] == 2) info.duplicated = q;
    }
    for (State q = 0; q < n; ++q) {
        if (t.map[q] == info.duplicated) {
            if (info.root.first < 0)
                info.root.first = q;
            else
                info.root.second = q;
        }
    }
    assert(info.excluded >= 0 && info.duplicated >= 0 && info.root.second >= 0);
    return {LetterKind::one_defect, rank, info};
}

LetterClass classify_word(const Automaton& a, const Word& w) {
    return classify(a, transformation_of(a, w));
}

AlphabetClasses classify_alphabet(const Automaton& a) {
    AlphabetClasses out;
    out.by_letter.reserve(a.num_letters());
    for (int i = 0; i < a.num_letters(); ++i) {
        Transformation t{a.table[i]};
        LetterClass lc = classify(a, t);
        if (lc.kind == LetterKind::permutation)
            out.permutation_letters.push_back(i);
        else if (lc.kind == LetterKind::one_defect)
            out.one_defect_letters.emplace_back(i, *lc.defect);
        out.by_letter.push_back(std::move(lc));
    }
    return out;
}

std::vector<int> permutation_letters(const Automaton& a) {
    return classify_alphabet(a).permutation_letters;
}

std::vector<std::pair<int, DefectInfo>> one_defect_letters(const Automaton& a) {
    return classify_alphabet(a).one_defect_letters;
}

}  // namespace tca
