#ifndef TCA_TESTS_HELPERS_HPP
#define TCA_TESTS_HELPERS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tca/automaton.hpp"

namespace tca::test {

// Word from single-character letter names: word(T, "tct").
inline Word word(const Automaton& a, const std::string& letters) {
    Word w;
    for (char ch : letters) {
        int idx = -1;
        for (int i = 0; i < a.num_letters(); ++i)
            if (a.letter_names[i].size() == 1 && a.letter_names[i][0] == ch) idx = i;
        if (idx < 0) throw std::runtime_error(std::string("no letter '") + ch + "'");
        w.push_back(idx);
    }
    return w;
}

// Enumerates every n-state automaton over k letters named a, b, ...
template <typename Fn>
void for_each_automaton(int n, int k, Fn&& fn) {
    Automaton a;
    a.num_states = n;
    for (int i = 0; i < k; ++i) a.letter_names.emplace_back(1, static_cast<char>('a' + i));
    a.table.assign(k, std::vector<State>(n, 0));

    const int digits = n * k;
    std::vector<int> odo(digits, 0);
    while (true) {
        for (int d = 0; d < digits; ++d) a.table[d / n][d % n] = odo[d];
        fn(a);
        int d = 0;
        while (d < digits && ++odo[d] == n) odo[d++] = 0;
        if (d == digits) break;
    }
}

// Deterministic generator for property tests, independent of the library's
// seeded family generator.
struct TestRng {
    std::uint64_t state;

    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
    }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline Word random_word(TestRng& rng, int num_letters, int max_len) {
    Word w(rng.below(max_len + 1));
    for (int& letter : w) letter = rng.below(num_letters);
    return w;
}

}  // namespace tca::test

#endif
