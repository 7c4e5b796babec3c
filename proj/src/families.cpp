#include "tca/families.hpp"

#include <stdexcept>
#include <string>

namespace tca {

namespace {

std::vector<std::string> default_letter_names(int k) {
    std::vector<std::string> names;
    names.reserve(k);
    if (k <= 26) {
        for (int i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    } else {
        for (int i = 0; i < k; ++i) names.push_back("l" + std::to_string(i + 1));
    }
    return names;
}

std::vector<State> identity_row(int n) {
    std::vector<State> row(n);
    for (int q = 0; q < n; ++q) row[q] = q;
    return row;
}

std::vector<State> cycle_row(int n) {
    std::vector<State> row(n);
    for (int q = 0; q < n; ++q) row[q] = (q + 1) % n;
    return row;
}

// splitmix64; the reference mixing constants, kept verbatim so the stream
// is reproducible everywhere.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
        std::uint64_t x = next();
        if (rem != 0)
            while (x > UINT64_MAX - rem) x = next();
        return x % n;
    }
};

}  // namespace

Automaton automaton_T() {
    Automaton a;
    a.num_states = 3;
    a.letter_names = {"c", "t"};
    a.table = {{1, 2, 0}, {0, 0, 2}};
    return a;
}

Automaton cerny(int n) {
    if (n < 2) throw std::invalid_argument("cerny needs n >= 2");
    Automaton a;
    a.num_states = n;
    a.letter_names = {"a", "b"};
    std::vector<State> b = identity_row(n);
    b[0] = 1;
    a.table = {cycle_row(n), std::move(b)};
    return a;
}

Automaton pair_merge(int n) {
    if (n < 2) throw std::invalid_argument("pair_merge needs n >= 2");
    Automaton a;
    a.num_states = n;
    for (State p = 0; p < n; ++p) {
        for (State q = p + 1; q < n; ++q) {
            a.letter_names.push_back("t" + std::to_string(p + 1) + "_" + std::to_string(q + 1));
            std::vector<State> row = identity_row(n);
            row[q] = p;
            a.table.push_back(std::move(row));
        }
    }
    return a;
}

Automaton full_monoid(int n) {
    if (n < 1) throw std::invalid_argument("full_monoid needs n >= 1");
    Automaton a;
    a.num_states = n;
    a.letter_names = {"a", "b", "c"};
    std::vector<State> swap01 = identity_row(n);
    std::vector<State> merge = identity_row(n);
    if (n >= 2) {
        swap01[0] = 1;
        swap01[1] = 0;
        merge[0] = 1;
    }
    a.table = {cycle_row(n), std::move(swap01), std::move(merge)};
    return a;
}

Automaton random_automaton(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1) throw std::invalid_argument("random_automaton needs n >= 1, k >= 1");
    Automaton a;
    a.num_states = n;
    a.letter_names = default_letter_names(k);
    SplitMix64 gen{seed};
    a.table.assign(k, std::vector<State>(n));
    for (auto& row : a.table)
        for (State& q : row) q = static_cast<State>(gen.below(static_cast<std::uint64_t>(n)));
    return a;
}

}  // namespace tca
