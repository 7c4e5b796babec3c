#ifndef TCA_FAMILIES_HPP
#define TCA_FAMILIES_HPP

#include <cstdint>

#include "tca/automaton.hpp"

namespace tca {

// Three states, letters c (the 3-cycle 1->2->3->1) and t (1->1, 2->1,
// 3->3). Totally compatible.
Automaton automaton_T();

// Cerny automaton on n >= 2 states: a is the full cycle, b sends 1 to 2 and
// fixes the rest.
Automaton cerny(int n);

// One merge letter t{p}_{q} per pair p < q sending q to p and fixing the
// rest; no permutation letters, every pair is a root. n >= 2.
Automaton pair_merge(int n);

// Classical generators of the full transformation monoid: full cycle,
// transposition of the first two states, and the merge of state 1 onto 2.
Automaton full_monoid(int n);

// k uniformly random rows from a splitmix64 stream seeded with seed; the
// same (n, k, seed) yields the same automaton on every platform.
Automaton random_automaton(int n, int k, std::uint64_t seed);

}  // namespace tca

#endif
