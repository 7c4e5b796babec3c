#ifndef TCA_SYNTH_HPP
#define TCA_SYNTH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tca/automaton.hpp"
#include "tca/pairgraph.hpp"

namespace tca {

// Builds a word whose kernel is exactly rho by successive 1-defect merges:
// starting from the empty word, repeatedly pick the lowest target class
// whose current image still has >= 2 states, merge its two smallest image
// states with a defect word, and append. Throws PairUnreachable when some
// required merge pair has no defect word (never happens on totally
// compatible automata). |result| <= (n-1) * C(n,2).
Word synthesize(const Automaton& a, const PairGraph& g, const Decision& d, const Partition& rho);
Word synthesize(const Automaton& a, const Partition& rho);

struct WitnessRow {
    Partition partition;
    std::optional<Word> word;  // verified compatible when set
    std::string error;         // reason when not
};

// One row per partition of the state set, in canonical enumeration order.
// Guarded by Bell(n) <= bell_cap; throws CapExceeded (from the oracle
// module) when over.
std::vector<WitnessRow> witness_table(const Automaton& a, std::uint64_t bell_cap = 1'000'000);

}  // namespace tca

#endif
