#ifndef TCA_PAIRGRAPH_HPP
#define TCA_PAIRGRAPH_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tca/automaton.hpp"
#include "tca/letters.hpp"

namespace tca {

// Directed labeled graph on the 2-subsets of the state set. Vertices are
// pairs (p,q), p < q, in lexicographic order; each permutation letter maps
// every vertex to its image pair. Root vertices are the roots of the
// 1-defect letters.
struct PairGraph {
    int num_states = 0;
    std::vector<std::pair<State, State>> vertices;
    std::vector<int> perm_letters;  // alphabet indices of permutation letters

    // successor[s][v]: image of vertex v under perm_letters[s]; a bijection
    // on vertices for each s.
    std::vector<std::vector<int>> successor;

    // reverse[u]: (v, s) pairs with successor[s][v] == u, ordered by (s, v).
    std::vector<std::vector<std::pair<int, int>>> reverse;

    // root_letter[v]: lowest 1-defect letter index whose root is v, or -1.
    std::vector<int> root_letter;
    std::vector<int> roots;  // vertex ids with root_letter >= 0, ascending

    int num_vertices() const { return static_cast<int>(vertices.size()); }

    // Lexicographic pair index; requires p < q.
    int vertex_of(State p, State q) const;
};

PairGraph build_pair_graph(const Automaton& a);
PairGraph build_pair_graph(const Automaton& a, const AlphabetClasses& classes);

// Outcome of the reachability test: the automaton is totally compatible iff
// every vertex has a permutation-labeled path into the root set. Computed by
// one reverse BFS that treats the root set as a single source; dist/parent
// double as the extraction table for defect words.
struct Decision {
    bool totally_compatible = true;
    std::vector<std::pair<State, State>> witness_pairs;  // unreachable, canonical order
    std::vector<int> dist;                               // -1 when unreachable
    std::vector<std::pair<int, int>> parent;             // (next vertex, alphabet letter), (-1,-1) at roots
};

Decision decide_totally_compatible(const PairGraph& g);
Decision decide_totally_compatible(const Automaton& a);

struct PairUnreachable : std::runtime_error {
    State p, q;  // 0-based
    PairUnreachable(State p_, State q_);
};

// Shortest permutation path from {p,q} into the root set followed by the
// matching 1-defect letter; the result is a 1-defect word with root {p,q}.
// Throws PairUnreachable when no path exists.
Word find_defect_word(const PairGraph& g, const Decision& d, State p, State q);
Word find_defect_word(const Automaton& a, State p, State q);

// DOT rendering with 1-based "{p,q}" vertex labels, letter-name edge labels
// and doubled borders on root vertices. Output is byte-stable.
std::string pair_graph_dot(const Automaton& a, const PairGraph& g);

}  // namespace tca

#endif
