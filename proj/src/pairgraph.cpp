#include "tca/pairgraph.hpp"

#include <cassert>
#include <deque>
#include <sstream>

namespace tca {

int PairGraph::vertex_of(State p, State q) const {
    assert(0 <= p && p < q && q < num_states);
    const int n = num_states;
    return p * (2 * n - p - 1) / 2 + (q - p - 1);
}

PairGraph build_pair_graph(const Automaton& a) {
    return build_pair_graph(a, classify_alphabet(a));
}

PairGraph build_pair_graph(const Automaton& a, const AlphabetClasses& classes) {
    const int n = a.num_states;
    PairGraph g;
    g.num_states = n;
    g.perm_letters = classes.permutation_letters;

    g.vertices.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q) g.vertices.emplace_back(p, q);
    const int nv = g.num_vertices();

    g.successor.assign(g.perm_letters.size(), {});
    g.reverse.assign(nv, {});
    for (std::size_t s = 0; s < g.perm_letters.size(); ++s) {
        const auto& row = a.table[g.perm_letters[s]];
        auto& succ = g.successor[s];
        succ.resize(nv);
        for (int v = 0; v < nv; ++v) {
            State p = row[g.vertices[v].first];
            State q = row[g.vertices[v].second];
            if (p > q) std::swap(p, q);
            int u = g.vertex_of(p, q);
            succ[v] = u;
            g.reverse[u].emplace_back(v, static_cast<int>(s));
        }
    }

    g.root_letter.assign(nv, -1);
    for (const auto& [letter, info] : classes.one_defect_letters) {
        int v = g.vertex_of(info.root.first, info.root.second);
        if (g.root_letter[v] < 0) g.root_letter[v] = letter;
    }
    for (int v = 0; v < nv; ++v)
        if (g.root_letter[v] >= 0) g.roots.push_back(v);
    return g;
}

Decision decide_totally_compatible(const PairGraph& g) {
    const int nv = g.num_vertices();
    Decision d;
    d.dist.assign(nv, -1);
    d.parent.assign(nv, {-1, -1});

    // Reverse BFS with the whole root set as source: one pass answers the
    // reachability question for every 2-subset at once.
    std::deque<int> queue;
    for (int v : g.roots) {
        d.dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& [v, s] : g.reverse[u]) {
            if (d.dist[v] >= 0) continue;
            d.dist[v] = d.dist[u] + 1;
            d.parent[v] = {u, g.perm_letters[s]};
            queue.push_back(v);
        }
    }

    for (int v = 0; v < nv; ++v)
        if (d.dist[v] < 0) d.witness_pairs.push_back(g.vertices[v]);
    d.totally_compatible = d.witness_pairs.empty();
    return d;
}

Decision decide_totally_compatible(const Automaton& a) {
    return decide_totally_compatible(build_pair_graph(a));
}

PairUnreachable::PairUnreachable(State p_, State q_)
    : std::runtime_error("no 1-defect word has root {" + std::to_string(p_ + 1) + "," +
                         std::to_string(q_ + 1) + "}"),
      p(p_),
      q(q_) {}

Word find_defect_word(const PairGraph& g, const Decision& d, State p, State q) {
    if (p > q) std::swap(p, q);
    assert(p != q);
    int v = g.vertex_of(p, q);
    if (d.dist[v] < 0) throw PairUnreachable(p, q);
    Word w;
    while (g.root_letter[v] < 0) {
        auto [next, letter] = d.parent[v];
        w.push_back(letter);
        v = next;
    }
    w.push_back(g.root_letter[v]);
    return w;
}

Word find_defect_word(const Automaton& a, State p, State q) {
    PairGraph g = build_pair_graph(a);
    Decision d = decide_totally_compatible(g);
    return find_defect_word(g, d, p, q);
}

std::string pair_graph_dot(const Automaton& a, const PairGraph& g) {
    std::ostringstream os;
    auto label = [&](int v) {
        const auto& [p, q] = g.vertices[v];
        return "\"{" + std::to_string(p + 1) + "," + std::to_string(q + 1) + "}\"";
    };
    os << "digraph pair_graph {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        os << "  " << label(v);
        if (g.root_letter[v] >= 0) os << " [peripheries=2]";
        os << ";\n";
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        for (std::size_t s = 0; s < g.perm_letters.size(); ++s)
            os << "  " << label(v) << " -> " << label(g.successor[s][v]) << " [label=\""
               << a.letter_names[g.perm_letters[s]] << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace tca
