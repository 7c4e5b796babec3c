#include "tca/synth.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "tca/oracle.hpp"

namespace tca {

namespace {

// Lowest class of rho whose image under t still has two or more states;
// returns (class id, two smallest image states), or class id -1 when every
// class is synchronized already.
struct MergeChoice {
    int class_id = -1;
    State p = -1, q = -1;
};

MergeChoice pick_merge(const Partition& rho, const Transformation& t) {
    for (const auto& members : rho.classes()) {
        std::vector<State> images;
        images.reserve(members.size());
        for (State s : members) images.push_back(t.map[s]);
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        if (images.size() >= 2) return {rho.class_of[members.front()], images[0], images[1]};
    }
    return {};
}

}  // namespace

Word synthesize(const Automaton& a, const PairGraph& g, const Decision& d, const Partition& rho) {
    const int n = a.num_states;
    if (rho.size() != n) throw std::invalid_argument("partition size does not match automaton");

    Word w;
    Transformation t = Transformation::identity(n);
    const int steps = n - rho.num_classes;
    for (int step = 0; step < steps; ++step) {
        if (!kernel_of(t).refines(rho))
            throw std::logic_error("synthesis invariant broken: kernel no longer refines target");
        MergeChoice choice = pick_merge(rho, t);
        if (choice.class_id < 0)
            throw std::logic_error("synthesis invariant broken: no mergeable class left");
        Word v = find_defect_word(g, d, choice.p, choice.q);
        int rank_before = t.rank();
        for (int letter : v) {
            t = compose_letter(a, t, letter);
            w.push_back(letter);
        }
        if (t.rank() != rank_before - 1)
            throw std::logic_error("synthesis invariant broken: merge did not drop rank by one");
    }
    if (kernel_of(t) != rho)
        throw std::logic_error("synthesis invariant broken: final kernel differs from target");
    return w;
}

Word synthesize(const Automaton& a, const Partition& rho) {
    PairGraph g = build_pair_graph(a);
    Decision d = decide_totally_compatible(g);
    return synthesize(a, g, d, rho);
}

std::vector<WitnessRow> witness_table(const Automaton& a, std::uint64_t bell_cap) {
    const int n = a.num_states;
    if (n > 25 || bell_number(n) > bell_cap)
        throw CapExceeded(bell_cap, "partition count exceeds the witness-table cap");

    PairGraph g = build_pair_graph(a);
    Decision d = decide_totally_compatible(g);

    std::vector<WitnessRow> rows;
    rows.reserve(bell_number(n));
    for (const Partition& rho : all_partitions(n)) {
        WitnessRow row;
        row.partition = rho;
        try {
            Word w = synthesize(a, g, d, rho);
            if (!is_compatible(a, w, rho))
                throw std::logic_error("synthesized word failed verification");
            row.word = std::move(w);
        } catch (const PairUnreachable& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace tca
