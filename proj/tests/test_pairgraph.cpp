#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "tca/families.hpp"
#include "tca/io.hpp"
#include "tca/letters.hpp"
#include "tca/oracle.hpp"
#include "tca/pairgraph.hpp"

using namespace tca;
using test::word;

TEST_CASE("pair graph of automaton T") {
    Automaton t = automaton_T();
    PairGraph g = build_pair_graph(t);
    REQUIRE(g.num_vertices() == 3);
    CHECK(g.vertices == std::vector<std::pair<State, State>>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(g.perm_letters == std::vector<int>{0});

    int v01 = g.vertex_of(0, 1), v02 = g.vertex_of(0, 2), v12 = g.vertex_of(1, 2);
    CHECK(g.successor[0][v01] == v12);  // {1,2}.c = {2,3}
    CHECK(g.successor[0][v12] == v02);  // {2,3}.c = {1,3}
    CHECK(g.successor[0][v02] == v01);  // {1,3}.c = {1,2}
    CHECK(g.roots == std::vector<int>{v01});
    CHECK(g.root_letter[v01] == 1);
}

TEST_CASE("pair graph of cerny(4) splits into two cycles") {
    Automaton c4 = cerny(4);
    PairGraph g = build_pair_graph(c4);
    REQUIRE(g.num_vertices() == 6);
    auto v = [&](State p, State q) { return g.vertex_of(p, q); };
    CHECK(g.successor[0][v(0, 1)] == v(1, 2));
    CHECK(g.successor[0][v(1, 2)] == v(2, 3));
    CHECK(g.successor[0][v(2, 3)] == v(0, 3));
    CHECK(g.successor[0][v(0, 3)] == v(0, 1));
    CHECK(g.successor[0][v(0, 2)] == v(1, 3));
    CHECK(g.successor[0][v(1, 3)] == v(0, 2));
    CHECK(g.roots == std::vector<int>{v(0, 1)});
}

TEST_CASE("permutation letters act as bijections on vertices") {
    for (const Automaton& a : {automaton_T(), cerny(7), full_monoid(5)}) {
        PairGraph g = build_pair_graph(a);
        for (const auto& succ : g.successor) {
            std::vector<char> hit(g.num_vertices(), 0);
            for (int u : succ) hit[u] = 1;
            CHECK(std::count(hit.begin(), hit.end(), 1) == g.num_vertices());
        }
    }
}

TEST_CASE("an alphabet without permutations yields an edgeless graph") {
    Automaton a = pair_merge(4);
    PairGraph g = build_pair_graph(a);
    CHECK(g.perm_letters.empty());
    CHECK(g.successor.empty());
    CHECK(g.roots.size() == 6);  // every pair is a root
}

TEST_CASE("decide: T yes, cerny(4) no, pair_merge(5) yes") {
    CHECK(decide_totally_compatible(automaton_T()).totally_compatible);

    Decision d = decide_totally_compatible(cerny(4));
    CHECK_FALSE(d.totally_compatible);
    CHECK(d.witness_pairs == std::vector<std::pair<State, State>>{{0, 2}, {1, 3}});

    CHECK(decide_totally_compatible(pair_merge(5)).totally_compatible);
}

TEST_CASE("single-state automata are trivially totally compatible") {
    Automaton a;
    a.num_states = 1;
    a.letter_names = {"a"};
    a.table = {{0}};
    Decision d = decide_totally_compatible(a);
    CHECK(d.totally_compatible);
    CHECK(d.witness_pairs.empty());
}

TEST_CASE("two-state automata are totally compatible iff some letter merges") {
    Automaton merging;
    merging.num_states = 2;
    merging.letter_names = {"a", "b"};
    merging.table = {{1, 0}, {0, 0}};
    CHECK(decide_totally_compatible(merging).totally_compatible);

    Automaton permutations_only;
    permutations_only.num_states = 2;
    permutations_only.letter_names = {"a", "b"};
    permutations_only.table = {{1, 0}, {0, 1}};
    CHECK_FALSE(decide_totally_compatible(permutations_only).totally_compatible);
}

TEST_CASE("defect words of automaton T read straight off the table") {
    Automaton t = automaton_T();
    CHECK(find_defect_word(t, 0, 1) == word(t, "t"));
    CHECK(find_defect_word(t, 0, 2) == word(t, "ct"));
    CHECK(find_defect_word(t, 1, 2) == word(t, "cct"));
}

TEST_CASE("unreachable pairs raise PairUnreachable") {
    Automaton c4 = cerny(4);
    CHECK_THROWS_AS((void)find_defect_word(c4, 0, 2), PairUnreachable);
    try {
        (void)find_defect_word(c4, 0, 2);
    } catch (const PairUnreachable& e) {
        CHECK(e.p == 0);
        CHECK(e.q == 2);
    }
}

TEST_CASE("every reachable pair yields a verified defect word") {
    test::TestRng rng{3};
    std::vector<Automaton> corpus{automaton_T(), cerny(2),       cerny(3),       cerny(6),
                                  pair_merge(4), full_monoid(4), full_monoid(5)};
    for (int i = 0; i < 30; ++i)
        corpus.push_back(random_automaton(2 + rng.below(5), 1 + rng.below(4), rng.next()));

    for (const Automaton& a : corpus) {
        PairGraph g = build_pair_graph(a);
        Decision d = decide_totally_compatible(g);
        for (State p = 0; p < a.num_states; ++p) {
            for (State q = p + 1; q < a.num_states; ++q) {
                if (d.dist[g.vertex_of(p, q)] < 0) continue;
                Word w = find_defect_word(g, d, p, q);
                CHECK(w.size() <= static_cast<std::size_t>(g.num_vertices()));
                LetterClass lc = classify_word(a, w);
                REQUIRE(lc.kind == LetterKind::one_defect);
                CHECK(lc.defect->root == std::pair<State, State>{p, q});
            }
        }
    }
}

TEST_CASE("decision and extracted words are deterministic") {
    Automaton a = full_monoid(5);
    PairGraph g1 = build_pair_graph(a);
    PairGraph g2 = build_pair_graph(a);
    Decision d1 = decide_totally_compatible(g1);
    Decision d2 = decide_totally_compatible(g2);
    CHECK(d1.dist == d2.dist);
    CHECK(d1.parent == d2.parent);
    for (State p = 0; p < a.num_states; ++p)
        for (State q = p + 1; q < a.num_states; ++q)
            CHECK(find_defect_word(g1, d1, p, q) == find_defect_word(g2, d2, p, q));
}

TEST_CASE("DOT export of T is byte-stable") {
    Automaton t = automaton_T();
    PairGraph g = build_pair_graph(t);
    std::string expected =
        "digraph pair_graph {\n"
        "  rankdir=LR;\n"
        "  node [shape=circle];\n"
        "  \"{1,2}\" [peripheries=2];\n"
        "  \"{1,3}\";\n"
        "  \"{2,3}\";\n"
        "  \"{1,2}\" -> \"{2,3}\" [label=\"c\"];\n"
        "  \"{1,3}\" -> \"{1,2}\" [label=\"c\"];\n"
        "  \"{2,3}\" -> \"{1,3}\" [label=\"c\"];\n"
        "}\n";
    CHECK(pair_graph_dot(t, g) == expected);
    CHECK(pair_graph_dot(t, g) == pair_graph_dot(t, build_pair_graph(t)));
}

TEST_CASE("decision agrees with the oracle on every tiny automaton") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 2; ++k) {
            test::for_each_automaton(n, k, [](const Automaton& a) {
                bool fast = decide_totally_compatible(a).totally_compatible;
                bool slow = oracle_totally_compatible(a).totally_compatible;
                CHECK(fast == slow);
            });
        }
    }
}
