#include "tca/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tca/automaton.hpp"
#include "tca/bench.hpp"
#include "tca/families.hpp"
#include "tca/io.hpp"
#include "tca/letters.hpp"
#include "tca/oracle.hpp"
#include "tca/pairgraph.hpp"
#include "tca/synth.hpp"

namespace tca {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kUsage = 2;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError(0, "cannot write '" + path + "'");
    file << text;
}

// Words and verdicts are re-verified before they are printed; a failure here
// is a bug, not bad input.
void self_check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("self-check failed: " + what);
}

std::string pair_str(State p, State q) {
    return "{" + std::to_string(p + 1) + "," + std::to_string(q + 1) + "}";
}

json pair_json(const std::pair<State, State>& pq) {
    return json::array({pq.first + 1, pq.second + 1});
}

json letters_json(const Automaton& a, const AlphabetClasses& cls) {
    json perm = json::array();
    json defect = json::array();
    json low = json::array();
    for (int i = 0; i < a.num_letters(); ++i) {
        const LetterClass& lc = cls.by_letter[i];
        switch (lc.kind) {
            case LetterKind::permutation:
                perm.push_back(a.letter_names[i]);
                break;
            case LetterKind::one_defect:
                defect.push_back(json{{"name", a.letter_names[i]},
                                      {"excluded", lc.defect->excluded + 1},
                                      {"duplicated", lc.defect->duplicated + 1},
                                      {"root", pair_json(lc.defect->root)}});
                break;
            case LetterKind::low_rank:
                low.push_back(json{{"name", a.letter_names[i]}, {"rank", lc.rank}});
                break;
        }
    }
    return json{{"permutation", perm}, {"one_defect", defect}, {"low_rank", low}};
}

std::string letter_line(const Automaton& a, int i, const LetterClass& lc) {
    switch (lc.kind) {
        case LetterKind::permutation:
            return a.letter_names[i] + ": permutation";
        case LetterKind::one_defect:
            return a.letter_names[i] + ": 1-defect exc=" + std::to_string(lc.defect->excluded + 1) +
                   " dup=" + std::to_string(lc.defect->duplicated + 1) + " root=" +
                   pair_str(lc.defect->root.first, lc.defect->root.second);
        case LetterKind::low_rank:
            return a.letter_names[i] + ": rank " + std::to_string(lc.rank);
    }
    return {};
}

std::string summary_line(const Automaton& a, const AlphabetClasses& cls) {
    return "states: " + std::to_string(a.num_states) +
           ", letters: " + std::to_string(a.num_letters()) +
           " (permutations: " + std::to_string(cls.permutation_letters.size()) +
           ", 1-defects: " + std::to_string(cls.one_defect_letters.size()) + ", lower rank: " +
           std::to_string(a.num_letters() - cls.permutation_letters.size() -
                          cls.one_defect_letters.size()) +
           ")";
}

void emit_json(json doc, bool timings, double parse_ms, double analysis_ms, std::ostream& out) {
    if (timings)
        doc["timings_ms"] = json{{"parse", parse_ms}, {"analysis", analysis_ms}};
    out << doc.dump(2) << "\n";
}

struct CommonOpts {
    std::string file;
    bool as_json = false;
    bool timings = false;
};

int cmd_classify(const CommonOpts& opt, std::ostream& out) {
    auto t0 = Clock::now();
    Automaton a = parse_automaton(read_input(opt.file));
    double parse_ms = ms_since(t0);
    auto t1 = Clock::now();
    AlphabetClasses cls = classify_alphabet(a);
    double analysis_ms = ms_since(t1);

    if (opt.as_json) {
        json doc{{"command", "classify"},
                 {"states", a.num_states},
                 {"letters", letters_json(a, cls)}};
        emit_json(std::move(doc), opt.timings, parse_ms, analysis_ms, out);
    } else {
        out << summary_line(a, cls) << "\n";
        for (int i = 0; i < a.num_letters(); ++i)
            out << letter_line(a, i, cls.by_letter[i]) << "\n";
    }
    return kOk;
}

int cmd_decide(const CommonOpts& opt, const std::string& dot_path, bool show_pairs,
               std::ostream& out) {
    auto t0 = Clock::now();
    Automaton a = parse_automaton(read_input(opt.file));
    double parse_ms = ms_since(t0);
    auto t1 = Clock::now();
    AlphabetClasses cls = classify_alphabet(a);
    PairGraph g = build_pair_graph(a, cls);
    Decision d = decide_totally_compatible(g);
    double analysis_ms = ms_since(t1);

    if (!dot_path.empty()) write_output(dot_path, pair_graph_dot(a, g), out);

    if (opt.as_json) {
        json pairs = json::array();
        for (const auto& pq : d.witness_pairs) pairs.push_back(pair_json(pq));
        json doc{{"command", "decide"},
                 {"states", a.num_states},
                 {"letters", letters_json(a, cls)},
                 {"totally_compatible", d.totally_compatible},
                 {"witness_pairs", pairs}};
        emit_json(std::move(doc), opt.timings, parse_ms, analysis_ms, out);
    } else {
        out << summary_line(a, cls) << "\n";
        if (d.totally_compatible) {
            out << "verdict: totally compatible\n";
        } else {
            out << "verdict: not totally compatible (" << d.witness_pairs.size() << " of "
                << g.num_vertices() << " pairs cannot reach a root)\n";
            if (show_pairs) {
                out << "pairs:";
                for (const auto& [p, q] : d.witness_pairs) out << " " << pair_str(p, q);
                out << "\n";
            }
        }
    }
    return d.totally_compatible ? kOk : kPropertyFails;
}

int cmd_defect_word(const CommonOpts& opt, int p1, int q1, std::ostream& out, std::ostream& err) {
    auto t0 = Clock::now();
    Automaton a = parse_automaton(read_input(opt.file));
    double parse_ms = ms_since(t0);
    if (p1 < 1 || p1 > a.num_states || q1 < 1 || q1 > a.num_states)
        throw std::invalid_argument("states must be in 1.." + std::to_string(a.num_states));
    if (p1 == q1) throw std::invalid_argument("the two states must differ");
    State p = p1 - 1, q = q1 - 1;

    auto t1 = Clock::now();
    Word w;
    try {
        w = find_defect_word(a, p, q);
    } catch (const PairUnreachable& e) {
        err << "error: " << e.what() << "; the automaton is not totally compatible\n";
        return kPropertyFails;
    }
    double analysis_ms = ms_since(t1);

    LetterClass lc = classify_word(a, w);
    self_check(lc.kind == LetterKind::one_defect &&
                   lc.defect->root == std::make_pair(std::min(p, q), std::max(p, q)),
               "defect word does not have the requested root");

    if (opt.as_json) {
        json doc{{"command", "defect-word"},
                 {"pair", json::array({std::min(p1, q1), std::max(p1, q1)})},
                 {"word", word_to_string(a, w)},
                 {"length", w.size()},
                 {"excluded", lc.defect->excluded + 1},
                 {"duplicated", lc.defect->duplicated + 1}};
        emit_json(std::move(doc), opt.timings, parse_ms, analysis_ms, out);
    } else {
        out << "word: " << word_to_string(a, w) << "\n";
        out << "length: " << w.size() << "\n";
        out << "root: " << pair_str(std::min(p, q), std::max(p, q))
            << "  excluded: " << lc.defect->excluded + 1
            << "  duplicated: " << lc.defect->duplicated + 1 << "\n";
    }
    return kOk;
}

int cmd_synthesize(const CommonOpts& opt, const std::string& partition_text, std::ostream& out,
                   std::ostream& err) {
    auto t0 = Clock::now();
    Automaton a = parse_automaton(read_input(opt.file));
    Partition rho = parse_partition(partition_text, a.num_states);
    double parse_ms = ms_since(t0);

    auto t1 = Clock::now();
    Word w;
    try {
        w = synthesize(a, rho);
    } catch (const PairUnreachable& e) {
        err << "error: synthesis failed, " << e.what()
            << "; the automaton is not totally compatible\n";
        return kPropertyFails;
    }
    double analysis_ms = ms_since(t1);

    self_check(is_compatible(a, w, rho) && is_compatible_classwise(a, w, rho),
               "synthesized word is not compatible with the partition");

    if (opt.as_json) {
        json doc{{"command", "synthesize"},
                 {"partition", partition_to_string(rho)},
                 {"word", word_to_string(a, w)},
                 {"length", w.size()}};
        emit_json(std::move(doc), opt.timings, parse_ms, analysis_ms, out);
    } else {
        out << "partition: " << partition_to_string(rho) << "\n";
        out << "word: " << word_to_string(a, w) << "\n";
        out << "length: " << w.size() << "\n";
    }
    return kOk;
}

int cmd_witness(const CommonOpts& opt, std::uint64_t cap, std::ostream& out) {
    auto t0 = Clock::now();
    Automaton a = parse_automaton(read_input(opt.file));
    double parse_ms = ms_since(t0);

    auto t1 = Clock::now();
    std::vector<WitnessRow> rows = witness_table(a, cap);
    double analysis_ms = ms_since(t1);

    std::size_t failures = 0;
    for (const auto& row : rows) {
        if (row.word)
            self_check(is_compatible(a, *row.word, row.partition),
                       "witness word is not compatible with its partition");
        else
            ++failures;
    }

    if (opt.as_json) {
        json table = json::array();
        for (const auto& row : rows) {
            json entry{{"partition", partition_to_string(row.partition)}};
            if (row.word) {
                entry["word"] = word_to_string(a, *row.word);
                entry["length"] = row.word->size();
            } else {
                entry["error"] = row.error;
            }
            table.push_back(std::move(entry));
        }
        json doc{{"command", "witness"},
                 {"states", a.num_states},
                 {"partitions", rows.size()},
                 {"failures", failures},
                 {"rows", table}};
        emit_json(std::move(doc), opt.timings, parse_ms, analysis_ms, out);
    } else {
        std::size_t width = 0;
        for (const auto& row : rows)
            width = std::max(width, partition_to_string(row.partition).size());
        out << "partitions: " << rows.size() << "\n";
        for (const auto& row : rows) {
            std::string ps = partition_to_string(row.partition);
            out << ps << std::string(width - ps.size() + 2, ' ');
            if (row.word)
                out << word_to_string(a, *row.word) << "\n";
            else
                out << "-- " << row.error << "\n";
        }
        if (failures == 0) {
            out << "all " << rows.size() << " partitions have verified words\n";
        } else {
            out << failures << " of " << rows.size()
                << " partitions have no word from this construction\n";
            out << "note: on non-totally-compatible automata the construction is sound but"
                   " not complete; use 'oracle tc' for ground truth on small automata\n";
        }
    }
    return failures == 0 ? kOk : kPropertyFails;
}

int cmd_oracle(const CommonOpts& opt, const std::string& mode, std::uint64_t cap,
               std::ostream& out) {
    auto t0 = Clock::now();
    Automaton a = parse_automaton(read_input(opt.file));
    double parse_ms = ms_since(t0);
    auto t1 = Clock::now();

    bool holds = false;
    json doc{{"command", "oracle"}, {"mode", mode}, {"states", a.num_states}};
    std::ostringstream text;

    if (mode == "tc") {
        OracleVerdict verdict = oracle_totally_compatible(a, cap);
        holds = verdict.totally_compatible;
        json missing = json::array();
        for (const auto& p : verdict.missing) missing.push_back(partition_to_string(p));
        doc["totally_compatible"] = holds;
        doc["missing"] = std::move(missing);
        text << "totally compatible (oracle): " << (holds ? "yes" : "no") << "\n";
        if (!holds) {
            text << "missing " << verdict.missing.size() << " partitions:\n";
            for (const auto& p : verdict.missing) text << "  " << partition_to_string(p) << "\n";
        }
    } else if (mode == "reach") {
        holds = oracle_completely_reachable(a, cap);
        doc["completely_reachable"] = holds;
        text << "completely reachable (oracle): " << (holds ? "yes" : "no") << "\n";
    } else if (mode == "sync") {
        SyncResult sync = oracle_synchronizing(a, cap);
        holds = sync.synchronizing;
        doc["synchronizing"] = holds;
        if (sync.reset_word) {
            self_check(transformation_of(a, *sync.reset_word).rank() == 1,
                       "reset word does not have rank 1");
            doc["reset_word"] = word_to_string(a, *sync.reset_word);
            doc["reset_length"] = sync.reset_word->size();
            text << "synchronizing (oracle): yes\n"
                 << "reset word: " << word_to_string(a, *sync.reset_word) << " (length "
                 << sync.reset_word->size() << ")\n";
        } else {
            text << "synchronizing (oracle): no\n";
        }
    } else {  // minimal
        MinimalityReport report = check_minimal_totally_compatible(a, cap);
        holds = report.minimal();
        doc["totally_compatible"] = report.totally_compatible;
        doc["bell"] = report.bell;
        doc["monoid_elements"] = report.monoid_elements;
        doc["semigroup_elements"] = report.semigroup_elements;
        doc["minimal_with_identity"] = report.minimal_with_identity;
        doc["minimal_without_identity"] = report.minimal_without_identity;
        text << "totally compatible (oracle): " << (report.totally_compatible ? "yes" : "no")
             << "\n";
        text << "monoid size (with the empty word): " << report.monoid_elements << "\n";
        text << "semigroup size (nonempty words): " << report.semigroup_elements << "\n";
        text << "Bell(" << a.num_states << ") = " << report.bell << "\n";
        if (holds)
            text << "minimal: yes ("
                 << (report.minimal_with_identity ? "counting the identity"
                                                  : "not counting the identity")
                 << ")\n";
        else
            text << "minimal: no (neither convention)\n";
    }

    double analysis_ms = ms_since(t1);
    if (opt.as_json)
        emit_json(std::move(doc), opt.timings, parse_ms, analysis_ms, out);
    else
        out << text.str();
    return holds ? kOk : kPropertyFails;
}

int cmd_gen(const std::vector<std::string>& spec, const std::string& format,
            const std::string& out_path, std::ostream& out) {
    auto need = [&](std::size_t count) {
        if (spec.size() != count)
            throw std::invalid_argument("bad gen arguments; see 'tca gen --help'");
    };
    auto arg_int = [&](std::size_t i) { return std::stoi(spec.at(i)); };

    Automaton a;
    if (spec.empty()) throw std::invalid_argument("gen needs a family");
    const std::string& family = spec[0];
    if (family == "t") {
        need(1);
        a = automaton_T();
    } else if (family == "cerny") {
        need(2);
        a = cerny(arg_int(1));
    } else if (family == "pair-merge") {
        need(2);
        a = pair_merge(arg_int(1));
    } else if (family == "full") {
        need(2);
        a = full_monoid(arg_int(1));
    } else if (family == "random") {
        need(4);
        a = random_automaton(arg_int(1), arg_int(2), std::stoull(spec.at(3)));
    } else {
        throw std::invalid_argument("unknown family '" + family +
                                    "' (expected t, cerny, pair-merge, full or random)");
    }
    write_output(out_path, format == "json" ? automaton_to_json(a) : serialize_automaton(a), out);
    return kOk;
}

int cmd_bench(const std::string& sizes_csv, int letters, std::uint64_t seed, int reps,
              const std::string& family, bool as_json, std::ostream& out) {
    std::vector<int> sizes;
    std::istringstream is(sizes_csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int n = std::stoi(tok);
        if (n < 2) throw std::invalid_argument("bench sizes must be >= 2");
        sizes.push_back(n);
    }
    BenchFamily fam =
        family == "cerny" ? BenchFamily::cerny_cycle : BenchFamily::random_table;
    BenchResult result = bench_decision(sizes, letters, seed, reps, fam);

    if (as_json) {
        json points = json::array();
        for (const auto& pt : result.points)
            points.push_back(json{{"n", pt.n}, {"ms", pt.millis}});
        json doc{{"command", "bench"}, {"family", family},   {"letters", letters},
                 {"seed", seed},       {"reps", reps},       {"points", points},
                 {"loglog_slope", result.loglog_slope}};
        out << doc.dump(2) << "\n";
    } else {
        out << "family: " << family << ", letters: " << letters << ", seed: " << seed
            << ", reps: " << reps << "\n";
        out << std::setw(8) << "n" << std::setw(14) << "ms" << "\n";
        out << std::fixed << std::setprecision(3);
        for (const auto& pt : result.points)
            out << std::setw(8) << pt.n << std::setw(14) << pt.millis << "\n";
        out << "log-log slope: " << std::setprecision(2) << result.loglog_slope << "\n";
        out.unsetf(std::ios::fixed);
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Totally compatible automata: decision procedure, compatible-word synthesis,"
                 " brute-force oracle"};
    app.name("tca");
    app.require_subcommand(1);
    int rc = kOk;

    CommonOpts classify_opt;
    auto* classify_cmd = app.add_subcommand("classify", "Classify every letter by rank");
    classify_cmd->add_option("file", classify_opt.file, "automaton file, '-' for stdin")
        ->required();
    classify_cmd->add_flag("--json", classify_opt.as_json, "machine-readable output");
    classify_cmd->add_flag("--timings", classify_opt.timings, "include timings in JSON output");
    classify_cmd->callback([&] { rc = cmd_classify(classify_opt, out); });

    CommonOpts decide_opt;
    std::string decide_dot;
    bool decide_pairs = false;
    auto* decide_cmd =
        app.add_subcommand("decide", "Decide whether the automaton is totally compatible");
    decide_cmd->add_option("file", decide_opt.file, "automaton file, '-' for stdin")->required();
    decide_cmd->add_option("--dot", decide_dot, "write the pair graph as DOT to this path");
    decide_cmd->add_flag("--witness-pairs", decide_pairs, "list the pairs that reach no root");
    decide_cmd->add_flag("--json", decide_opt.as_json, "machine-readable output");
    decide_cmd->add_flag("--timings", decide_opt.timings, "include timings in JSON output");
    decide_cmd->callback([&] { rc = cmd_decide(decide_opt, decide_dot, decide_pairs, out); });

    CommonOpts defect_opt;
    int defect_p = 0, defect_q = 0;
    auto* defect_cmd = app.add_subcommand(
        "defect-word", "Find a 1-defect word whose root is the given pair of states");
    defect_cmd->add_option("file", defect_opt.file, "automaton file, '-' for stdin")->required();
    defect_cmd->add_option("p", defect_p, "first state (1-based)")->required();
    defect_cmd->add_option("q", defect_q, "second state (1-based)")->required();
    defect_cmd->add_flag("--json", defect_opt.as_json, "machine-readable output");
    defect_cmd->add_flag("--timings", defect_opt.timings, "include timings in JSON output");
    defect_cmd->callback([&] { rc = cmd_defect_word(defect_opt, defect_p, defect_q, out, err); });

    CommonOpts synth_opt;
    std::string synth_partition;
    auto* synth_cmd =
        app.add_subcommand("synthesize", "Construct a word whose kernel is the given partition");
    synth_cmd->add_option("file", synth_opt.file, "automaton file, '-' for stdin")->required();
    synth_cmd->add_option("partition", synth_partition, "target partition, e.g. \"1,3|2\"")
        ->required();
    synth_cmd->add_flag("--json", synth_opt.as_json, "machine-readable output");
    synth_cmd->add_flag("--timings", synth_opt.timings, "include timings in JSON output");
    synth_cmd->callback([&] { rc = cmd_synthesize(synth_opt, synth_partition, out, err); });

    CommonOpts witness_opt;
    std::uint64_t witness_cap = 1'000'000;
    auto* witness_cmd = app.add_subcommand(
        "witness", "One compatible word per partition of the state set");
    witness_cmd->add_option("file", witness_opt.file, "automaton file, '-' for stdin")->required();
    witness_cmd->add_option("--cap", witness_cap, "largest allowed partition count");
    witness_cmd->add_flag("--json", witness_opt.as_json, "machine-readable output");
    witness_cmd->add_flag("--timings", witness_opt.timings, "include timings in JSON output");
    witness_cmd->callback([&] { rc = cmd_witness(witness_opt, witness_cap, out); });

    CommonOpts oracle_opt;
    std::string oracle_mode;
    std::uint64_t oracle_cap = kDefaultMonoidCap;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "Brute-force ground truth by transformation-monoid enumeration");
    oracle_cmd->add_option("file", oracle_opt.file, "automaton file, '-' for stdin")->required();
    oracle_cmd->add_option("mode", oracle_mode, "tc | reach | sync | minimal")
        ->required()
        ->check(CLI::IsMember({"tc", "reach", "sync", "minimal"}));
    oracle_cmd->add_option("--cap", oracle_cap, "largest allowed monoid size");
    oracle_cmd->add_flag("--json", oracle_opt.as_json, "machine-readable output");
    oracle_cmd->add_flag("--timings", oracle_opt.timings, "include timings in JSON output");
    oracle_cmd->callback([&] { rc = cmd_oracle(oracle_opt, oracle_mode, oracle_cap, out); });

    std::vector<std::string> gen_spec;
    std::string gen_format = "text";
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand(
        "gen", "Generate an automaton: t | cerny N | pair-merge N | full N | random N K SEED");
    gen_cmd->add_option("spec", gen_spec, "family and parameters")->required()->expected(-1);
    gen_cmd->add_option("--format", gen_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    gen_cmd->add_option("-o,--output", gen_out, "write to this path instead of stdout");
    gen_cmd->callback([&] { rc = cmd_gen(gen_spec, gen_format, gen_out, out); });

    std::string bench_sizes = "125,250,500,1000";
    int bench_letters = 3;
    std::uint64_t bench_seed = 42;
    int bench_reps = 5;
    std::string bench_family = "random";
    bool bench_json = false;
    auto* bench_cmd =
        app.add_subcommand("bench", "Time the decision procedure over a grid of sizes");
    bench_cmd->add_option("--sizes", bench_sizes, "comma-separated state counts");
    bench_cmd->add_option("--letters", bench_letters, "alphabet size for random tables");
    bench_cmd->add_option("--seed", bench_seed, "random family seed");
    bench_cmd->add_option("--reps", bench_reps, "repetitions per size (best is kept)");
    bench_cmd->add_option("--family", bench_family, "random or cerny")
        ->check(CLI::IsMember({"random", "cerny"}));
    bench_cmd->add_flag("--json", bench_json, "machine-readable output");
    bench_cmd->callback([&] {
        rc = cmd_bench(bench_sizes, bench_letters, bench_seed, bench_reps, bench_family,
                       bench_json, out);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kUsage;
    }
    return rc;
}

}  // namespace tca
