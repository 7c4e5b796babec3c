#ifndef TCA_AUTOMATON_HPP
#define TCA_AUTOMATON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tca {

// States and letters are dense 0-based indices internally; all file and CLI
// I/O is 1-based.
using State = int;

// A word is a sequence of letter indices into the automaton's alphabet.
// The empty vector is the empty word.
using Word = std::vector<int>;

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A complete deterministic automaton (Q, Sigma, delta) with no initial or
// final states: each letter is a total function on the state set.
struct Automaton {
    int num_states = 0;
    std::vector<std::string> letter_names;
    std::vector<std::vector<State>> table;  // table[letter][state] = state . letter

    int num_letters() const { return static_cast<int>(letter_names.size()); }

    const std::vector<State>& row(int letter) const { return table[letter]; }

    bool operator==(const Automaton&) const = default;
};

// Throws ValidationError unless the automaton satisfies all invariants:
// n >= 1, unique well-formed letter names, one row of length n per letter,
// every entry in [0, n).
void validate(const Automaton& a);

// A total map on the state set, the action of some word.
struct Transformation {
    std::vector<State> map;

    static Transformation identity(int n);

    int size() const { return static_cast<int>(map.size()); }
    State operator()(State q) const { return map[q]; }

    // Number of distinct images.
    int rank() const;

    bool operator==(const Transformation&) const = default;
};

// A set partition of {0,..,n-1} in canonical restricted-growth form: class
// ids are exactly {0,..,k-1} and scanning states upward, the first state of
// class c precedes the first state of class c+1. Equality is structural.
struct Partition {
    std::vector<int> class_of;
    int num_classes = 0;

    static Partition discrete(int n);
    static Partition single_class(int n);

    // Relabels an arbitrary assignment into canonical form.
    static Partition canonicalized(const std::vector<int>& labels);

    int size() const { return static_cast<int>(class_of.size()); }

    // Classes in id order, members ascending.
    std::vector<std::vector<State>> classes() const;

    // True when every class of *this is contained in a class of coarser.
    bool refines(const Partition& coarser) const;

    bool operator==(const Partition&) const = default;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

struct TransformationHash {
    std::size_t operator()(const Transformation& t) const;
};

State apply(const Automaton& a, const Word& w, State q);

Transformation transformation_of(const Automaton& a, const Word& w);

// Applies the letter after t: result(q) = row[t(q)].
Transformation compose_letter(const Automaton& a, const Transformation& t, int letter);

// Image of the state set P under w, sorted ascending. P must be nonempty.
std::vector<State> image_set(const Automaton& a, const Word& w, const std::vector<State>& p);

// Partition of the domain by equal image.
Partition kernel_of(const Transformation& t);

Partition kernel(const Automaton& a, const Word& w);

// ker(w) == rho, checked by kernel equality.
bool is_compatible(const Automaton& a, const Word& w, const Partition& rho);

// Same predicate, decided classwise: w synchronizes each class of rho and
// distinct classes have distinct images. The two routes must always agree.
bool is_compatible_classwise(const Automaton& a, const Word& w, const Partition& rho);

}  // namespace tca

#endif
