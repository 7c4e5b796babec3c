#ifndef TCA_ORACLE_HPP
#define TCA_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "tca/automaton.hpp"

namespace tca {

struct CapExceeded : std::runtime_error {
    std::uint64_t cap;
    explicit CapExceeded(std::uint64_t cap_, const std::string& what_);
};

inline constexpr std::size_t kDefaultMonoidCap = 2'000'000;

// Exhaustive census of the transformation monoid generated by the alphabet
// (the identity of the empty word included). Ground truth for the
// polynomial decision procedure on small automata.
struct MonoidCensus {
    std::vector<Transformation> elements;       // BFS order; elements[0] = identity
    std::vector<std::pair<int, int>> parents;   // (element index, letter), (-1,-1) at identity
    std::unordered_set<Partition, PartitionHash> kernels;
    std::unordered_set<std::uint64_t> images;   // state-set bitmasks
    bool identity_generated = false;            // some nonempty word acts as identity

    // Shortest word producing elements[idx], ties broken by letter order.
    Word witness(std::size_t idx) const;
};

// Closure by generator composition, breadth-first by word length with
// letter-order tie-breaking. Throws CapExceeded past cap distinct elements.
// Requires num_states <= 64 (images are tracked as bitmasks).
MonoidCensus enumerate_monoid(const Automaton& a, std::size_t cap = kDefaultMonoidCap);

struct OracleVerdict {
    bool totally_compatible = false;
    std::vector<Partition> missing;  // canonical enumeration order
};

// True iff every partition of the state set occurs as a kernel in the
// generated monoid.
OracleVerdict oracle_totally_compatible(const Automaton& a, std::size_t cap = kDefaultMonoidCap);

// True iff every nonempty subset of states is the image of some word.
bool oracle_completely_reachable(const Automaton& a, std::size_t cap = kDefaultMonoidCap);

struct SyncResult {
    bool synchronizing = false;
    std::optional<Word> reset_word;  // shortest by BFS when synchronizing
};

SyncResult oracle_synchronizing(const Automaton& a, std::size_t cap = kDefaultMonoidCap);

// A minimal totally compatible automaton generates exactly one
// transformation per partition, i.e. Bell(n) of them. Whether the identity
// counts when no nonempty word realizes it is convention; both counts are
// reported.
struct MinimalityReport {
    bool totally_compatible = false;
    std::uint64_t bell = 0;
    std::size_t monoid_elements = 0;     // including the identity of the empty word
    std::size_t semigroup_elements = 0;  // identity only when some nonempty word realizes it
    bool minimal_with_identity = false;
    bool minimal_without_identity = false;

    bool minimal() const { return minimal_with_identity || minimal_without_identity; }
};

MinimalityReport check_minimal_totally_compatible(const Automaton& a,
                                                  std::size_t cap = kDefaultMonoidCap);

inline bool is_minimal_totally_compatible(const Automaton& a,
                                          std::size_t cap = kDefaultMonoidCap) {
    return check_minimal_totally_compatible(a, cap).minimal();
}

// Bell number B_n; overflows uint64 past n = 25, rejected.
std::uint64_t bell_number(int n);

// Lazy enumeration of all canonical partitions of {0,..,n-1} as
// restricted-growth strings in lexicographic order: the single-class
// partition first, the discrete one last. Exactly bell_number(n) values.
class PartitionRange {
  public:
    explicit PartitionRange(int n) : n_(n) {}

    class iterator {
      public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(int n);

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || current_ == other.current_); }

      private:
        Partition current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

  private:
    int n_;
};

PartitionRange all_partitions(int n);

}  // namespace tca

#endif
