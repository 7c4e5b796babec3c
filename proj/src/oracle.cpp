#include "tca/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace tca {

CapExceeded::CapExceeded(std::uint64_t cap_, const std::string& what_)
    : std::runtime_error(what_ + " (cap " + std::to_string(cap_) + ")"), cap(cap_) {}

Word MonoidCensus::witness(std::size_t idx) const {
    Word w;
    for (int i = static_cast<int>(idx); parents[i].first >= 0; i = parents[i].first)
        w.push_back(parents[i].second);
    std::reverse(w.begin(), w.end());
    return w;
}

namespace {

std::uint64_t image_mask(const Transformation& t) {
    std::uint64_t mask = 0;
    for (State q : t.map) mask |= std::uint64_t{1} << q;
    return mask;
}

}  // namespace

MonoidCensus enumerate_monoid(const Automaton& a, std::size_t cap) {
    const int n = a.num_states;
    if (n > 64) throw std::invalid_argument("oracle enumeration supports at most 64 states");
    if (cap < 1) throw std::invalid_argument("cap must be positive");

    MonoidCensus census;
    std::unordered_map<Transformation, int, TransformationHash> index;

    Transformation id = Transformation::identity(n);
    census.elements.push_back(id);
    census.parents.emplace_back(-1, -1);
    census.kernels.insert(kernel_of(id));
    census.images.insert(image_mask(id));
    index.emplace(std::move(id), 0);

    // Frontier order is element discovery order, so words are explored by
    // length with letter-order tie-breaking.
    for (std::size_t head = 0; head < census.elements.size(); ++head) {
        for (int letter = 0; letter < a.num_letters(); ++letter) {
            Transformation next = compose_letter(a, census.elements[head], letter);
            auto [it, inserted] = index.try_emplace(next, static_cast<int>(census.elements.size()));
            if (!inserted) {
                if (it->second == 0) census.identity_generated = true;
                continue;
            }
            if (census.elements.size() >= cap)
                throw CapExceeded(cap, "transformation monoid larger than cap");
            census.kernels.insert(kernel_of(next));
            census.images.insert(image_mask(next));
            census.elements.push_back(std::move(next));
            census.parents.emplace_back(static_cast<int>(head), letter);
        }
    }
    return census;
}

OracleVerdict oracle_totally_compatible(const Automaton& a, std::size_t cap) {
    MonoidCensus census = enumerate_monoid(a, cap);
    OracleVerdict verdict;
    for (const Partition& p : all_partitions(a.num_states))
        if (!census.kernels.contains(p)) verdict.missing.push_back(p);
    verdict.totally_compatible = verdict.missing.empty();
    return verdict;
}

bool oracle_completely_reachable(const Automaton& a, std::size_t cap) {
    if (a.num_states > 62)
        throw std::invalid_argument("complete-reachability check supports at most 62 states");
    MonoidCensus census = enumerate_monoid(a, cap);
    std::uint64_t all_nonempty = (std::uint64_t{1} << a.num_states) - 1;
    return census.images.size() == all_nonempty;
}

SyncResult oracle_synchronizing(const Automaton& a, std::size_t cap) {
    MonoidCensus census = enumerate_monoid(a, cap);
    for (std::size_t i = 0; i < census.elements.size(); ++i) {
        if (census.elements[i].rank() == 1) {
            return {true, census.witness(i)};
        }
    }
    return {false, std::nullopt};
}

MinimalityReport check_minimal_totally_compatible(const Automaton& a, std::size_t cap) {
    MonoidCensus census = enumerate_monoid(a, cap);
    MinimalityReport report;
    report.totally_compatible = true;
    for (const Partition& p : all_partitions(a.num_states)) {
        if (!census.kernels.contains(p)) {
            report.totally_compatible = false;
            break;
        }
    }
    report.bell = bell_number(a.num_states);
    report.monoid_elements = census.elements.size();
    report.semigroup_elements = census.elements.size() - (census.identity_generated ? 0 : 1);
    report.minimal_with_identity =
        report.totally_compatible && report.monoid_elements == report.bell;
    report.minimal_without_identity =
        report.totally_compatible && report.semigroup_elements == report.bell;
    return report;
}

std::uint64_t bell_number(int n) {
    if (n < 0) throw std::invalid_argument("bell_number needs n >= 0");
    if (n > 25) throw std::invalid_argument("bell_number overflows uint64 past n = 25");
    // Bell triangle: each row starts with the previous row's last entry.
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (std::uint64_t x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

PartitionRange::iterator::iterator(int n) : done_(false) {
    assert(n >= 1);
    current_.class_of.assign(n, 0);
    current_.num_classes = 1;
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
    auto& rgs = current_.class_of;
    const int n = static_cast<int>(rgs.size());
    // Restricted-growth successor: bump the rightmost digit that may still
    // grow, zero the tail.
    for (int i = n - 1; i >= 1; --i) {
        int prefix_max = 0;
        for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
        if (rgs[i] <= prefix_max) {
            ++rgs[i];
            std::fill(rgs.begin() + i + 1, rgs.end(), 0);
            current_.num_classes = *std::max_element(rgs.begin(), rgs.end()) + 1;
            return *this;
        }
    }
    done_ = true;
    return *this;
}

PartitionRange all_partitions(int n) {
    if (n < 1) throw std::invalid_argument("all_partitions needs n >= 1");
    return PartitionRange(n);
}

}  // namespace tca
