#include "tca/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <unordered_set>

namespace tca {

namespace {

// splitmix64 finalizer, used as the mixing step of all hashes here.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::size_t hash_ints(const std::vector<int>& v, std::uint64_t salt) {
    std::uint64_t h = salt;
    for (int x : v) h = mix64(h + 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(x));
    return static_cast<std::size_t>(h);
}

bool valid_letter_name(const std::string& name) {
    if (name.empty()) return false;
    for (char ch : name) {
        if (ch == ':' || ch == '#' || ch == '|' || ch == ',' ||
            std::isspace(static_cast<unsigned char>(ch)))
            return false;
    }
    return true;
}

}  // namespace

void validate(const Automaton& a) {
    if (a.num_states < 1) throw ValidationError("automaton needs at least one state");
    if (a.letter_names.empty()) throw ValidationError("automaton needs at least one letter");
    if (a.table.size() != a.letter_names.size())
        throw ValidationError("one transition row per letter required");
    std::unordered_set<std::string> seen;
    for (const auto& name : a.letter_names) {
        if (!valid_letter_name(name))
            throw ValidationError("bad letter name '" + name + "'");
        if (!seen.insert(name).second)
            throw ValidationError("duplicate letter '" + name + "'");
    }
    for (int i = 0; i < a.num_letters(); ++i) {
        if (static_cast<int>(a.table[i].size()) != a.num_states)
            throw ValidationError("row for letter '" + a.letter_names[i] + "' has " +
                                  std::to_string(a.table[i].size()) + " entries, expected " +
                                  std::to_string(a.num_states));
        for (State q : a.table[i]) {
            if (q < 0 || q >= a.num_states)
                throw ValidationError("row for letter '" + a.letter_names[i] +
                                      "' targets state " + std::to_string(q + 1) +
                                      ", valid range is 1.." + std::to_string(a.num_states));
        }
    }
}

Transformation Transformation::identity(int n) {
    Transformation t;
    t.map.resize(n);
    for (int q = 0; q < n; ++q) t.map[q] = q;
    return t;
}

int Transformation::rank() const {
    std::vector<char> hit(map.size(), 0);
    int r = 0;
    for (State q : map) {
        if (!hit[q]) {
            hit[q] = 1;
            ++r;
        }
    }
    return r;
}

Partition Partition::discrete(int n) {
    Partition p;
    p.class_of.resize(n);
    for (int q = 0; q < n; ++q) p.class_of[q] = q;
    p.num_classes = n;
    return p;
}

Partition Partition::single_class(int n) {
    Partition p;
    p.class_of.assign(n, 0);
    p.num_classes = n > 0 ? 1 : 0;
    return p;
}

Partition Partition::canonicalized(const std::vector<int>& labels) {
    Partition p;
    p.class_of.resize(labels.size());
    std::vector<int> relabel(labels.size(), -1);
    int next = 0;
    for (std::size_t q = 0; q < labels.size(); ++q) {
        int lab = labels[q];
        assert(lab >= 0 && lab < static_cast<int>(labels.size()));
        if (relabel[lab] < 0) relabel[lab] = next++;
        p.class_of[q] = relabel[lab];
    }
    p.num_classes = next;
    return p;
}

std::vector<std::vector<State>> Partition::classes() const {
    std::vector<std::vector<State>> out(num_classes);
    for (int q = 0; q < size(); ++q) out[class_of[q]].push_back(q);
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    assert(size() == coarser.size());
    // Each of our classes must map into a single class of coarser.
    std::vector<int> target(num_classes, -1);
    for (int q = 0; q < size(); ++q) {
        int c = class_of[q];
        if (target[c] < 0)
            target[c] = coarser.class_of[q];
        else if (target[c] != coarser.class_of[q])
            return false;
    }
    return true;
}

std::size_t PartitionHash::operator()(const Partition& p) const {
    return hash_ints(p.class_of, 0x5bd1e995u);
}

std::size_t TransformationHash::operator()(const Transformation& t) const {
    return hash_ints(t.map, 0x27d4eb2fu);
}

State apply(const Automaton& a, const Word& w, State q) {
    assert(q >= 0 && q < a.num_states);
    for (int letter : w) q = a.table[letter][q];
    return q;
}

Transformation transformation_of(const Automaton& a, const Word& w) {
    Transformation t = Transformation::identity(a.num_states);
    for (int letter : w) {
        const auto& row = a.table[letter];
        for (State& q : t.map) q = row[q];
    }
    return t;
}

Transformation compose_letter(const Automaton& a, const Transformation& t, int letter) {
    Transformation out = t;
    const auto& row = a.table[letter];
    for (State& q : out.map) q = row[q];
    return out;
}

std::vector<State> image_set(const Automaton& a, const Word& w, const std::vector<State>& p) {
    assert(!p.empty());
    std::vector<char> hit(a.num_states, 0);
    for (State q : p) hit[apply(a, w, q)] = 1;
    std::vector<State> out;
    for (State q = 0; q < a.num_states; ++q)
        if (hit[q]) out.push_back(q);
    return out;
}

Partition kernel_of(const Transformation& t) {
    const int n = t.size();
    Partition p;
    p.class_of.resize(n);
    std::vector<int> class_of_image(n, -1);
    int next = 0;
    for (int q = 0; q < n; ++q) {
        State img = t.map[q];
        if (class_of_image[img] < 0) class_of_image[img] = next++;
        p.class_of[q] = class_of_image[img];
    }
    p.num_classes = next;
    return p;
}

Partition kernel(const Automaton& a, const Word& w) {
    return kernel_of(transformation_of(a, w));
}

bool is_compatible(const Automaton& a, const Word& w, const Partition& rho) {
    assert(rho.size() == a.num_states);
    return kernel(a, w) == rho;
}

bool is_compatible_classwise(const Automaton& a, const Word& w, const Partition& rho) {
    assert(rho.size() == a.num_states);
    Transformation t = transformation_of(a, w);
    // One image per class, and no two classes sharing it.
    std::vector<State> image_of_class(rho.num_classes, -1);
    for (State q = 0; q < a.num_states; ++q) {
        int c = rho.class_of[q];
        if (image_of_class[c] < 0)
            image_of_class[c] = t.map[q];
        else if (image_of_class[c] != t.map[q])
            return false;  // class not synchronized
    }
    std::vector<char> used(a.num_states, 0);
    for (State img : image_of_class) {
        if (used[img]) return false;  // two classes share an image
        used[img] = 1;
    }
    return true;
}

}  // namespace tca
