#ifndef TCA_IO_HPP
#define TCA_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "tca/automaton.hpp"

namespace tca {

struct ParseError : std::runtime_error {
    int line;  // 1-based, 0 when not line-anchored
    ParseError(int line_, const std::string& reason);
};

// Accepts the line format
//
//   states: 3
//   letters: c t
//   c: 2 3 1
//   t: 1 1 3
//
// ('#' starts a comment, states are 1-based) or a JSON object
// {"states": 3, "letters": {"c": [2,3,1], "t": [1,1,3]}} with letters in
// declaration order. Throws ParseError / ValidationError.
Automaton parse_automaton(std::string_view text);

// Line format; parse_automaton(serialize_automaton(a)) == a.
std::string serialize_automaton(const Automaton& a);

// The JSON flavor of the same, as a string with letters in declaration order.
std::string automaton_to_json(const Automaton& a);

// Partition syntax: 1-based states joined by ',', classes separated by '|',
// whitespace ignored, every state exactly once. Example: "1,3|2".
Partition parse_partition(std::string_view text, int n);

std::string partition_to_string(const Partition& p);

// Letter names joined without separator when all are single characters,
// space-separated otherwise; the empty word prints as the epsilon sign.
std::string word_to_string(const Automaton& a, const Word& w);

}  // namespace tca

#endif
