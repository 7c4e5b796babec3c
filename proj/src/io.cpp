#include "tca/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace tca {

ParseError::ParseError(int line_, const std::string& reason)
    : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + reason : reason),
      line(line_) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int(std::string_view tok, int line, const std::string& what) {
    int value = 0;
    bool any = false;
    for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(line, what + ": '" + std::string(tok) + "' is not a number");
        if (value > 100'000'000) throw ParseError(line, what + ": value out of range");
        value = value * 10 + (ch - '0');
        any = true;
    }
    if (!any) throw ParseError(line, what + ": empty number");
    return value;
}

Automaton parse_line_format(std::string_view text) {
    Automaton a;
    bool have_states = false;
    bool have_letters = false;
    std::vector<bool> row_seen;

    std::istringstream is{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string_view line{raw};
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(lineno, "expected 'key: values'");
        std::string key{trim(line.substr(0, colon))};
        std::string_view rest = trim(line.substr(colon + 1));

        if (!have_states) {
            if (key != "states") throw ParseError(lineno, "expected 'states: <count>' first");
            a.num_states = parse_int(rest, lineno, "state count");
            have_states = true;
        } else if (!have_letters) {
            if (key != "letters") throw ParseError(lineno, "expected 'letters: <names>' second");
            a.letter_names = split_ws(rest);
            if (a.letter_names.empty()) throw ParseError(lineno, "no letters declared");
            for (std::size_t i = 0; i < a.letter_names.size(); ++i)
                for (std::size_t j = i + 1; j < a.letter_names.size(); ++j)
                    if (a.letter_names[i] == a.letter_names[j])
                        throw ParseError(lineno, "duplicate letter '" + a.letter_names[i] + "'");
            a.table.assign(a.letter_names.size(), {});
            row_seen.assign(a.letter_names.size(), false);
            have_letters = true;
        } else {
            auto it = std::find(a.letter_names.begin(), a.letter_names.end(), key);
            if (it == a.letter_names.end())
                throw ParseError(lineno, "unknown letter '" + key + "'");
            auto idx = static_cast<std::size_t>(it - a.letter_names.begin());
            if (row_seen[idx]) throw ParseError(lineno, "duplicate row for letter '" + key + "'");
            row_seen[idx] = true;
            auto targets = split_ws(rest);
            if (static_cast<int>(targets.size()) != a.num_states)
                throw ParseError(lineno, "row for '" + key + "' has " +
                                             std::to_string(targets.size()) +
                                             " entries, expected " + std::to_string(a.num_states));
            a.table[idx].reserve(targets.size());
            for (const auto& tok : targets)
                a.table[idx].push_back(parse_int(tok, lineno, "transition target") - 1);
        }
    }
    if (!have_states) throw ParseError(0, "missing 'states:' line");
    if (!have_letters) throw ParseError(0, "missing 'letters:' line");
    for (std::size_t i = 0; i < row_seen.size(); ++i)
        if (!row_seen[i]) throw ParseError(0, "missing row for letter '" + a.letter_names[i] + "'");
    return a;
}

int line_of_byte(std::string_view text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

Automaton parse_json_format(std::string_view text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of_byte(text, e.byte), e.what());
    }
    if (!doc.is_object() || !doc.contains("states") || !doc.contains("letters"))
        throw ParseError(0, "JSON automaton needs 'states' and 'letters' keys");
    Automaton a;
    if (!doc["states"].is_number_integer())
        throw ParseError(0, "'states' must be an integer");
    a.num_states = doc["states"].get<int>();
    if (!doc["letters"].is_object())
        throw ParseError(0, "'letters' must be an object of name -> row");
    for (const auto& [name, row] : doc["letters"].items()) {
        a.letter_names.push_back(name);
        if (!row.is_array())
            throw ParseError(0, "row for '" + name + "' must be an array");
        std::vector<State> targets;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw ParseError(0, "row for '" + name + "' has a non-integer entry");
            targets.push_back(v.get<int>() - 1);
        }
        a.table.push_back(std::move(targets));
    }
    return a;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
    std::string_view probe = trim(text);
    Automaton a = (!probe.empty() && probe.front() == '{') ? parse_json_format(text)
                                                           : parse_line_format(text);
    validate(a);
    return a;
}

std::string serialize_automaton(const Automaton& a) {
    std::ostringstream os;
    os << "states: " << a.num_states << "\n";
    os << "letters:";
    for (const auto& name : a.letter_names) os << " " << name;
    os << "\n";
    for (int i = 0; i < a.num_letters(); ++i) {
        os << a.letter_names[i] << ":";
        for (State q : a.table[i]) os << " " << q + 1;
        os << "\n";
    }
    return os.str();
}

std::string automaton_to_json(const Automaton& a) {
    nlohmann::ordered_json doc;
    doc["states"] = a.num_states;
    auto& letters = doc["letters"] = nlohmann::ordered_json::object();
    for (int i = 0; i < a.num_letters(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (State q : a.table[i]) row.push_back(q + 1);
        letters[a.letter_names[i]] = std::move(row);
    }
    return doc.dump(2) + "\n";
}

Partition parse_partition(std::string_view text, int n) {
    std::vector<int> labels(n, -1);
    int next_class = 0;
    std::string chunk{text};
    std::istringstream classes{chunk};
    std::string cls;
    while (std::getline(classes, cls, '|')) {
        std::istringstream members{cls};
        std::string tok;
        bool any = false;
        while (std::getline(members, tok, ',')) {
            std::string_view t = trim(tok);
            if (t.empty()) throw ParseError(0, "empty state in partition '" + chunk + "'");
            int q = parse_int(t, 0, "partition state");
            if (q < 1 || q > n)
                throw ParseError(0, "state " + std::to_string(q) + " out of range 1.." +
                                        std::to_string(n));
            if (labels[q - 1] >= 0)
                throw ParseError(0, "state " + std::to_string(q) + " appears twice");
            labels[q - 1] = next_class;
            any = true;
        }
        if (!any) throw ParseError(0, "empty class in partition '" + chunk + "'");
        ++next_class;
    }
    for (int q = 0; q < n; ++q)
        if (labels[q] < 0)
            throw ParseError(0, "state " + std::to_string(q + 1) + " missing from partition");
    return Partition::canonicalized(labels);
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    auto classes = p.classes();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (c > 0) os << "|";
        for (std::size_t i = 0; i < classes[c].size(); ++i) {
            if (i > 0) os << ",";
            os << classes[c][i] + 1;
        }
    }
    return os.str();
}

std::string word_to_string(const Automaton& a, const Word& w) {
    if (w.empty()) return "ε";
    bool single = std::all_of(a.letter_names.begin(), a.letter_names.end(),
                              [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !single) out += " ";
        out += a.letter_names[w[i]];
    }
    return out;
}

}  // namespace tca
