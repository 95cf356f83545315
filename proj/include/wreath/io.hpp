#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreath/labels.hpp"
#include "wreath/multiset.hpp"
#include "wreath/partition.hpp"

namespace wreath {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class Cursor {
    const std::string& s_;
    size_t i_ = 0;

public:
    explicit Cursor(const std::string& s) : s_(s) {}
    size_t pos() const { return i_; }
    bool done() const { return i_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[i_]; }

    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", i_);
    }

    int integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a digit", i_);
        const size_t start = i_;
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[i_] - '0');
            if (v > 1000000000) throw ParseError("number too large", start);
            ++i_;
        }
        return static_cast<int>(v);
    }

    void end() const {
        if (!done()) throw ParseError("unexpected trailing input", i_);
    }
};

inline std::string joined_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

// partition inside a sequence: (2,1), or - when empty
inline std::string inner_partition_text(const Partition& p) {
    if (p.empty()) return "-";
    return "(" + joined_ints(p.parts()) + ")";
}

}  // namespace detail

// [3,1]; [] when empty
inline std::string to_text(const Partition& p) {
    return "[" + detail::joined_ints(p.parts()) + "]";
}

// ((2)|-|(1)); () when empty
inline std::string to_text(const PartitionSequence& s) {
    std::string out = "(";
    for (int w = 1; w <= s.length(); ++w) {
        if (w > 1) out += '|';
        out += detail::inner_partition_text(s.entry(w));
    }
    return out + ")";
}

inline std::string irrep_text(const PartitionSequence& s) { return "V" + to_text(s); }
inline std::string perm_text(const PartitionSequence& s) { return "M~" + to_text(s); }
inline std::string gl_text(const Partition& p) { return "W" + to_text(p); }
inline std::string specht_text(const Partition& p) { return "S" + to_text(p); }

// V(0:(3)|2:(1,1)) — algebraic label with explicit weights
inline std::string to_text(const AlgebraicIrrepLabel& label) {
    std::string out = "V(";
    bool first = true;
    for (const auto& [w, shape] : label.entries()) {
        if (!first) out += '|';
        first = false;
        out += std::to_string(w) + ":" + detail::inner_partition_text(shape);
    }
    return out + ")";
}

// M((3,2),(1,6)) — block sizes, then their weights
inline std::string to_text(const WeightedPermLabel& m) {
    return "M((" + detail::joined_ints(m.parts()) + "),(" + detail::joined_ints(m.weights()) +
           "))";
}

// {1^2,2^1}; {} when empty
inline std::string to_text(const Multiset& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [sym, mult] : m.entries()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(sym) + "^" + std::to_string(mult);
    }
    return out + "}";
}

// {{1^1}|{1^1,2^1}}
inline std::string to_text(const MultisetPartition& p) {
    std::string out = "{";
    for (size_t i = 0; i < p.blocks().size(); ++i) {
        if (i) out += '|';
        out += to_text(Multiset::from_counts(p.blocks()[i]));
    }
    return out + "}";
}

inline Partition parse_partition(const std::string& text) {
    detail::Cursor c(text);
    c.expect('[');
    std::vector<int> parts;
    if (!c.accept(']')) {
        parts.push_back(c.integer());
        while (c.accept(',')) parts.push_back(c.integer());
        c.expect(']');
    }
    c.end();
    return Partition(std::move(parts));
}

namespace detail {

inline Partition parse_inner_partition(Cursor& c) {
    if (c.accept('-')) return Partition{};
    c.expect('(');
    std::vector<int> parts;
    if (!c.accept(')')) {
        parts.push_back(c.integer());
        while (c.accept(',')) parts.push_back(c.integer());
        c.expect(')');
    }
    return Partition(std::move(parts));
}

}  // namespace detail

inline PartitionSequence parse_sequence(const std::string& text) {
    detail::Cursor c(text);
    c.expect('(');
    std::vector<Partition> entries;
    if (!c.accept(')')) {
        entries.push_back(detail::parse_inner_partition(c));
        while (c.accept('|')) entries.push_back(detail::parse_inner_partition(c));
        c.expect(')');
    }
    c.end();
    return PartitionSequence(std::move(entries));
}

// "2,2" -> {2,2}; "" -> {}
inline std::vector<int> parse_int_list(const std::string& text) {
    detail::Cursor c(text);
    std::vector<int> out;
    if (!c.done()) {
        out.push_back(c.integer());
        while (c.accept(',')) out.push_back(c.integer());
    }
    c.end();
    return out;
}

}  // namespace wreath
