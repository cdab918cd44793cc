#pragma once

#include <cstdint>
#include <string>

#include "latsym/errors.hpp"

namespace latsym {

// Variable identifiers for the polynomial ring. There is one unindexed
// variable q and five indexed alphabets x, y, u, v, w. The total order
// (q first, then x1 < x2 < ..., then y, u, v, w) is fixed once and for all;
// canonical forms and printed output depend on it.
struct VarId {
    enum class Kind : std::uint8_t { Q = 0, X = 1, Y = 2, U = 3, V = 4, W = 5 };

    Kind kind = Kind::Q;
    std::uint32_t index = 0; // 0 for q, >= 1 otherwise

    static VarId q() { return VarId{Kind::Q, 0}; }
    static VarId x(std::uint32_t i) { return VarId{Kind::X, i}; }
    static VarId y(std::uint32_t i) { return VarId{Kind::Y, i}; }
    static VarId u(std::uint32_t i) { return VarId{Kind::U, i}; }
    static VarId v(std::uint32_t i) { return VarId{Kind::V, i}; }
    static VarId w(std::uint32_t i) { return VarId{Kind::W, i}; }

    std::uint64_t key() const {
        // stable global order: x < y < u < v < w < q, then by index
        static constexpr std::uint8_t rank[] = {5, 0, 1, 2, 3, 4}; // indexed by Kind
        return (static_cast<std::uint64_t>(rank[static_cast<int>(kind)]) << 32) | index;
    }

    friend bool operator==(const VarId& a, const VarId& b) { return a.key() == b.key(); }
    friend bool operator!=(const VarId& a, const VarId& b) { return a.key() != b.key(); }
    friend bool operator<(const VarId& a, const VarId& b) { return a.key() < b.key(); }

    std::string name() const {
        static const char* letters = "qxyuvw";
        char c = letters[static_cast<int>(kind)];
        if (kind == Kind::Q) return "q";
        return std::string(1, c) + std::to_string(index);
    }

    // Inverse of name(): "q", "x1", "u12", ...
    static VarId parse(const std::string& s) {
        if (s == "q") return q();
        if (s.size() < 2) throw ParseError("bad variable name: " + s);
        Kind k;
        switch (s[0]) {
            case 'x': k = Kind::X; break;
            case 'y': k = Kind::Y; break;
            case 'u': k = Kind::U; break;
            case 'v': k = Kind::V; break;
            case 'w': k = Kind::W; break;
            default: throw ParseError("bad variable name: " + s);
        }
        std::uint32_t idx = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("bad variable name: " + s);
            idx = idx * 10 + static_cast<std::uint32_t>(s[i] - '0');
        }
        if (idx == 0) throw ParseError("variable index must be positive: " + s);
        return VarId{k, idx};
    }
};

} // namespace latsym
