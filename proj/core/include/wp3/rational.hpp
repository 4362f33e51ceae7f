// Exact arbitrary-precision integer/rational aliases and formatting.
// Every quantity in the library is exact; no floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wp3 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Library-wide error type. Messages are stable strings used by the CLI
// and tests ("inexact division", "pole order mismatch", ...).
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline long long to_ll(const Int& v) { return static_cast<long long>(v); }

// Renders "p/q", or just "p" when q == 1. Never decimals.
inline std::string rat_str(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

// Parses "p" or "p/q" with optional sign.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw error("bad rational literal: " + s);
    }
}

}  // namespace wp3
