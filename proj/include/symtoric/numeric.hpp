#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace symtoric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown for malformed input (dimension mismatch, bad JSON, unknown names).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a documented precondition fails (invalid fan, point off a
/// required subvariety, rank-deficient weight matrix, ...).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// gcd of a vector's entries, always >= 0; 0 for the zero vector.
inline Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

/// Scale a nonzero vector to its primitive integer multiple, keeping direction.
inline std::vector<Int> primitive(std::vector<Int> v) {
    Int g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

/// Clear denominators of a rational vector and reduce to the primitive
/// integer vector pointing the same way. Zero maps to zero.
inline std::vector<Int> primitive(const std::vector<Rat>& v) {
    Int mult = 1;
    for (const auto& q : v) mult = lcm(mult, boost::multiprecision::denominator(q));
    std::vector<Int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * mult;
        w[i] = boost::multiprecision::numerator(scaled);
    }
    return primitive(std::move(w));
}

}  // namespace symtoric
