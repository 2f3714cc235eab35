#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace latcover {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int int_lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// quotient nearest to a/b, ties broken toward zero; used to keep remainders
// small during elimination
inline Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;            // truncated toward zero
    Int r = a - q * b;
    if (int_abs(2 * r) > int_abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

// "p/q" in lowest terms, "p" when the denominator is 1
inline std::string rat_to_string(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline std::string vec_to_string(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

}  // namespace latcover
