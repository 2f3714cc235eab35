#pragma once

#include <initializer_list>

#include "latcover/bigint.hpp"

namespace latcover {

// sum of divisors sigma(d) = sum_{r | d} r
inline Int sigma(const Int& d) {
    if (d < 1) throw std::invalid_argument("sigma requires d >= 1");
    Int s = 0;
    for (Int r = 1; r <= d; ++r)
        if (d % r == 0) s += r;
    return s;
}

// truncated formal power series over Q; c[d] holds the q^d coefficient and
// the truncation order is c.size() - 1.  Binary operations truncate to the
// smaller order of the two operands, never silently extending.
struct PowerSeries {
    std::vector<Rat> c;

    PowerSeries() : c{Rat(0)} {}
    explicit PowerSeries(std::size_t order) : c(order + 1, Rat(0)) {}
    PowerSeries(std::initializer_list<Rat> coeffs) : c(coeffs) {
        if (c.empty()) c.push_back(Rat(0));
    }

    std::size_t order() const { return c.size() - 1; }
    const Rat& operator[](std::size_t d) const { return c.at(d); }
    Rat& operator[](std::size_t d) { return c.at(d); }

    static PowerSeries constant(const Rat& value, std::size_t order) {
        PowerSeries f(order);
        f.c[0] = value;
        return f;
    }

    bool operator==(const PowerSeries& o) const { return c == o.c; }
};

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (std::size_t d = 0; d <= out.order(); ++d) out.c[d] = a.c[d] + b.c[d];
    return out;
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (std::size_t d = 0; d <= out.order(); ++d) out.c[d] = a.c[d] - b.c[d];
    return out;
}

inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (std::size_t d = 0; d <= out.order(); ++d)
        for (std::size_t k = 0; k <= d; ++k) out.c[d] += a.c[k] * b.c[d - k];
    return out;
}

inline PowerSeries operator*(const Rat& s, const PowerSeries& a) {
    PowerSeries out = a;
    for (Rat& x : out.c) x *= s;
    return out;
}

// q d/dq: multiplies the q^d coefficient by d, preserving the order
inline PowerSeries q_d_dq(const PowerSeries& a) {
    PowerSeries out(a.order());
    for (std::size_t d = 1; d <= a.order(); ++d) out.c[d] = Rat(d) * a.c[d];
    return out;
}

// d/dq: the result is only determined to order one less
inline PowerSeries derivative(const PowerSeries& a) {
    if (a.order() == 0) return PowerSeries(std::size_t{0});
    PowerSeries out(a.order() - 1);
    for (std::size_t d = 0; d < a.order(); ++d) out.c[d] = Rat(d + 1) * a.c[d + 1];
    return out;
}

// multiplicative inverse: b_0 = 1/a_0 and b_d = -b_0 sum_{k=1}^{d} a_k b_{d-k}
inline PowerSeries reciprocal(const PowerSeries& a) {
    if (a.c[0] == 0)
        throw std::invalid_argument("reciprocal requires a nonzero constant term");
    PowerSeries out(a.order());
    out.c[0] = Rat(1) / a.c[0];
    for (std::size_t d = 1; d <= a.order(); ++d) {
        Rat s = 0;
        for (std::size_t k = 1; k <= d; ++k) s += a.c[k] * out.c[d - k];
        out.c[d] = -out.c[0] * s;
    }
    return out;
}

// formal logarithm of a series with constant term 1, from q(log f)' f = q f':
// g_d = f_d - (1/d) sum_{k=1}^{d-1} k g_k f_{d-k}
inline PowerSeries log(const PowerSeries& a) {
    if (a.c[0] != 1) throw std::invalid_argument("log requires constant term 1");
    PowerSeries out(a.order());
    for (std::size_t d = 1; d <= a.order(); ++d) {
        Rat s = 0;
        for (std::size_t k = 1; k < d; ++k) s += Rat(k) * out.c[k] * a.c[d - k];
        out.c[d] = a.c[d] - s / Rat(d);
    }
    return out;
}

// formal exponential of a series with zero constant term, from (exp f)' =
// f' exp f: e_d = (1/d) sum_{k=1}^{d} k f_k e_{d-k}
inline PowerSeries exp(const PowerSeries& a) {
    if (a.c[0] != 0) throw std::invalid_argument("exp requires zero constant term");
    PowerSeries out(a.order());
    out.c[0] = 1;
    for (std::size_t d = 1; d <= a.order(); ++d) {
        Rat s = 0;
        for (std::size_t k = 1; k <= d; ++k) s += Rat(k) * a.c[k] * out.c[d - k];
        out.c[d] = s / Rat(d);
    }
    return out;
}

// integer power; negative exponents go through the reciprocal
inline PowerSeries pow_int(const PowerSeries& a, long k) {
    if (k < 0) return reciprocal(pow_int(a, -k));
    PowerSeries out = PowerSeries::constant(Rat(1), a.order());
    PowerSeries base = a;
    for (unsigned long e = static_cast<unsigned long>(k); e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
    }
    return out;
}

// G(q) = sum_{d >= 1} sigma(d) q^d
inline PowerSeries g_series(std::size_t order) {
    PowerSeries out(order);
    for (std::size_t d = 1; d <= order; ++d) out.c[d] = Rat(sigma(Int(d)));
    return out;
}

// E(q) = prod_{m >= 1} (1 - q^m), truncated
inline PowerSeries eta_product(std::size_t order) {
    PowerSeries out = PowerSeries::constant(Rat(1), order);
    for (std::size_t m = 1; m <= order; ++m)
        for (std::size_t d = order; d >= m; --d) out.c[d] -= out.c[d - m];
    return out;
}

// E(q)^{-12}, computed by inverting the truncated product and raising to the
// 12th power
inline PowerSeries eta_inv12(std::size_t order) {
    return pow_int(reciprocal(eta_product(order)), 12);
}

// unique solution of q d/dq log F_0 = 12 G with F_0(0) = 1, built degree by
// degree: d c_d = sum_{k=1}^{d} 12 sigma(k) c_{d-k}
inline PowerSeries f0_from_ode(std::size_t order) {
    PowerSeries out(order);
    out.c[0] = 1;
    for (std::size_t d = 1; d <= order; ++d) {
        Rat s = 0;
        for (std::size_t k = 1; k <= d; ++k) s += Rat(12 * sigma(Int(k))) * out.c[d - k];
        out.c[d] = s / Rat(d);
    }
    return out;
}

// result of a coefficientwise comparison; on failure carries the first
// differing degree together with both values
struct SeriesCheck {
    bool ok = true;
    std::size_t degree = 0;
    Rat expected;
    Rat got;
};

inline SeriesCheck compare_series(const PowerSeries& expected, const PowerSeries& got) {
    SeriesCheck r;
    std::size_t n = std::min(expected.order(), got.order());
    for (std::size_t d = 0; d <= n; ++d)
        if (expected.c[d] != got.c[d]) {
            r.ok = false;
            r.degree = d;
            r.expected = expected.c[d];
            r.got = got.c[d];
            return r;
        }
    return r;
}

// checks (1/12) q d/dq log E^{-12} = G coefficientwise
inline SeriesCheck verify_log_derivative_identity(std::size_t order) {
    PowerSeries lhs = Rat(1, 12) * q_d_dq(log(eta_inv12(order)));
    return compare_series(g_series(order), lhs);
}

// closed form F_g = E^{-12} (q G')^g
inline PowerSeries f_g_closed(std::size_t g, std::size_t order) {
    return eta_inv12(order) * pow_int(q_d_dq(g_series(order)), static_cast<long>(g));
}

// one genus-raising step F_g = F_{g-1} q G', with q G' = sum d sigma(d) q^d
inline PowerSeries f_g_recursion(const PowerSeries& f_prev, std::size_t order) {
    return f_prev * q_d_dq(g_series(order));
}

// H(q) = 1/12 (q F_0' - F_0) + F_0 G
inline PowerSeries h_from_trr(const PowerSeries& f0, const PowerSeries& g) {
    return Rat(1, 12) * (q_d_dq(f0) - f0) + f0 * g;
}

// H(q) = -1/12 F_0 + 2 F_0 G
inline PowerSeries h_from_sum(const PowerSeries& f0, const PowerSeries& g) {
    return Rat(-1, 12) * f0 + Rat(2) * (f0 * g);
}

// Assembles the genus-g coefficients from the splitting sum
// sum_{d' + d'' = d} F_{g-1}[d'] (d'' sigma(d'')) and compares with the
// closed form.  The relative invariants carried by the discarded second sum
// vanish; the standin value reinstates that sum as standin * F_{g-1} to show
// the comparison detects it.
inline SeriesCheck sympsum_check_g(std::size_t g, std::size_t order,
                                   const Rat& standin = Rat(0)) {
    if (g < 1) throw std::invalid_argument("sympsum_check_g requires g >= 1");
    PowerSeries prev = f_g_closed(g - 1, order);
    PowerSeries assembled(order);
    for (std::size_t d = 0; d <= order; ++d) {
        Rat s = standin * prev.c[d];
        for (std::size_t dd = 1; dd <= d; ++dd)
            s += prev.c[d - dd] * Rat(Int(dd) * sigma(Int(dd)));
        assembled.c[d] = s;
    }
    return compare_series(f_g_closed(g, order), assembled);
}

}  // namespace latcover
