#pragma once

#include <array>
#include <random>

#include "latcover/convolution.hpp"

namespace latcover {

// rational model of a point on the cover C x T_s of a torus: z is the plane
// coordinate, zs the list of torus coordinates, each reduced into [0,1)^2
using Vec2 = std::array<Rat, 2>;

struct TorusCoverPoint {
    Vec2 z{};
    std::vector<Vec2> zs;

    bool operator==(const TorusCoverPoint& o) const { return z == o.z && zs == o.zs; }
};

namespace detail {

inline Rat frac(const Rat& r) {
    Int fl = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
    if (r < fl) fl -= 1;  // integer division truncates toward zero
    return r - Rat(fl);
}

inline Vec2 frac2(const Vec2& v) { return Vec2{frac(v[0]), frac(v[1])}; }

inline Vec2 add2(const Vec2& a, const Vec2& b) { return Vec2{a[0] + b[0], a[1] + b[1]}; }

inline Vec2 sub2(const Vec2& a, const Vec2& b) { return Vec2{a[0] - b[0], a[1] - b[1]}; }

inline Vec2 scale2(const Rat& c, const Vec2& v) { return Vec2{c * v[0], c * v[1]}; }

inline bool is_integral2(const Vec2& v) {
    return boost::multiprecision::denominator(v[0]) == 1 &&
           boost::multiprecision::denominator(v[1]) == 1;
}

}  // namespace detail

// constraint defining T_s inside (Q^2/Z^2)^l: the weighted coordinate sum is
// integral
inline bool torus_constraint_holds(const IntVec& s, const TorusCoverPoint& p) {
    if (p.zs.size() != s.size()) return false;
    Vec2 acc{};
    for (std::size_t i = 0; i < s.size(); ++i)
        acc = detail::add2(acc, detail::scale2(Rat(s[i]), p.zs[i]));
    return detail::is_integral2(acc);
}

// canonical base lift of the sheet with representative gamma_j:
// (z, zs_i) = (gamma_j / l, gamma_j / (l s_i))
inline TorusCoverPoint torus_lift_base(const IntVec& s, const IntVec& gamma_j) {
    if (gamma_j.size() != 2) throw std::invalid_argument("torus rep must have rank 2");
    std::size_t l = s.size();
    if (l == 0) throw std::invalid_argument("torus base lift needs at least one contact");
    TorusCoverPoint p;
    Vec2 g{Rat(gamma_j[0]), Rat(gamma_j[1])};
    p.z = detail::scale2(Rat(1, static_cast<long>(l)), g);
    p.zs.reserve(l);
    for (std::size_t i = 0; i < l; ++i)
        p.zs.push_back(detail::frac2(detail::scale2(Rat(1, 1) / (Rat(l) * Rat(s[i])), g)));
    return p;
}

// covering map to the disjoint copies of the base torus: [zs_i - z / s_i]
inline std::vector<Vec2> torus_cover_project(const IntVec& s, const TorusCoverPoint& p) {
    if (!torus_constraint_holds(s, p))
        throw std::invalid_argument("torus point violates the T_s constraint");
    std::vector<Vec2> base;
    base.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        base.push_back(detail::frac2(detail::sub2(p.zs[i], detail::scale2(Rat(1) / Rat(s[i]), p.z))));
    return base;
}

// deck action of a twist tuple: every coordinate shifts by the weighted sum
// w = sum_i s_i gamma_i, scaled by 1/l on z and by 1/(l s_i) on zs_i
inline TorusCoverPoint torus_deck_apply(const IntVec& s, const std::vector<IntVec>& gamma,
                                        const TorusCoverPoint& p) {
    if (gamma.size() != s.size()) throw std::invalid_argument("twist tuple length mismatch");
    Vec2 w{};
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (gamma[i].size() != 2) throw std::invalid_argument("twist entries must have rank 2");
        w = detail::add2(w, detail::scale2(Rat(s[i]), Vec2{Rat(gamma[i][0]), Rat(gamma[i][1])}));
    }
    std::size_t l = s.size();
    TorusCoverPoint q;
    q.z = detail::add2(p.z, detail::scale2(Rat(1, static_cast<long>(l)), w));
    q.zs.reserve(l);
    for (std::size_t i = 0; i < l; ++i)
        q.zs.push_back(
            detail::frac2(detail::add2(p.zs[i], detail::scale2(Rat(1, 1) / (Rat(l) * Rat(s[i])), w))));
    return q;
}

// sheet-difference value l (z1 - z2) for two points over one base point;
// integral whenever the fiber condition holds
inline IntVec torus_psi(const IntVec& s, const TorusCoverPoint& p1, const TorusCoverPoint& p2) {
    if (torus_cover_project(s, p1) != torus_cover_project(s, p2))
        throw std::invalid_argument("torus_psi: points do not share a base point");
    Vec2 d = detail::scale2(Rat(s.size()), detail::sub2(p1.z, p2.z));
    if (!detail::is_integral2(d)) throw std::logic_error("torus_psi: non-integral difference");
    return IntVec{boost::multiprecision::numerator(d[0]), boost::multiprecision::numerator(d[1])};
}

// merged contact tuple (s1, -s2) governing the mixed-sign side-2 cover
inline IntVec merged_contact(const IntVec& s1, const IntVec& s2) {
    IntVec m = s1;
    for (const Int& x : s2) m.push_back(-x);
    return m;
}

namespace detail {

// shared body of torus_convolve; flip_first_sign corrupts the sign of the
// re-lift term on the first output coordinate, for the negative control
inline TorusCoverPoint torus_convolve_impl(const IntVec& s1, const IntVec& s2,
                                           const TorusCoverPoint& px, const TorusCoverPoint& py,
                                           bool flip_first_sign) {
    std::size_t l1 = s1.size(), l2 = s2.size(), l = l1 + l2;
    IntVec sm = merged_contact(s1, s2);
    std::vector<Vec2> base_x = torus_cover_project(s1, px);
    std::vector<Vec2> base_y = torus_cover_project(sm, py);
    for (std::size_t i = 0; i < l1; ++i)
        if (base_x[i] != base_y[i])
            throw std::invalid_argument("torus_convolve: fiber condition fails");

    Vec2 w = sub2(scale2(Rat(l1), px.z), scale2(Rat(l), py.z));
    TorusCoverPoint out;
    out.z = scale2(Rat(1, static_cast<long>(l2)), w);
    out.zs.reserve(l2);
    for (std::size_t i = 0; i < l2; ++i) {
        Rat coef = Rat(1) / Rat(s2[i]);
        if (flip_first_sign && i == 0) coef = -coef;
        out.zs.push_back(frac2(add2(base_y[l1 + i], scale2(coef, out.z))));
    }
    return out;
}

}  // namespace detail

// Convolution on the rational model: px lives over s1, py over the merged
// tuple (s1, -s2); the result lives over s2 with plane coordinate
// (l1 x - l y) / l2.  The copies of the second base keep their base
// coordinates, re-lifted along the new plane coordinate.
inline TorusCoverPoint torus_convolve(const IntVec& s1, const IntVec& s2,
                                      const TorusCoverPoint& px, const TorusCoverPoint& py) {
    return detail::torus_convolve_impl(s1, s2, px, py, false);
}

// --- cross-validation of the two convolution pipelines ---------------------

struct CrossValidationReport {
    std::size_t equivalence_trials = 0;
    std::size_t perturbation_trials = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;

    bool ok() const { return mismatches == 0; }
};

namespace detail {

inline long draw_below(std::mt19937_64& rng, long n) {
    return static_cast<long>(rng() % static_cast<std::uint64_t>(n));
}

inline Int draw_int(std::mt19937_64& rng, long lo, long hi) {
    return Int(lo + draw_below(rng, hi - lo + 1));
}

inline IntVec draw_vec(std::mt19937_64& rng, std::size_t n, long bound) {
    IntVec v(n);
    for (auto& x : v) x = draw_int(rng, -bound, bound);
    return v;
}

inline IntVec draw_nonzero_tuple(std::mt19937_64& rng, std::size_t n, long bound) {
    IntVec v(n);
    for (auto& x : v) {
        x = draw_int(rng, 1, bound);
        if (draw_below(rng, 2)) x = -x;
    }
    return v;
}

// chop a flat twist vector into rank-2 tuple entries
inline std::vector<IntVec> as_tuple(const IntVec& flat) {
    std::vector<IntVec> t(flat.size() / 2);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = {flat[2 * i], flat[2 * i + 1]};
    return t;
}

// random integer combination of the columns of gens
inline IntVec lattice_sample(std::mt19937_64& rng, const IntMatrix& gens, long bound) {
    IntVec acc(gens.rows);
    for (std::size_t j = 0; j < gens.cols; ++j) {
        Int c = draw_int(rng, -bound, bound);
        for (std::size_t i = 0; i < gens.rows; ++i) acc[i] += c * gens.at(i, j);
    }
    return acc;
}

// symbolic input rendered on the rational model: side 1 over s1, side 2 over
// the merged tuple with sheet representative (mid part) - (right part)
inline TorusCoverPoint render_side1(const ConvolutionSpec& cs, const IntVec& s1,
                                    const ConvolutionInput& in) {
    IntVec rep1 = cs.cos1.rep(in.j1);
    return torus_deck_apply(s1, as_tuple(in.gamma), torus_lift_base(s1, rep1));
}

inline TorusCoverPoint render_side2(const ConvolutionSpec& cs, const IntVec& s1, const IntVec& s2,
                                    const ConvolutionInput& in) {
    IntVec rep2 = cs.cos2.rep(in.j2);
    IntVec rho = vec_sub(vec_slice(rep2, 0, 2), vec_slice(rep2, 2, 4));
    IntVec sm = merged_contact(s1, s2);
    IntVec joint_twist = vec_concat(IntVec(2 * s1.size()), in.twist_right);
    return torus_deck_apply(sm, as_tuple(joint_twist), torus_lift_base(sm, rho));
}

inline TorusCoverPoint render_output(const ConvolutionSpec& cs, const IntVec& s2,
                                     const ConvolutionOutput& out) {
    IntVec rep = cs.cos_out.rep(out.j_out);  // left part is empty here
    return torus_deck_apply(s2, as_tuple(out.twist), torus_lift_base(s2, rep));
}

}  // namespace detail

// Runs the symbolic pipeline and the rational pipeline on random inputs over
// the worked product example and compares the rendered outputs; then replays
// random inputs under the twist-lattice moves that must not change the
// output.  corrupt_sign feeds a sign error into the rational formula to show
// the comparison actually bites.
inline CrossValidationReport cross_validate_convolution(std::size_t trials,
                                                        std::size_t perturb_trials,
                                                        std::uint64_t seed,
                                                        bool corrupt_sign = false) {
    std::mt19937_64 rng(seed);
    CrossValidationReport rep;
    auto note = [&rep](const std::string& what) {
        if (rep.mismatches == 0) rep.first_mismatch = what;
        ++rep.mismatches;
    };

    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t l1 = 1 + detail::draw_below(rng, 3), l2 = 1 + detail::draw_below(rng, 3);
        IntVec s1 = detail::draw_nonzero_tuple(rng, l1, 5);
        IntVec s2 = detail::draw_nonzero_tuple(rng, l2, 5);
        ConvolutionSpec cs = make_product_example_spec(s1, s2);

        ConvolutionInput in;
        in.j1 = detail::draw_below(rng, static_cast<long>(cs.cos1.size()));
        in.j2 = detail::draw_below(rng, static_cast<long>(cs.cos2.size()));
        in.gamma = detail::draw_vec(rng, cs.dm, 9);
        in.twist_left = IntVec(cs.dl);
        in.twist_right = detail::draw_vec(rng, cs.dr, 9);

        ConvolutionOutput out = convolve(cs, in);
        TorusCoverPoint torus_out = detail::torus_convolve_impl(
            s1, s2, detail::render_side1(cs, s1, in), detail::render_side2(cs, s1, s2, in),
            corrupt_sign);
        ++rep.equivalence_trials;
        if (!(torus_out == detail::render_output(cs, s2, out)))
            note("pipeline disagreement at equivalence trial " + std::to_string(t));
    }

    for (std::size_t t = 0; t < perturb_trials; ++t) {
        std::size_t l1 = 1 + detail::draw_below(rng, 3), l2 = 1 + detail::draw_below(rng, 3);
        IntVec s1 = detail::draw_nonzero_tuple(rng, l1, 5);
        IntVec s2 = detail::draw_nonzero_tuple(rng, l2, 5);
        ConvolutionSpec cs = make_product_example_spec(s1, s2);

        ConvolutionInput in;
        in.j1 = detail::draw_below(rng, static_cast<long>(cs.cos1.size()));
        in.j2 = detail::draw_below(rng, static_cast<long>(cs.cos2.size()));
        in.gamma = detail::draw_vec(rng, cs.dm, 9);
        in.twist_left = IntVec(cs.dl);
        in.twist_right = detail::draw_vec(rng, cs.dr, 9);
        ConvolutionOutput base = convolve(cs, in);

        // side-1 move: (alpha, beta) in the joint1 twist lattice shifts the
        // carried left twist by alpha and the relative twist by beta
        IntVec m1 = detail::lattice_sample(rng, cs.joint1_twists, 3);
        ConvolutionInput in1 = in;
        in1.twist_left = vec_add(in.twist_left, vec_slice(m1, 0, cs.dl));
        in1.gamma = vec_add(in.gamma, vec_slice(m1, cs.dl, cs.dl + cs.dm));
        ++rep.perturbation_trials;
        if (!(convolve(cs, in1) == base))
            note("side-1 twist move changed the output at trial " + std::to_string(t));

        // side-2 move: (alpha, beta) in the joint2 twist lattice shifts the
        // relative twist by -alpha and the carried right twist by beta
        IntVec m2 = detail::lattice_sample(rng, cs.joint2_twists, 3);
        ConvolutionInput in2 = in;
        in2.gamma = vec_sub(in.gamma, vec_slice(m2, 0, cs.dm));
        in2.twist_right = vec_add(in.twist_right, vec_slice(m2, cs.dm, cs.dm + cs.dr));
        ++rep.perturbation_trials;
        if (!(convolve(cs, in2) == base))
            note("side-2 twist move changed the output at trial " + std::to_string(t));
    }
    return rep;
}

}  // namespace latcover
