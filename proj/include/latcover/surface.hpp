#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>

#include "latcover/matrix.hpp"
#include "latcover/series.hpp"

namespace latcover {

// an integral intersection lattice with a canonical class and named classes;
// all curve classes are coordinate vectors in the stored basis
struct SurfaceData {
    std::string name;
    std::size_t rank = 0;
    IntMatrix form;                 // symmetric intersection matrix
    IntVec canonical;               // canonical class K
    IntVec fiber;                   // distinguished fiber class
    std::vector<IntVec> sections;   // distinguished section classes
};

inline Int intersection(const SurfaceData& s, const IntVec& a, const IntVec& b) {
    if (a.size() != s.rank || b.size() != s.rank)
        throw std::invalid_argument("intersection: vector length does not match the rank");
    Int acc = 0;
    for (std::size_t i = 0; i < s.rank; ++i)
        for (std::size_t j = 0; j < s.rank; ++j) acc += a[i] * s.form.at(i, j) * b[j];
    return acc;
}

inline Int degree_along(const SurfaceData& s, const IntVec& a, const IntVec& divisor) {
    return intersection(s, a, divisor);
}

// the product of a line and a torus: basis (section, fiber) with
// section^2 = fiber^2 = 0, section.fiber = 1, K = -2 fiber
inline SurfaceData make_p1t2() {
    SurfaceData s;
    s.name = "P1xT2";
    s.rank = 2;
    s.form = IntMatrix{{0, 1}, {1, 0}};
    s.canonical = {0, -2};
    s.fiber = {0, 1};
    s.sections = {{1, 0}};
    return s;
}

// the rational elliptic surface: basis (s_1, ..., s_9, fiber) with
// s_i.s_j = -delta_ij, s_i.fiber = 1, fiber^2 = 0, K = -fiber
inline SurfaceData make_p9() {
    SurfaceData s;
    s.name = "P2hat9";
    s.rank = 10;
    s.form = IntMatrix::zero(10, 10);
    for (std::size_t i = 0; i < 9; ++i) {
        s.form.at(i, i) = -1;
        s.form.at(i, 9) = s.form.at(9, i) = 1;
    }
    s.canonical = IntVec(10);
    s.canonical[9] = -1;
    s.fiber = IntVec(10);
    s.fiber[9] = 1;
    for (std::size_t i = 0; i < 9; ++i) {
        IntVec sec(10);
        sec[i] = 1;
        s.sections.push_back(sec);
    }
    return s;
}

// insertion tag for k point constraints
inline std::string pt_tag(const Int& k) { return "pt^" + k.str(); }

// table of invariant values keyed by (genus, class, insertion tag); absent
// keys are errors on lookup, so proven-vanishing entries are stored as
// explicit zeros rather than left out
class GwTable {
  public:
    struct Entry {
        std::size_t genus;
        IntVec cls;
        std::string tag;
        Rat value;
    };

    void set(std::size_t genus, const IntVec& cls, const std::string& tag, const Rat& value) {
        values_[Key{genus, cls, tag}] = value;
    }

    // a vanishing result: populated, distinguishable from missing data
    void set_zero(std::size_t genus, const IntVec& cls, const std::string& tag) {
        set(genus, cls, tag, Rat(0));
    }

    bool has(std::size_t genus, const IntVec& cls, const std::string& tag) const {
        return values_.count(Key{genus, cls, tag}) > 0;
    }

    Rat get(std::size_t genus, const IntVec& cls, const std::string& tag) const {
        auto it = values_.find(Key{genus, cls, tag});
        if (it == values_.end())
            throw std::out_of_range("no table entry for genus " + std::to_string(genus) +
                                    ", class " + vec_to_string(cls) + ", insertions " + tag);
        return it->second;
    }

    std::vector<Entry> entries() const {
        std::vector<Entry> out;
        out.reserve(values_.size());
        for (const auto& [key, value] : values_)
            out.push_back(Entry{std::get<0>(key), std::get<1>(key), std::get<2>(key), value});
        return out;
    }

  private:
    using Key = std::tuple<std::size_t, IntVec, std::string>;
    std::map<Key, Rat> values_;
};

// GW_{1,0}(f) = K.f / 24
inline Rat gw1_zero_class(const SurfaceData& s, const IntVec& f) {
    return Rat(intersection(s, s.canonical, f), Int(24));
}

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Genus-1 recursion with a divisor insertion: for K.A < 0,
//   GW_{1,A}(tau_1(f), pt^{-K.A-1})
//     = (f.A)/24 (A.A + K.A) GW_{0,A}(pt^{-K.A-1})
//     + sum_{A0 + A1 = A, both nonzero} binom(-K.A-1, -K.A0-1)
//         (f.A0)(A0.A1) GW_{0,A0}(pt^{-K.A0-1}) GW_{1,A1}(pt^{-K.A1}).
// The splitting sum runs over the genus-1 classes populated in gw1pt; the
// finite support of the supplied tables is the caller's assertion that all
// other splittings vanish.
inline Rat trr_genus1(const SurfaceData& s, const IntVec& a, const IntVec& f,
                      const GwTable& gw0, const GwTable& gw1pt) {
    Int ka = intersection(s, s.canonical, a);
    if (ka >= 0) throw std::invalid_argument("trr_genus1 requires K.A < 0");
    Int k = -ka;

    Rat total = Rat(intersection(s, f, a), Int(24)) *
                Rat(intersection(s, a, a) + ka) * gw0.get(0, a, pt_tag(k - 1));

    std::set<IntVec> gw1_classes;
    for (const auto& e : gw1pt.entries())
        if (e.genus == 1 && !is_zero_vec(e.cls)) gw1_classes.insert(e.cls);

    for (const IntVec& a1 : gw1_classes) {
        IntVec a0 = vec_sub(a, a1);
        if (is_zero_vec(a0)) continue;
        Int k0 = -intersection(s, s.canonical, a0) - 1;
        Int coeff = binomial(k - 1, k0) * intersection(s, f, a0) * intersection(s, a0, a1);
        if (coeff == 0) continue;
        Int k1 = -intersection(s, s.canonical, a1);
        total += Rat(coeff) * gw0.get(0, a0, pt_tag(k0)) * gw1pt.get(1, a1, pt_tag(k1));
    }
    return total;
}

// genus-1 fiber-class invariants of the two model surfaces: the generating
// functions sum_{d >= 1} d GW_{1, d fiber} q^d equal 2G(q) and G(q)
inline Rat p1t2_genus1_fiber(const Int& d) {
    if (d < 1) throw std::invalid_argument("p1t2_genus1_fiber requires d >= 1");
    return Rat(2 * sigma(d), d);
}

inline Rat p9_genus1_fiber(const Int& d) {
    if (d < 1) throw std::invalid_argument("p9_genus1_fiber requires d >= 1");
    return Rat(sigma(d), d);
}

// relative section-class series sum_d GW(section + d fiber) q^d = q G'(q)
inline Rat p1t2_relative_section(const Int& d) {
    if (d < 0) throw std::invalid_argument("p1t2_relative_section requires d >= 0");
    if (d == 0) return Rat(0);
    return Rat(d * sigma(d));
}

// genus-0 table for the line-times-torus model up to fiber degree max_d: the
// section class counts one curve, and the moduli spaces for section + d fiber
// with d >= 1 are empty
inline GwTable p1t2_gw0_table(const Int& max_d) {
    SurfaceData s = make_p1t2();
    GwTable t;
    t.set(0, s.sections[0], pt_tag(1), Rat(1));
    for (Int d = 1; d <= max_d; ++d)
        t.set_zero(0, vec_add(s.sections[0], vec_scale(d, s.fiber)), pt_tag(1));
    return t;
}

inline GwTable p1t2_gw1_table(const Int& max_d) {
    SurfaceData s = make_p1t2();
    GwTable t;
    for (Int d = 1; d <= max_d; ++d)
        t.set(1, vec_scale(d, s.fiber), pt_tag(0), p1t2_genus1_fiber(d));
    return t;
}

// genus-0 table for the rational elliptic surface: section + d fiber carries
// the d-th coefficient of the supplied genus-0 generating function
inline GwTable p9_gw0_table(const PowerSeries& f0, const Int& max_d) {
    SurfaceData s = make_p9();
    GwTable t;
    for (Int d = 0; d <= max_d; ++d)
        t.set(0, vec_add(s.sections[0], vec_scale(d, s.fiber)), pt_tag(0),
              f0[static_cast<std::size_t>(d)]);
    return t;
}

inline GwTable p9_gw1_table(const Int& max_d) {
    SurfaceData s = make_p9();
    GwTable t;
    for (Int d = 1; d <= max_d; ++d)
        t.set(1, vec_scale(d, s.fiber), pt_tag(0), p9_genus1_fiber(d));
    return t;
}

}  // namespace latcover
