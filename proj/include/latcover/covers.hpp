#pragma once

#include <optional>

#include "latcover/deck.hpp"

namespace latcover {

// Everything derived from one choice of (contact data, subgroup H): the
// weighted sum map, the twist lattice H_s = Φ^{-1}(H), the ambient quotient
// R_H, the image subgroup R', the deck group (R_H/R') x R', and, when the
// quotient R_H/R' is finite, a canonical system of coset representatives.
struct CoverSpec {
    ContactVector contact;
    IntMatrix h;
    LatticeHom phi;
    IntMatrix h_s;
    QuotientModule r_h;          // Z^n / H
    IntMatrix rprime;            // generators of R' = image of Φ in R_H
    QuotientModule quot;         // R_H / R'
    DeckGroupDescriptor deck;
    std::optional<CosetSystem> cosets;
    QuotientModule twist_mod;    // twist domain / H_s

    const CosetSystem& coset_system() const {
        if (!cosets)
            throw InfiniteQuotientError("cover has an infinite coset group; no rep system");
        return *cosets;
    }
};

inline CoverSpec make_cover_spec(ContactVector contact, IntMatrix h) {
    CoverSpec c;
    c.contact = std::move(contact);
    std::size_t n = c.contact.total_rank();
    if (h.rows != n) throw std::invalid_argument("subgroup generators have the wrong rank");
    c.h = std::move(h);
    c.phi = phi_map(c.contact);
    c.h_s = preimage_subgroup(c.phi, c.h);
    c.r_h = QuotientModule(n, c.h);
    c.rprime = image_in_quotient(c.phi, c.r_h);
    c.quot = QuotientModule(n, hconcat(c.h, c.rprime));
    c.deck = deck_group(c.r_h, c.rprime);
    if (c.quot.is_finite()) c.cosets = CosetSystem(c.quot);
    c.twist_mod = QuotientModule(c.phi.domain_rank(), c.h_s);
    return c;
}

// a cover point in symbolic form: which sheet-class it sits on, and the deck
// twist applied to the canonical base lift of that sheet
struct SymbolicPoint {
    std::size_t j = 0;
    IntVec twist;  // canonical form mod H_s

    bool operator==(const SymbolicPoint& o) const { return j == o.j && twist == o.twist; }
};

inline SymbolicPoint symbolic_point(const CoverSpec& c, std::size_t j, const IntVec& gamma) {
    if (j >= c.coset_system().size()) throw std::out_of_range("symbolic_point: bad coset index");
    return SymbolicPoint{j, c.twist_mod.normal_form(gamma)};
}

// residual deck action of η on a symbolic point
inline SymbolicPoint deck_apply(const CoverSpec& c, const IntVec& eta, const SymbolicPoint& p) {
    ThetaStep st = theta_data(c.coset_system(), c.phi, c.h, eta, p.j);
    return SymbolicPoint{st.new_index, c.twist_mod.normal_form(vec_add(p.twist, st.twist_shift))};
}

// two covers of the same base with a common refinement subgroup H12; optional
// inclusion matrix pushing R_{H12} into an outer lattice for degree bookkeeping
struct DiagPairSpec {
    CoverSpec side1, side2;
    IntMatrix h12;
    QuotientModule r_h12;
    std::optional<IntMatrix> inclusion;
};

inline DiagPairSpec make_diag_pair(CoverSpec side1, CoverSpec side2, IntMatrix h12,
                                   std::optional<IntMatrix> inclusion = std::nullopt) {
    if (!(side1.contact == side2.contact))
        throw std::invalid_argument("diagonal pair needs a common contact vector");
    std::size_t n = side1.contact.total_rank();
    if (h12.rows != n) throw std::invalid_argument("H12 generators have the wrong rank");
    if (!span_contains(h12, side1.h) || !span_contains(h12, side2.h))
        throw std::invalid_argument("H12 must contain both side subgroups");
    if (inclusion) {
        if (inclusion->cols != n)
            throw std::invalid_argument("inclusion matrix domain must be the ambient lattice");
        for (std::size_t j = 0; j < h12.cols; ++j)
            if (!is_zero_vec(*inclusion * h12.column(j)))
                throw std::invalid_argument("inclusion matrix must vanish on H12");
    }
    DiagPairSpec dp{std::move(side1), std::move(side2), std::move(h12), QuotientModule(), {}};
    dp.r_h12 = QuotientModule(n, dp.h12);
    dp.inclusion = std::move(inclusion);
    return dp;
}

// the sheet-difference class [Φ(γ) + γ_{1;j1} - γ_{2;j2}] in R_{H12}
inline QuotElement psi_value(const DiagPairSpec& dp, const IntVec& gamma, std::size_t j1,
                             std::size_t j2) {
    const IntVec& g1 = dp.side1.coset_system().rep(j1);
    const IntVec& g2 = dp.side2.coset_system().rep(j2);
    IntVec v = vec_add(dp.side1.phi.apply(gamma), vec_sub(g1, g2));
    return project(dp.r_h12, v);
}

// which diagonal component a fiber pair lands on; same value as psi_value
inline QuotElement diag_component_of(const DiagPairSpec& dp, const IntVec& gamma, std::size_t j1,
                                     std::size_t j2) {
    return psi_value(dp, gamma, j1, j2);
}

// Refined gluing degree: affine in the sheet-difference class, anchored so
// the base pair reproduces a_base.  The optional inclusion pushes the class
// into the outer degree lattice; it kills H12, so working with canonical
// representatives is legitimate.
inline IntVec glue_degree(const IntVec& a_base, const QuotElement& psi_base,
                          const DiagPairSpec& dp, const IntVec& gamma, std::size_t j1,
                          std::size_t j2) {
    QuotElement psi = psi_value(dp, gamma, j1, j2);
    IntVec shift = vec_sub(psi.rep, psi_base.rep);
    if (dp.inclusion) shift = *dp.inclusion * shift;
    if (a_base.size() != shift.size())
        throw std::invalid_argument("glue_degree: degree vector has the wrong rank");
    return vec_add(a_base, shift);
}

}  // namespace latcover
