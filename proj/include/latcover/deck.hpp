#pragma once

#include "latcover/contact.hpp"

namespace latcover {

namespace detail {

inline std::string digits_map(const Int& v, const char* const table[10]) {
    std::string out;
    for (char c : v.str()) out += table[c - '0'];
    return out;
}

inline std::string subscript(const Int& v) {
    static const char* const t[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    return digits_map(v, t);
}

inline std::string superscript(const Int& v) {
    static const char* const t[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    return digits_map(v, t);
}

// render "base" or "base^mult" with a unicode exponent
inline void append_power(std::string& out, const std::string& base, std::size_t mult) {
    if (!out.empty()) out += " ⊕ ";
    out += base;
    if (mult > 1) out += superscript(Int(mult));
}

}  // namespace detail

// description of a subgroup R' of R_H: its generators, its abstract shape,
// and (when the ambient quotient is torsion free) the divisor chain of the
// embedding, so (2Z)^2 inside Z^2 can be told apart from Z^2 itself
struct SubgroupDescriptor {
    IntMatrix generators;
    IntVec torsion;  // invariant factors > 1 of the abstract group
    std::size_t free_rank = 0;
    bool embedding_known = false;
    IntVec embedding_divisors;  // SNF chain of the embedding, when known
};

struct DeckGroupDescriptor {
    QuotientModule quotient_part;  // R_H / R'
    SubgroupDescriptor subgroup_part;

    // e.g. "Z₂² ⊕ (2Z)²"; quotient factors first, then the subgroup
    std::string display() const {
        std::string out;
        const IntVec& qt = quotient_part.torsion();
        for (std::size_t i = 0; i < qt.size();) {
            std::size_t j = i;
            while (j < qt.size() && qt[j] == qt[i]) ++j;
            detail::append_power(out, "Z" + detail::subscript(qt[i]), j - i);
            i = j;
        }
        if (quotient_part.free_rank() > 0)
            detail::append_power(out, "Z", quotient_part.free_rank());

        for (std::size_t i = 0; i < subgroup_part.torsion.size();) {
            std::size_t j = i;
            while (j < subgroup_part.torsion.size() &&
                   subgroup_part.torsion[j] == subgroup_part.torsion[i])
                ++j;
            detail::append_power(out, "Z" + detail::subscript(subgroup_part.torsion[i]), j - i);
            i = j;
        }
        if (subgroup_part.embedding_known) {
            const IntVec& e = subgroup_part.embedding_divisors;
            for (std::size_t i = 0; i < e.size();) {
                std::size_t j = i;
                while (j < e.size() && e[j] == e[i]) ++j;
                std::string base = e[i] == 1 ? "Z" : "(" + e[i].str() + "Z)";
                detail::append_power(out, base, j - i);
                i = j;
            }
        } else if (subgroup_part.free_rank > 0) {
            detail::append_power(out, "Z", subgroup_part.free_rank);
        }
        return out.empty() ? "0" : out;
    }
};

// Deck group of the cover attached to (H, s): the product of R_H/R' with R'
// itself.  rh is R_H = Z^n / H; rprime holds generators of R' as ambient
// vectors.  The abstract shape of R' is Z^k modulo the kernel of the induced
// map, i.e. modulo the preimage of H under the generator matrix.
inline DeckGroupDescriptor deck_group(const QuotientModule& rh, const IntMatrix& rprime) {
    if (rprime.rows != rh.ambient_rank())
        throw std::invalid_argument("deck_group: subgroup generators live in the wrong lattice");

    DeckGroupDescriptor out;
    out.quotient_part = QuotientModule(rh.ambient_rank(), hconcat(rh.relations(), rprime));

    SubgroupDescriptor& sg = out.subgroup_part;
    sg.generators = rprime;
    QuotientModule abstract(rprime.cols, preimage_subgroup(LatticeHom{rprime}, rh.relations()));
    sg.torsion = abstract.torsion();
    sg.free_rank = abstract.free_rank();

    // divisor chain of the embedding, defined when R_H itself is torsion free:
    // express the generators in a basis of the free quotient and read off the
    // nonzero SNF diagonal
    if (rh.torsion().empty()) {
        SnfDecomposition hs = smith_normal_form(rh.relations());
        std::size_t m = std::min(rh.relations().rows, rh.relations().cols);
        IntMatrix in_basis = hs.u * rprime;
        std::vector<std::size_t> free_rows;
        for (std::size_t i = 0; i < rh.ambient_rank(); ++i)
            if (i >= m || hs.d.at(i, i) == 0) free_rows.push_back(i);
        IntMatrix reduced(free_rows.size(), rprime.cols);
        for (std::size_t i = 0; i < free_rows.size(); ++i)
            for (std::size_t j = 0; j < rprime.cols; ++j)
                reduced.at(i, j) = in_basis.at(free_rows[i], j);
        for (const Int& d : smith_normal_form(reduced).diagonal())
            if (d != 0) sg.embedding_divisors.push_back(d);
        sg.embedding_known = true;
    }
    return out;
}

// index shift and twist correction for the residual action of η: j moves to
// the unique j' with γ_j + η − γ_{j'} in span[Φ | H], and η_j solves
// Φ(η_j) = γ_j + η − γ_{j'} modulo H
struct ThetaStep {
    std::size_t new_index = 0;
    IntVec twist_shift;  // η_j, in the twist domain
};

inline ThetaStep theta_data(const CosetSystem& cs, const LatticeHom& phi, const IntMatrix& h,
                            const IntVec& eta, std::size_t j) {
    const IntVec& gamma_j = cs.rep(j);
    if (eta.size() != gamma_j.size()) throw std::invalid_argument("theta_data: length mismatch");
    std::size_t jp = cs.index_of(vec_add(gamma_j, eta));
    IntVec diff = vec_sub(vec_add(gamma_j, eta), cs.rep(jp));
    auto sol = solve_linear(hconcat(phi.m, h), diff);
    if (!sol) throw std::logic_error("theta_data: unsolvable shift, coset system is inconsistent");
    return ThetaStep{jp, vec_slice(sol->particular, 0, phi.domain_rank())};
}

}  // namespace latcover
