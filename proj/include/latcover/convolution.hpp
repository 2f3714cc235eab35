#pragma once

#include <optional>
#include <string>

#include "latcover/covers.hpp"

namespace latcover {

// Data for the convolution of a cover of V' x V with a cover of V x V'',
// producing a cover of V' x V''.  Seven subgroups tie the three bases
// together; the validation conditions below make the three-step resolution
// in convolve() solvable and its output independent of all choices.
struct ConvolutionSpec {
    ContactVector left, mid, right;   // contact data on V', V, V''
    std::size_t nl = 0, nm = 0, nr = 0;  // ambient ranks
    std::size_t dl = 0, dm = 0, dr = 0;  // twist-domain ranks

    IntMatrix h1, h2;      // subgroups of the middle lattice
    IntMatrix pair12;      // subgroup of mid + mid
    IntMatrix out12;       // subgroup of left + right
    IntMatrix joint1;      // subgroup of left + mid (side-1 cover)
    IntMatrix joint2;      // subgroup of mid + right (side-2 cover)
    IntMatrix lift12;      // subgroup of left + mid + mid + right

    LatticeHom phi_left, phi_mid, phi_right;
    LatticeHom phi_lm, phi_mr, phi_lr;  // blockwise maps on the joined bases

    QuotientModule pair_mod;        // (mid + mid) / pair12
    CosetSystem cos1, cos2, cos_out;
    QuotientModule out_twist_mod;   // (left+right twist domain) / preimage of out12

    // twist lattices governing the well-definedness moves
    IntMatrix joint1_twists;  // preimage of joint1 under phi_lm
    IntMatrix joint2_twists;  // preimage of joint2 under phi_mr
};

struct ConvolutionInput {
    std::size_t j1 = 0, j2 = 0;
    IntVec gamma;        // relative twist on the shared middle base
    IntVec twist_left;   // carried twist on the V' side
    IntVec twist_right;  // carried twist on the V'' side
};

struct ConvolutionOutput {
    std::size_t j_out = 0;
    IntVec twist;  // joint (left, right) twist, canonical mod the output twist lattice

    bool operator==(const ConvolutionOutput& o) const {
        return j_out == o.j_out && twist == o.twist;
    }
};

inline ConvolutionSpec make_convolution_spec(ContactVector left, ContactVector mid,
                                             ContactVector right, IntMatrix h1, IntMatrix h2,
                                             IntMatrix pair12, IntMatrix out12, IntMatrix joint1,
                                             IntMatrix joint2, IntMatrix lift12) {
    ConvolutionSpec cs;
    cs.left = std::move(left);
    cs.mid = std::move(mid);
    cs.right = std::move(right);
    cs.nl = cs.left.total_rank();
    cs.nm = cs.mid.total_rank();
    cs.nr = cs.right.total_rank();
    cs.dl = cs.left.domain_rank();
    cs.dm = cs.mid.domain_rank();
    cs.dr = cs.right.domain_rank();

    auto check = [](const IntMatrix& m, std::size_t rank, const char* what) {
        if (m.rows != rank)
            throw std::invalid_argument(std::string("generator matrix for ") + what +
                                        " has the wrong ambient rank");
    };
    check(h1, cs.nm, "H1");
    check(h2, cs.nm, "H2");
    check(pair12, 2 * cs.nm, "the pair-level subgroup");
    check(out12, cs.nl + cs.nr, "the output subgroup");
    check(joint1, cs.nl + cs.nm, "the side-1 joint subgroup");
    check(joint2, cs.nm + cs.nr, "the side-2 joint subgroup");
    check(lift12, cs.nl + 2 * cs.nm + cs.nr, "the lift subgroup");
    cs.h1 = std::move(h1);
    cs.h2 = std::move(h2);
    cs.pair12 = std::move(pair12);
    cs.out12 = std::move(out12);
    cs.joint1 = std::move(joint1);
    cs.joint2 = std::move(joint2);
    cs.lift12 = std::move(lift12);

    cs.phi_left = phi_map(cs.left);
    cs.phi_mid = phi_map(cs.mid);
    cs.phi_right = phi_map(cs.right);
    cs.phi_lm = phi_pair(cs.left, cs.mid);
    cs.phi_mr = phi_pair(cs.mid, cs.right);
    cs.phi_lr = phi_pair(cs.left, cs.right);

    cs.pair_mod = QuotientModule(2 * cs.nm, cs.pair12);
    cs.cos1 = CosetSystem(
        QuotientModule(cs.nl + cs.nm, hconcat(cs.joint1, image_in_quotient(cs.phi_lm, QuotientModule(cs.nl + cs.nm, cs.joint1)))));
    cs.cos2 = CosetSystem(
        QuotientModule(cs.nm + cs.nr, hconcat(cs.joint2, image_in_quotient(cs.phi_mr, QuotientModule(cs.nm + cs.nr, cs.joint2)))));
    cs.cos_out = CosetSystem(
        QuotientModule(cs.nl + cs.nr, hconcat(cs.out12, image_in_quotient(cs.phi_lr, QuotientModule(cs.nl + cs.nr, cs.out12)))));
    cs.out_twist_mod =
        QuotientModule(cs.dl + cs.dr, preimage_subgroup(cs.phi_lr, cs.out12));
    cs.joint1_twists = preimage_subgroup(cs.phi_lm, cs.joint1);
    cs.joint2_twists = preimage_subgroup(cs.phi_mr, cs.joint2);
    return cs;
}

namespace detail {

// v embedded into a wider zero vector at the given offset
inline IntVec embed(const IntVec& v, std::size_t offset, std::size_t total) {
    IntVec out(total);
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
}

}  // namespace detail

// First failing compatibility condition, or nullopt when the data is usable.
// The checks mirror the two condition groups the construction relies on.
inline std::optional<std::string> validate_convolution_spec(const ConvolutionSpec& cs) {
    std::size_t nl = cs.nl, nm = cs.nm, nr = cs.nr;
    std::size_t lift_rank = nl + 2 * nm + nr;

    // group 1: containments among the given subgroups
    for (std::size_t j = 0; j < cs.h1.cols; ++j)
        if (!in_span(cs.pair12, detail::embed(cs.h1.column(j), 0, 2 * nm)))
            return "H1 + H2 is not contained in the pair-level subgroup";
    for (std::size_t j = 0; j < cs.h2.cols; ++j)
        if (!in_span(cs.pair12, detail::embed(cs.h2.column(j), nm, 2 * nm)))
            return "H1 + H2 is not contained in the pair-level subgroup";
    for (std::size_t i = 0; i < nm; ++i) {
        IntVec diag(2 * nm);
        diag[i] = diag[nm + i] = 1;
        if (!in_span(cs.pair12, diag))
            return "the diagonal is not contained in the pair-level subgroup";
    }
    for (std::size_t j = 0; j < cs.joint1.cols; ++j) {
        IntVec c = cs.joint1.column(j);  // (left, mid) -> (left, mid, 0, 0)
        IntVec e = detail::embed(c, 0, lift_rank);
        if (!in_span(cs.lift12, e))
            return "the side joint subgroups are not contained in the lift subgroup";
    }
    for (std::size_t j = 0; j < cs.joint2.cols; ++j) {
        IntVec c = cs.joint2.column(j);  // (mid, right) -> (0, 0, mid, right)
        IntVec e = detail::embed(c, nl + nm, lift_rank);
        if (!in_span(cs.lift12, e))
            return "the side joint subgroups are not contained in the lift subgroup";
    }
    for (std::size_t i = 0; i < nm; ++i) {
        IntVec diag(lift_rank);
        diag[nl + i] = diag[nl + nm + i] = 1;
        if (!in_span(cs.lift12, diag))
            return "the embedded diagonal is not contained in the lift subgroup";
    }

    // group 2: projections of the lift subgroup
    IntMatrix mid_rows = cs.lift12.row_slice(nl, nl + 2 * nm);
    IntMatrix ker = kernel_basis(mid_rows);
    IntMatrix middle_kernel_gens = cs.lift12 * ker;
    for (std::size_t j = 0; j < middle_kernel_gens.cols; ++j) {
        IntVec g = middle_kernel_gens.column(j);
        IntVec side = vec_concat(vec_slice(g, 0, nl), vec_slice(g, nl + 2 * nm, lift_rank));
        if (!in_span(cs.out12, side))
            return "the lift subgroup meets the middle kernel outside the output subgroup";
    }
    for (std::size_t j = 0; j < cs.joint1.cols; ++j)
        if (!in_span(cs.h1, vec_slice(cs.joint1.column(j), nl, nl + nm)))
            return "the middle projection of the side-1 joint subgroup escapes H1";
    for (std::size_t j = 0; j < cs.joint2.cols; ++j)
        if (!in_span(cs.h2, vec_slice(cs.joint2.column(j), 0, nm)))
            return "the middle projection of the side-2 joint subgroup escapes H2";
    for (std::size_t j = 0; j < cs.pair12.cols; ++j)
        if (!in_span(mid_rows, cs.pair12.column(j)))
            return "the middle projection of the lift subgroup does not cover the pair-level "
                   "subgroup";
    return std::nullopt;
}

// Three-step resolution of the convolution product.  Notation follows the
// derived fields: rep1 = (left, mid) representative of the side-1 sheet,
// rep2 = (mid, right) representative of the side-2 sheet.
inline ConvolutionOutput convolve(const ConvolutionSpec& cs, const ConvolutionInput& in) {
    if (in.gamma.size() != cs.dm || in.twist_left.size() != cs.dl ||
        in.twist_right.size() != cs.dr)
        throw std::invalid_argument("convolve: twist length mismatch");
    const IntVec& rep1 = cs.cos1.rep(in.j1);
    const IntVec& rep2 = cs.cos2.rep(in.j2);
    IntVec rep1_left = vec_slice(rep1, 0, cs.nl);
    IntVec rep1_mid = vec_slice(rep1, cs.nl, cs.nl + cs.nm);
    IntVec rep2_mid = vec_slice(rep2, 0, cs.nm);
    IntVec rep2_right = vec_slice(rep2, cs.nm, cs.nm + cs.nr);

    // step 1: split the middle data into coset representative plus remainder
    IntVec u = vec_concat(vec_add(rep1_mid, cs.phi_mid.apply(in.gamma)), rep2_mid);
    IntVec hbar = vec_sub(u, cs.pair_mod.normal_form(u));

    // step 2: lift the remainder through the lift subgroup
    IntMatrix mid_rows = cs.lift12.row_slice(cs.nl, cs.nl + 2 * cs.nm);
    auto lift_sol = solve_linear(mid_rows, hbar);
    if (!lift_sol) throw std::logic_error("convolve: lift failed; spec not validated");
    IntVec lift = cs.lift12 * lift_sol->particular;
    IntVec h_left = vec_slice(lift, 0, cs.nl);
    IntVec h_right = vec_slice(lift, cs.nl + 2 * cs.nm, cs.nl + 2 * cs.nm + cs.nr);

    // step 3: resolve the outer data into sheet representative and twists
    IntVec w = vec_concat(vec_sub(rep1_left, h_left), vec_sub(rep2_right, h_right));
    std::size_t j_out = cs.cos_out.index_of(w);
    IntVec residue = vec_sub(w, cs.cos_out.rep(j_out));
    auto out_sol = solve_linear(hconcat(cs.phi_lr.m, cs.out12), residue);
    if (!out_sol) throw std::logic_error("convolve: output split failed; spec not validated");
    IntVec tau = vec_slice(out_sol->particular, 0, cs.dl + cs.dr);

    IntVec carried = vec_concat(in.twist_left, in.twist_right);
    return ConvolutionOutput{j_out, cs.out_twist_mod.normal_form(vec_add(carried, tau))};
}

// middle-difference image of the pair-level subgroup; the pair quotient is
// isomorphic to the middle lattice modulo this subgroup
inline IntMatrix pair_difference_subgroup(const ConvolutionSpec& cs) {
    IntMatrix out(cs.nm, cs.pair12.cols);
    for (std::size_t j = 0; j < cs.pair12.cols; ++j)
        for (std::size_t i = 0; i < cs.nm; ++i)
            out.at(i, j) = cs.pair12.at(i, j) - cs.pair12.at(cs.nm + i, j);
    return out;
}

// The concrete module family of the worked product example: V' empty, V and
// V'' one component of rank 2, H1 = 0, H2 full, pair level full, side-2
// joint the diagonal, lift generated by (a, a, 0) and (0, b, b).
inline ConvolutionSpec make_product_example_spec(const IntVec& s1, const IntVec& s2) {
    ContactVector left({ContactComponent{0, {}}});
    ContactVector mid = single_component(2, s1);
    ContactVector right = single_component(2, s2);
    IntMatrix h1(2, 0);
    IntMatrix h2 = IntMatrix::identity(2);
    IntMatrix pair12 = IntMatrix::identity(4);
    IntMatrix out12(2, 0);
    IntMatrix joint1(2, 0);
    IntMatrix joint2(4, 2);
    for (std::size_t i = 0; i < 2; ++i) joint2.at(i, i) = joint2.at(2 + i, i) = 1;
    IntMatrix lift12(6, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        lift12.at(i, i) = lift12.at(2 + i, i) = 1;          // (a, a, 0)
        lift12.at(2 + i, 2 + i) = lift12.at(4 + i, 2 + i) = 1;  // (0, b, b)
    }
    return make_convolution_spec(left, mid, right, h1, h2, pair12, out12, joint1, joint2,
                                 lift12);
}

}  // namespace latcover
