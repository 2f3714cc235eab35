#pragma once

#include <numeric>

#include "latcover/quotient.hpp"

namespace latcover {

// One connected piece of the base space: its first homology rank and the
// tuple of nonzero contact multiplicities attached to it.  The tuple may be
// empty (no contact points on that piece).
struct ContactComponent {
    std::size_t rank = 0;
    IntVec s;
};

// Contact data across all components.  The ambient lattice is the direct sum
// of the per-component lattices; the twist domain stacks one copy of each
// component lattice per contact entry.
struct ContactVector {
    std::vector<ContactComponent> components;

    ContactVector() = default;
    ContactVector(std::initializer_list<ContactComponent> cs) : components(cs) { validate(); }
    explicit ContactVector(std::vector<ContactComponent> cs) : components(std::move(cs)) {
        validate();
    }

    void validate() const {
        if (components.empty())
            throw std::invalid_argument("contact vector needs at least one component");
        for (const auto& c : components)
            for (const Int& x : c.s)
                if (x == 0) throw std::invalid_argument("contact entries must be nonzero");
    }

    std::size_t total_rank() const {
        std::size_t n = 0;
        for (const auto& c : components) n += c.rank;
        return n;
    }
    std::size_t domain_rank() const {
        std::size_t n = 0;
        for (const auto& c : components) n += c.rank * c.s.size();
        return n;
    }
    std::size_t entry_count() const {
        std::size_t n = 0;
        for (const auto& c : components) n += c.s.size();
        return n;
    }

    bool operator==(const ContactVector& o) const {
        if (components.size() != o.components.size()) return false;
        for (std::size_t i = 0; i < components.size(); ++i)
            if (components[i].rank != o.components[i].rank ||
                components[i].s != o.components[i].s)
                return false;
        return true;
    }
};

// single component of the given rank; the common case in the examples
inline ContactVector single_component(std::size_t rank, IntVec s) {
    return ContactVector({ContactComponent{rank, std::move(s)}});
}

// gcd of one component's multiplicities; 0 when the tuple is empty
inline Int gcd_contact(const ContactVector& cv, std::size_t r) {
    Int g = 0;
    for (const Int& x : cv.components.at(r).s) g = int_gcd(g, x);
    return g;
}

// an integer-linear map between lattices, stored as its matrix
struct LatticeHom {
    IntMatrix m;  // codomain rank x domain rank

    std::size_t domain_rank() const { return m.cols; }
    std::size_t codomain_rank() const { return m.rows; }
    IntVec apply(const IntVec& v) const { return m * v; }
};

// The weighted sum map from the stacked twist lattice to the ambient lattice:
// the copy of component r attached to contact entry s_{r,i} maps by
// multiplication with s_{r,i} into the r-th summand.
inline LatticeHom phi_map(const ContactVector& cv) {
    std::size_t n = cv.total_rank(), dom = cv.domain_rank();
    IntMatrix m(n, dom);
    std::size_t row0 = 0, col0 = 0;
    for (const auto& comp : cv.components) {
        for (const Int& mult : comp.s) {
            for (std::size_t a = 0; a < comp.rank; ++a) m.at(row0 + a, col0 + a) = mult;
            col0 += comp.rank;
        }
        row0 += comp.rank;
    }
    return LatticeHom{std::move(m)};
}

// stacked map on a disjoint pair of bases, acting blockwise
inline LatticeHom phi_pair(const ContactVector& left, const ContactVector& right) {
    return LatticeHom{block_diag(phi_map(left).m, phi_map(right).m)};
}

// generators of f^{-1}(span h): project the kernel of [f | -h] onto the
// domain coordinates; contains ker f automatically
inline IntMatrix preimage_subgroup(const LatticeHom& f, const IntMatrix& h) {
    if (h.rows != f.codomain_rank())
        throw std::invalid_argument("preimage_subgroup: ambient rank mismatch");
    IntMatrix neg_h = h;
    for (auto& x : neg_h.entries) x = -x;
    IntMatrix ker = kernel_basis(hconcat(f.m, neg_h));
    IntMatrix out(f.domain_rank(), ker.cols);
    for (std::size_t j = 0; j < ker.cols; ++j)
        for (std::size_t i = 0; i < f.domain_rank(); ++i) out.at(i, j) = ker.at(i, j);
    return out;
}

// generators of the image of f, pushed into the quotient: columns are the
// normal forms of f applied to the domain basis, with zero columns dropped
inline IntMatrix image_in_quotient(const LatticeHom& f, const QuotientModule& q) {
    if (q.ambient_rank() != f.codomain_rank())
        throw std::invalid_argument("image_in_quotient: ambient rank mismatch");
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < f.domain_rank(); ++j) {
        IntVec nf = q.normal_form(f.m.column(j));
        if (!is_zero_vec(nf)) cols.push_back(std::move(nf));
    }
    return IntMatrix::from_columns(q.ambient_rank(), cols);
}

}  // namespace latcover
