#include <catch2/catch_amalgamated.hpp>

#include "latcover/contact.hpp"
#include "latcover/deck.hpp"
#include "oracles.hpp"

using namespace latcover;

TEST_CASE("smith normal form on worked examples") {
    SECTION("identity stays put") {
        SnfDecomposition s = smith_normal_form(IntMatrix::identity(2));
        REQUIRE(s.d == IntMatrix::identity(2));
        REQUIRE(s.u == IntMatrix::identity(2));
        REQUIRE(s.v == IntMatrix::identity(2));
    }
    SECTION("zero matrix") {
        SnfDecomposition s = smith_normal_form(IntMatrix{{0}});
        REQUIRE(s.d == IntMatrix{{0}});
    }
    SECTION("2x2 with nontrivial chain") {
        // frozen by row/column reduction by hand: d1 = gcd of entries = 2,
        // d1 d2 = |det| = 8
        IntMatrix a{{2, 4}, {6, 8}};
        SnfDecomposition s = smith_normal_form(a);
        REQUIRE(s.diagonal() == IntVec{2, 4});
        REQUIRE(s.u * a * s.v == s.d);
    }
    SECTION("wide matrix, extended euclid") {
        IntMatrix a{{2, 3}};
        SnfDecomposition s = smith_normal_form(a);
        REQUIRE(s.d == IntMatrix{{1, 0}});
        REQUIRE(s.v == IntMatrix{{-1, 3}, {1, -2}});
        REQUIRE(s.u * a * s.v == s.d);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t rows = 1 + oracles::rand_below(rng, 6);
        std::size_t cols = 1 + oracles::rand_below(rng, 6);
        IntMatrix a(rows, cols);
        for (auto& x : a.entries) x = oracles::rand_int(rng, -50, 50);

        SnfDecomposition s = smith_normal_form(a);
        REQUIRE(s.u * a * s.v == s.d);
        REQUIRE(int_abs(oracles::bareiss_determinant(s.u)) == 1);
        REQUIRE(int_abs(oracles::bareiss_determinant(s.v)) == 1);
        REQUIRE(s.u * s.u_inv == IntMatrix::identity(rows));

        IntVec diag = s.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            REQUIRE(diag[i] >= 0);
            if (diag[i] == 0)
                REQUIRE(diag[i + 1] == 0);
            else
                REQUIRE(diag[i + 1] % diag[i] == 0);
        }
    }
}

TEST_CASE("integer determinant") {
    REQUIRE(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
    REQUIRE(determinant(IntMatrix::identity(3)) == 1);
    std::mt19937_64 rng(7011);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + oracles::rand_below(rng, 5);
        IntMatrix a(n, n);
        for (auto& x : a.entries) x = oracles::rand_int(rng, -20, 20);
        REQUIRE(determinant(a) == oracles::bareiss_determinant(a));
        // the unimodular factors cannot change the absolute value
        Int prod = 1;
        for (const Int& d : smith_normal_form(a).diagonal()) prod *= d;
        REQUIRE(int_abs(determinant(a)) == prod);
    }
}

TEST_CASE("integer linear solving") {
    SECTION("single equation with a solution") {
        auto sol = solve_linear(IntMatrix{{2}}, IntVec{4});
        REQUIRE(sol);
        REQUIRE(sol->particular == IntVec{2});
        REQUIRE(sol->kernel.cols == 0);
    }
    SECTION("parity obstruction") { REQUIRE_FALSE(solve_linear(IntMatrix{{2}}, IntVec{1})); }
    SECTION("underdetermined equation") {
        auto sol = solve_linear(IntMatrix{{2, 3}}, IntVec{1});
        REQUIRE(sol);
        REQUIRE(sol->particular == IntVec{-1, 1});
        REQUIRE(sol->kernel.cols == 1);
        REQUIRE(sol->kernel.column(0) == IntVec{3, -2});
    }
    SECTION("random solvable systems") {
        std::mt19937_64 rng(31337);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t rows = 1 + oracles::rand_below(rng, 5);
            std::size_t cols = 1 + oracles::rand_below(rng, 5);
            IntMatrix a(rows, cols);
            for (auto& x : a.entries) x = oracles::rand_int(rng, -9, 9);
            IntVec x0(cols);
            for (auto& x : x0) x = oracles::rand_int(rng, -9, 9);
            IntVec b = a * x0;

            auto sol = solve_linear(a, b);
            REQUIRE(sol);
            REQUIRE(a * sol->particular == b);
            IntVec shifted = sol->particular;
            for (std::size_t j = 0; j < sol->kernel.cols; ++j) {
                REQUIRE(is_zero_vec(a * sol->kernel.column(j)));
                shifted = vec_add(shifted,
                                  vec_scale(oracles::rand_int(rng, -3, 3), sol->kernel.column(j)));
            }
            REQUIRE(a * shifted == b);
        }
    }
    SECTION("span membership") {
        IntMatrix gens{{2, 0}, {0, 2}};
        REQUIRE(in_span(gens, IntVec{4, -2}));
        REQUIRE_FALSE(in_span(gens, IntVec{1, 0}));
        REQUIRE(span_contains(gens, IntMatrix{{2, 4}, {2, 0}}));
        REQUIRE_FALSE(span_contains(gens, IntMatrix::identity(2)));
    }
    SECTION("kernel basis") {
        IntMatrix k = kernel_basis(IntMatrix{{1, 1}});
        REQUIRE(k.cols == 1);
        REQUIRE(k.at(0, 0) + k.at(1, 0) == 0);
        REQUIRE(int_abs(k.at(0, 0)) == 1);
        REQUIRE(kernel_basis(IntMatrix::identity(3)).cols == 0);
    }
}

TEST_CASE("quotient modules and normal forms") {
    SECTION("free quotient leaves vectors alone") {
        QuotientModule q(2, IntMatrix(2, 0));
        REQUIRE(q.free_rank() == 2);
        REQUIRE(q.torsion().empty());
        REQUIRE(q.normal_form(IntVec{3, 5}) == IntVec{3, 5});
    }
    SECTION("mod 2 in both coordinates") {
        QuotientModule q(2, IntMatrix{{2, 0}, {0, 2}});
        REQUIRE(q.torsion() == IntVec{2, 2});
        REQUIRE(q.is_finite());
        REQUIRE(q.order() == 4);
        REQUIRE(q.normal_form(IntVec{3, 5}) == IntVec{1, 1});
        REQUIRE(q.is_zero_class(q.relations().column(0)));
        REQUIRE(q.same_class(IntVec{3, 5}, IntVec{1, 1}));
        REQUIRE(q.enumerate() ==
                std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    }
    SECTION("rank one") {
        QuotientModule q(1, IntMatrix{{2}});
        REQUIRE(q.torsion() == IntVec{2});
        REQUIRE(q.normal_form(IntVec{-3}) == IntVec{1});
    }
    SECTION("idempotence and additivity up to renormalization") {
        std::mt19937_64 rng(424242);
        for (int trial = 0; trial < 300; ++trial) {
            IntMatrix rel(3, 1 + oracles::rand_below(rng, 4));
            for (auto& x : rel.entries) x = oracles::rand_int(rng, -6, 6);
            QuotientModule q(3, rel);
            IntVec v(3), w(3);
            for (auto& x : v) x = oracles::rand_int(rng, -40, 40);
            for (auto& x : w) x = oracles::rand_int(rng, -40, 40);
            REQUIRE(q.normal_form(q.normal_form(v)) == q.normal_form(v));
            REQUIRE(q.normal_form(vec_add(v, w)) ==
                    q.normal_form(vec_add(q.normal_form(v), q.normal_form(w))));
            for (std::size_t j = 0; j < rel.cols; ++j)
                REQUIRE(q.is_zero_class(vec_add(v, rel.column(j))) == q.is_zero_class(v));
        }
    }
    SECTION("infinite quotients refuse to enumerate") {
        QuotientModule q(2, IntMatrix{{2}, {0}});
        REQUIRE(q.free_rank() == 1);
        REQUIRE_FALSE(q.is_finite());
        REQUIRE_THROWS_AS(q.order(), InfiniteQuotientError);
        REQUIRE_THROWS_AS(q.enumerate(), InfiniteQuotientError);
    }
}

TEST_CASE("coset systems") {
    SECTION("four cosets of the doubled lattice") {
        CosetSystem cs = coset_reps(2, IntMatrix{{2, 0}, {0, 2}});
        REQUIRE(cs.size() == 4);
        REQUIRE(cs.reps() == std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
        REQUIRE(cs.index_of(IntVec{3, 5}) == 3);
        for (std::size_t j = 0; j < cs.size(); ++j) REQUIRE(cs.index_of(cs.rep(j)) == j);
    }
    SECTION("trivial quotient") {
        CosetSystem cs = coset_reps(2, IntMatrix::identity(2));
        REQUIRE(cs.size() == 1);
        REQUIRE(cs.rep(0) == IntVec{0, 0});
    }
}

TEST_CASE("contact vectors and the weighted sum map") {
    SECTION("per-component gcd") {
        ContactVector cv({ContactComponent{2, {}}, ContactComponent{1, {2, -4, 6}},
                          ContactComponent{1, {1}}});
        REQUIRE(gcd_contact(cv, 0) == 0);
        REQUIRE(gcd_contact(cv, 1) == 2);
        REQUIRE(gcd_contact(cv, 2) == 1);
    }
    SECTION("zero entries are rejected") {
        REQUIRE_THROWS_WITH(single_component(2, IntVec{2, 0}),
                            "contact entries must be nonzero");
    }
    SECTION("weighted sum on one component") {
        LatticeHom phi = phi_map(single_component(2, IntVec{2, 3}));
        REQUIRE(phi.domain_rank() == 4);
        REQUIRE(phi.codomain_rank() == 2);
        REQUIRE(phi.apply(IntVec{1, 0, 0, 1}) == IntVec{2, 3});
    }
    SECTION("empty tuple gives the zero-rank domain") {
        LatticeHom phi = phi_map(single_component(2, IntVec{}));
        REQUIRE(phi.domain_rank() == 0);
    }
    SECTION("two components with opposite signs") {
        ContactVector cv({ContactComponent{2, {1}}, ContactComponent{2, {-1}}});
        LatticeHom phi = phi_map(cv);
        REQUIRE(phi.apply(IntVec{1, 2, 3, 4}) == IntVec{1, 2, -3, -4});
    }
}

TEST_CASE("preimages and images") {
    SECTION("preimage of the trivial subgroup under an injective map") {
        LatticeHom phi = phi_map(single_component(2, IntVec{2}));
        IntMatrix pre = preimage_subgroup(phi, IntMatrix(2, 0));
        REQUIRE(pre.cols == 0);
    }
    SECTION("preimage picks up the kernel") {
        ContactVector cv = single_component(1, IntVec{2, -2});
        IntMatrix pre = preimage_subgroup(phi_map(cv), IntMatrix(1, 0));
        IntMatrix diag{{1}, {1}};
        REQUIRE(span_contains(pre, diag));
        REQUIRE(span_contains(diag, pre));
    }
    SECTION("preimage of everything is everything") {
        LatticeHom phi = phi_map(single_component(2, IntVec{2}));
        IntMatrix pre = preimage_subgroup(phi, IntMatrix::identity(2));
        REQUIRE(span_contains(pre, IntMatrix::identity(2)));
    }
    SECTION("image of the weighted sum in the free quotient") {
        QuotientModule rh(2, IntMatrix(2, 0));
        IntMatrix im = image_in_quotient(phi_map(single_component(2, IntVec{2, 4})), rh);
        IntMatrix twice{{2, 0}, {0, 2}};
        REQUIRE(span_contains(im, twice));
        REQUIRE(span_contains(twice, im));

        IntMatrix full = image_in_quotient(phi_map(single_component(2, IntVec{3, 5})), rh);
        REQUIRE(span_contains(full, IntMatrix::identity(2)));

        IntMatrix none = image_in_quotient(phi_map(single_component(2, IntVec{})), rh);
        REQUIRE(none.cols == 0);
    }
    SECTION("image matches the gcd lattice for random tuples") {
        std::mt19937_64 rng(9090);
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t n = 1 + oracles::rand_below(rng, 3);
            std::size_t l = 1 + oracles::rand_below(rng, 4);
            IntVec s(l);
            for (auto& x : s) x = oracles::rand_nonzero(rng, 9);
            Int g = 0;
            for (const Int& x : s) g = int_gcd(g, x);

            QuotientModule rh(n, IntMatrix(n, 0));
            IntMatrix im = image_in_quotient(phi_map(single_component(n, s)), rh);
            IntMatrix gl(n, n);
            for (std::size_t i = 0; i < n; ++i) gl.at(i, i) = g;
            REQUIRE(span_contains(im, gl));
            REQUIRE(span_contains(gl, im));
        }
    }
}

TEST_CASE("deck group shapes") {
    SECTION("doubled square torus lattice") {
        QuotientModule rh(2, IntMatrix(2, 0));
        IntMatrix rp = image_in_quotient(phi_map(single_component(2, IntVec{2, 2})), rh);
        DeckGroupDescriptor deck = deck_group(rh, rp);
        REQUIRE(deck.display() == "Z₂² ⊕ (2Z)²");
        REQUIRE(deck.quotient_part.torsion() == IntVec{2, 2});
        REQUIRE(deck.quotient_part.free_rank() == 0);
        REQUIRE(deck.subgroup_part.free_rank == 2);
        REQUIRE(deck.subgroup_part.torsion.empty());
        REQUIRE(deck.subgroup_part.embedding_known);
        REQUIRE(deck.subgroup_part.embedding_divisors == IntVec{2, 2});
    }
    SECTION("no contact points at all") {
        QuotientModule rh(2, IntMatrix(2, 0));
        DeckGroupDescriptor deck = deck_group(rh, IntMatrix(2, 0));
        REQUIRE(deck.quotient_part.free_rank() == 2);
        REQUIRE(deck.subgroup_part.free_rank == 0);
        REQUIRE(deck.display() == "Z²");
    }
    SECTION("full subgroup kills everything") {
        QuotientModule rh(2, IntMatrix::identity(2));
        IntMatrix rp = image_in_quotient(phi_map(single_component(2, IntVec{2, 2})), rh);
        DeckGroupDescriptor deck = deck_group(rh, rp);
        REQUIRE(deck.quotient_part.is_trivial());
        REQUIRE(deck.subgroup_part.free_rank == 0);
        REQUIRE(deck.subgroup_part.torsion.empty());
        REQUIRE(deck.display() == "0");
    }
    SECTION("random specs against the gcd-structure oracle") {
        std::mt19937_64 rng(552200);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t ncomp = 1 + oracles::rand_below(rng, 3);
            std::vector<ContactComponent> comps;
            std::vector<std::size_t> ranks;
            std::vector<std::vector<Int>> tuples;
            std::size_t budget = 4;
            for (std::size_t r = 0; r < ncomp; ++r) {
                std::size_t rank = oracles::rand_below(rng, static_cast<long>(budget) + 1);
                budget -= rank;
                std::size_t l = oracles::rand_below(rng, 4);
                IntVec s(l);
                for (auto& x : s) x = oracles::rand_nonzero(rng, 9);
                comps.push_back(ContactComponent{rank, s});
                ranks.push_back(rank);
                tuples.push_back(std::vector<Int>(s.begin(), s.end()));
            }
            ContactVector cv{comps};
            std::size_t n = cv.total_rank();

            QuotientModule rh(n, IntMatrix(n, 0));
            IntMatrix rp = image_in_quotient(phi_map(cv), rh);
            DeckGroupDescriptor deck = deck_group(rh, rp);
            oracles::DeckShape expect = oracles::deck_shape_from_gcds(ranks, tuples);

            REQUIRE(std::vector<Int>(deck.quotient_part.torsion().begin(),
                                     deck.quotient_part.torsion().end()) ==
                    expect.quotient.torsion);
            REQUIRE(deck.quotient_part.free_rank() == expect.quotient.free_rank);
            REQUIRE(deck.subgroup_part.torsion.empty());
            REQUIRE(deck.subgroup_part.free_rank == expect.subgroup_rank);
            REQUIRE(deck.subgroup_part.embedding_known);
            REQUIRE(std::vector<Int>(deck.subgroup_part.embedding_divisors.begin(),
                                     deck.subgroup_part.embedding_divisors.end()) ==
                    expect.embedding);
        }
    }
}

TEST_CASE("index shifts of the residual action") {
    CosetSystem cs = coset_reps(2, IntMatrix{{2, 0}, {0, 2}});
    LatticeHom phi = phi_map(single_component(2, IntVec{2}));
    IntMatrix h(2, 0);

    SECTION("worked shifts") {
        ThetaStep st = theta_data(cs, phi, h, IntVec{1, 0}, cs.index_of(IntVec{0, 0}));
        REQUIRE(cs.rep(st.new_index) == IntVec{1, 0});
        REQUIRE(st.twist_shift == IntVec{0, 0});

        ThetaStep wrap = theta_data(cs, phi, h, IntVec{1, 0}, cs.index_of(IntVec{1, 1}));
        REQUIRE(cs.rep(wrap.new_index) == IntVec{0, 1});
        REQUIRE(wrap.twist_shift == IntVec{1, 0});
    }
    SECTION("zero shift is the identity") {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            ThetaStep st = theta_data(cs, phi, h, IntVec{0, 0}, j);
            REQUIRE(st.new_index == j);
            REQUIRE(st.twist_shift == IntVec{0, 0});
        }
    }
    SECTION("index part is a group action") {
        std::mt19937_64 rng(606060);
        for (int trial = 0; trial < 500; ++trial) {
            IntVec eta{oracles::rand_int(rng, -9, 9), oracles::rand_int(rng, -9, 9)};
            IntVec etap{oracles::rand_int(rng, -9, 9), oracles::rand_int(rng, -9, 9)};
            std::size_t j = oracles::rand_below(rng, static_cast<long>(cs.size()));
            std::size_t step = theta_data(cs, phi, h, eta, j).new_index;
            std::size_t two = theta_data(cs, phi, h, etap, step).new_index;
            std::size_t direct = theta_data(cs, phi, h, vec_add(eta, etap), j).new_index;
            REQUIRE(two == direct);
        }
    }
}
