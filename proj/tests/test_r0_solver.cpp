#include "ggs/r0_solver.hpp"

#include "ggs/bd_triple.hpp"

#include <doctest.h>

using namespace ggs;

TEST_CASE("p0 closed form") {
    CartanTensor p2 = p0(2);
    CHECK(p2.at(1, 1) == Rat(1, 2));
    CHECK(p2.at(1, 2) == Rat(-1, 2));
    CHECK(p2.at(2, 1) == Rat(-1, 2));
    CHECK(p2.at(2, 2) == Rat(1, 2));
    CHECK(p0(3).at(2, 2) == Rat(2, 3));
    for (int n = 2; n <= 7; ++n) {
        CartanTensor p = p0(n);
        for (int i = 1; i <= n; ++i) {
            Rat row_sum = 0;
            for (int k = 1; k <= n; ++k) row_sum += p.at(i, k);
            CHECK(row_sum == 0);
        }
    }
}

TEST_CASE("f-basis matrix hand examples") {
    CHECK(r0_tilde_f_basis(BDTriple(4)) == RatMatrix(3, 3)); // empty triple: zero

    BDTriple t(3, {{1, 2}});
    RatMatrix b = r0_tilde_f_basis(t);
    CHECK(b.at(1, 1) == 0);
    CHECK(b.at(1, 2) == Rat(1, 2));
    CHECK(b.at(2, 1) == Rat(-1, 2));
    CHECK(b.at(2, 2) == 0);
}

TEST_CASE("f-basis matrix is skew for every triple") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : enumerate_all(n)) CHECK(r0_tilde_f_basis(t).is_skew());
}

TEST_CASE("one_minus_tau examples and invertibility") {
    CHECK(one_minus_tau_matrix(BDTriple(4)) == RatMatrix::identity(3));

    RatMatrix m = one_minus_tau_matrix(BDTriple(3, {{1, 2}}));
    CHECK(m.at(1, 1) == 1);
    CHECK(m.at(2, 1) == -1);
    CHECK(m.at(1, 2) == 0);
    CHECK(m.at(2, 2) == 1);

    // invertibility doubles as a nilpotency cross-check
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : enumerate_all(n))
            CHECK_NOTHROW(one_minus_tau_matrix(t).inverse());
}

TEST_CASE("change_to_g_basis hand example") {
    BDTriple t(3, {{1, 2}});
    RatMatrix bp = change_to_g_basis(r0_tilde_f_basis(t), t);
    CHECK(bp.at(1, 2) == Rat(1, 2));
    CHECK(bp.at(2, 1) == Rat(-1, 2));
    CHECK(bp.at(1, 1) == 0);
    CHECK(bp.at(2, 2) == 0);

    // identity basis change for the empty triple
    RatMatrix b = r0_tilde_f_basis(BDTriple(5, {{1, 3}}));
    CHECK(change_to_g_basis(b, BDTriple(5)) == b);
}

TEST_CASE("skewness preserved through the pipeline") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : enumerate_all(n)) {
            RatMatrix bp = change_to_g_basis(r0_tilde_f_basis(t), t);
            CHECK(bp.is_skew());
            CHECK(expand_to_weight_basis(bp, n).entries.is_skew());
        }
}

TEST_CASE("pipeline output satisfies the defining equations") {
    CHECK(r0_tilde(BDTriple(4)) == CartanTensor(4)); // empty triple: zero tensor
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : enumerate_all(n)) CHECK(validate_r0(t, r0_tilde(t)));
}

TEST_CASE("validate_r0 rejects non-solutions") {
    BDTriple empty(3);
    CartanTensor bad(3);
    bad.at(1, 2) = 1; // not skew
    CHECK_FALSE(validate_r0(empty, bad));
    CHECK(validate_r0(empty, CartanTensor(3)));

    // skew but violating the inhomogeneous constraint
    BDTriple t(3, {{1, 2}});
    CartanTensor skew(3);
    skew.at(1, 2) = 1;
    skew.at(2, 1) = -1;
    CHECK_FALSE(validate_r0(t, skew));

    CHECK_THROWS_AS(validate_r0(t, CartanTensor(4)), std::invalid_argument);
}

TEST_CASE("free space dimension and membership") {
    CHECK(free_space_basis(BDTriple(3, {{1, 2}})).empty()); // C(1,2) = 0
    CHECK(free_space_basis(BDTriple(5)).size() == 6);       // C(4,2)
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : enumerate_all(n)) {
            int m = t.gamma1_size();
            int free = n - m - 1;
            auto basis = free_space_basis(t);
            CHECK((int)basis.size() == free * (free - 1) / 2);
            for (const auto& rp : basis) {
                CHECK(in_free_space(t, rp));
                CHECK(rp.entries.is_skew());
            }
        }
}

TEST_CASE("shifting r0 by a free element still validates") {
    BDTriple t(5, {{1, 2}});
    CartanTensor r = r0_tilde(t);
    for (const auto& rp : free_space_basis(t)) {
        CartanTensor shifted(5);
        shifted.entries = r.entries + rp.entries;
        CHECK(validate_r0(t, shifted));
    }
}
