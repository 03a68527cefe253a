#include <doctest.h>

#include <random>

#include "nichols/cyclotomic.hpp"

using namespace nichols;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<BigInt>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("field arithmetic") {
    CycField f3(3);
    // zeta_3 + zeta_3^2 = -1
    auto s = f3.add(f3.root_power(1), f3.root_power(2));
    CHECK(s == f3.from_rational(-1));
    CycField f4(4);
    CHECK(f4.mul(f4.root_power(1), f4.root_power(1)) == f4.from_rational(-1));
    // (1 - zeta_3) / (1 - zeta_3) = 1
    auto d = f3.sub(f3.from_rational(1), f3.root_power(1));
    CHECK(f3.div(d, d) == f3.from_rational(1));
    CHECK_THROWS_AS(f3.inv(f3.zero()), cyclotomic_error);
}

TEST_CASE("agrees with scalar arithmetic on embedded roots of unity") {
    auto ctx = ScalarContext::make(12, std::nullopt);
    CycField f(12);
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) {
            auto prod = f.mul(f.from_scalar(ctx, scalar_torsion(ctx, a)),
                              f.from_scalar(ctx, scalar_torsion(ctx, b)));
            auto expect = f.from_scalar(ctx, scalar_mul(ctx, scalar_torsion(ctx, a), scalar_torsion(ctx, b)));
            CHECK(prod == expect);
        }
}

TEST_CASE("matrix rank basics") {
    CycField f3(3);
    auto one = f3.from_rational(1);
    auto z = f3.root_power(1), z2 = f3.root_power(2);
    CHECK(f3.matrix_rank({{one, f3.zero()}, {f3.zero(), one}}) == 2);
    CHECK(f3.matrix_rank({{one, z}, {z2, one}}) == 1);  // det = 1 - 1 = 0
    // Omega_2 block for q_11 = -1 on word 11: [1 + q_11] = [0]
    CycField f2(2);
    auto zero_block = f2.add(f2.from_rational(1), f2.root_power(1));
    CHECK(f2.matrix_rank({{zero_block}}) == 0);
}

TEST_CASE("rank is invariant under transpose and permutations") {
    CycField f(5);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        int rows = 3 + static_cast<int>(rng() % 3), cols = 3 + static_cast<int>(rng() % 3);
        std::vector<std::vector<CycField::Elem>> m(rows, std::vector<CycField::Elem>(cols));
        for (auto& row : m)
            for (auto& e : row) e = (rng() % 3 == 0) ? f.zero() : f.root_power(static_cast<int>(rng() % 5));
        std::vector<std::vector<CycField::Elem>> t(cols, std::vector<CycField::Elem>(rows));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
        int r = f.matrix_rank(m);
        CHECK(r == f.matrix_rank(t));
        std::shuffle(m.begin(), m.end(), rng);
        CHECK(r == f.matrix_rank(m));
    }
}
