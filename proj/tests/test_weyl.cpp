#include <doctest.h>

#include "nichols/weyl.hpp"

using namespace nichols;

namespace {

BraidingMatrix make2(const ScalarContext& ctx, Scalar q11, Scalar q12, Scalar q21, Scalar q22) {
    return BraidingMatrix(ctx, 2, {q11, q12, q21, q22});
}

BraidingMatrix cartan_a2(std::int64_t n) {
    auto ctx = ScalarContext::make(n, std::nullopt);
    Scalar q = scalar_zeta(ctx, 1);
    return make2(ctx, q, scalar_inv(ctx, q), scalar_one(), q);
}

// A(1|1) point {1}: (-1) --q^{-1}-- (q), q of order n (or infinite when n = 0)
BraidingMatrix a11_point1(std::int64_t n) {
    auto ctx = n == 0 ? ScalarContext::make(2, std::nullopt, true) : ScalarContext::make(2, n);
    Scalar q = scalar_param(ctx);
    Scalar minus1 = scalar_torsion(ctx, ctx.modulus / 2);
    return make2(ctx, minus1, scalar_inv(ctx, q), scalar_one(), q);
}

// generic-q Cartan A_2 via an infinite-order parameter
BraidingMatrix cartan_a2_generic() {
    auto ctx = ScalarContext::make(1, std::nullopt, true);
    Scalar q = scalar_param(ctx);
    return make2(ctx, q, scalar_inv(ctx, q), scalar_one(), q);
}

Root rv(std::initializer_list<int> v) { return Root(v); }

}  // namespace

TEST_CASE("cartan_matrix") {
    auto a2 = cartan_a2(5);
    auto c = cartan_matrix(a2.twist_class());
    CHECK(c.at(0, 0) == 2);
    CHECK(c.at(0, 1) == -1);
    CHECK(c.at(1, 0) == -1);

    auto a11 = a11_point1(5);
    auto c2 = cartan_matrix(a11.twist_class());
    CHECK(c2.at(0, 1) == -1);  // n=1 kills (2)_{-1}
    CHECK(c2.at(1, 0) == -1);

    auto ctx = ScalarContext::make(1, std::nullopt, true);
    BraidingMatrix theta1(ctx, 1, {scalar_param(ctx)});
    auto c3 = cartan_matrix(theta1);
    CHECK(c3.at(0, 0) == 2);

    // not admissible: generic q11 with unrelated edge never satisfies either clause
    auto bad = make2(ctx, scalar_param(ctx), scalar_make(ctx, 0, 3), scalar_one(),
                     scalar_param(ctx));
    CHECK_THROWS_AS(cartan_matrix(bad.twist_class()), not_admissible_error);
}

TEST_CASE("reflect on A(1|1)") {
    auto a11 = a11_point1(5).twist_class();
    auto [t, s] = reflect(a11, 0);
    // expected: (-1) --q-- (-1)
    const auto& ctx = t.ctx();
    Scalar minus1 = scalar_torsion(ctx, ctx.modulus / 2);
    CHECK(t.at(0, 0) == minus1);
    CHECK(t.at(1, 1) == minus1);
    CHECK(t.qtilde(0, 1) == scalar_param(ctx));
    // reflect twice comes back
    auto [back, s2] = reflect(t, 0);
    CHECK(twist_equivalent(back, a11));
    CHECK(s.compose(s2) == LatticeMap::identity(2));

    // Cartan A_2: reflections stay in the same twist class
    auto a2 = cartan_a2(5).twist_class();
    CHECK(twist_equivalent(reflect(a2, 0).first, a2));
    CHECK(twist_equivalent(reflect(a2, 1).first, a2));
}

TEST_CASE("A(1|1) bundle: three points") {
    for (std::int64_t n : {3, 4, 5}) {
        auto b = enumerate_groupoid(a11_point1(n));
        CHECK(b.points.size() == 3);
        for (const auto& p : b.points) {
            CHECK(p.positive.size() == 3);
        }
        // dims are 4N at every point
        for (int x = 0; x < 3; ++x) {
            auto d = dimension_report(b, x);
            REQUIRE(d.dim.has_value());
            CHECK(*d.dim == 4 * n);
        }
    }
}

TEST_CASE("A(1|1) heights at point {1}") {
    auto b = enumerate_groupoid(a11_point1(5));
    auto h = root_heights(b, 0);
    REQUIRE(h.size() == 3);
    // sorted by total degree then lex: a1=(1,0) < a2=(0,1)? lex on vectors: (0,1) < (1,0)
    CHECK(h[0].first == rv({0, 1}));
    CHECK(h[0].second == 5);
    CHECK(h[1].first == rv({1, 0}));
    CHECK(h[1].second == 2);
    CHECK(h[2].first == rv({1, 1}));
    CHECK(h[2].second == 2);
}

TEST_CASE("positive roots of Cartan A_2 and G_2") {
    auto b = enumerate_groupoid(cartan_a2(3));
    CHECK(b.points.size() == 1);
    auto roots = positive_roots(b, 0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == rv({0, 1}));
    CHECK(roots[1] == rv({1, 0}));
    CHECK(roots[2] == rv({1, 1}));

    // Cartan G_2 with q of order 5: (q) --q^{-3}-- (q^3)
    auto ctx = ScalarContext::make(5, std::nullopt);
    Scalar q = scalar_zeta(ctx, 1);
    auto g2 = make2(ctx, q, scalar_pow(ctx, q, -3), scalar_one(), scalar_pow(ctx, q, 3));
    auto bg = enumerate_groupoid(g2);
    CHECK(bg.points.size() == 1);
    auto rg = positive_roots(bg, 0);
    REQUIRE(rg.size() == 6);
    CHECK(std::find(rg.begin(), rg.end(), rv({3, 2})) != rg.end());
    CHECK(std::find(rg.begin(), rg.end(), rv({3, 1})) != rg.end());

    // theta = 1
    BraidingMatrix single(ctx, 1, {q});
    auto bs = enumerate_groupoid(single);
    CHECK(positive_roots(bs, 0) == std::vector<Root>{rv({1})});
}

TEST_CASE("dimension report") {
    auto b3 = enumerate_groupoid(cartan_a2(3));
    auto d = dimension_report(b3, 0);
    REQUIRE(d.dim.has_value());
    CHECK(*d.dim == 27);
    CHECK(d.gk == 0);

    auto bg = enumerate_groupoid(cartan_a2_generic());
    auto dg = dimension_report(bg, 0);
    CHECK(!dg.dim.has_value());
    CHECK(dg.gk == 3);
}

TEST_CASE("cartan roots of A(1|1)") {
    auto b = enumerate_groupoid(a11_point1(5));
    // locate the three points by their diagrams
    const auto& ctx = b.ctx;
    Scalar q = scalar_param(ctx);
    Scalar minus1 = scalar_torsion(ctx, ctx.modulus / 2);
    int p1 = b.point_index(make2(ctx, minus1, scalar_inv(ctx, q), scalar_one(), q).twist_class());
    int p12 = b.point_index(make2(ctx, minus1, q, scalar_one(), minus1).twist_class());
    int p2 = b.point_index(make2(ctx, q, scalar_inv(ctx, q), scalar_one(), minus1).twist_class());
    REQUIRE(p1 >= 0);
    REQUIRE(p12 >= 0);
    REQUIRE(p2 >= 0);
    CHECK(cartan_roots(b, p1) == std::vector<Root>{rv({0, 1})});
    CHECK(cartan_roots(b, p12) == std::vector<Root>{rv({1, 1})});
    CHECK(cartan_roots(b, p2) == std::vector<Root>{rv({1, 0})});
}

TEST_CASE("integral degree") {
    auto b = enumerate_groupoid(cartan_a2(3));
    // (N-1) * sum_i i(theta-i+1) alpha_i = 2*(2,2) = (4,4); cross-check by direct summation
    Root direct(2, 0);
    auto hs = root_heights(b, 0);
    for (auto& [r, h] : hs) {
        REQUIRE(h.has_value());
        for (int k = 0; k < 2; ++k) direct[k] += int(*h - 1) * r[k];
    }
    CHECK(integral_degree(b, 0) == rv({4, 4}));
    CHECK(integral_degree(b, 0) == direct);

    auto bg = enumerate_groupoid(cartan_a2_generic());
    CHECK_THROWS_AS(integral_degree(bg, 0), infinite_height_error);
}

TEST_CASE("integral transport identity") {
    auto b = enumerate_groupoid(a11_point1(4));
    for (std::size_t x = 0; x < b.points.size(); ++x)
        for (int i = 0; i < 2; ++i) CHECK(integral_transport_check(b, static_cast<int>(x), i));
    auto b3 = enumerate_groupoid(cartan_a2(3));
    CHECK(integral_transport_check(b3, 0, 0));
    CHECK(integral_transport_check(b3, 0, 1));
}

TEST_CASE("axioms hold for small bundles; corrupted bundle fails") {
    // Cartan B_2: (q^2) --q^{-2}-- (q), q of order 5
    auto ctx = ScalarContext::make(5, std::nullopt);
    Scalar q = scalar_zeta(ctx, 1);
    auto b2 = make2(ctx, scalar_pow(ctx, q, 2), scalar_pow(ctx, q, -2), scalar_one(), q);
    auto bundle = enumerate_groupoid(b2);
    auto rep = check_axioms(bundle);
    CHECK(rep.ok);
    CHECK(bundle.points[0].positive.size() == 4);  // m_12 = 4

    auto a11 = enumerate_groupoid(a11_point1(3));
    CHECK(check_axioms(a11).ok);
    CHECK(a11.points[0].positive.size() == 3);  // m_12 = 3

    // negative control: delete one root
    auto corrupted = a11;
    corrupted.points[0].roots.pop_back();
    auto bad = check_axioms(corrupted);
    CHECK(!bad.ok);
    CHECK(!bad.violations.empty());
}

TEST_CASE("cap exceeded for affine type") {
    // (z) --z^{-2}-- (z) with z of order 5: affine A_1^(1)
    auto ctx = ScalarContext::make(5, std::nullopt);
    Scalar z = scalar_zeta(ctx, 1);
    auto aff = make2(ctx, z, scalar_pow(ctx, z, -2), scalar_one(), z);
    CHECK_THROWS_AS(enumerate_groupoid(aff, EnumerationCaps{100, 500}), cap_exceeded_error);
}

TEST_CASE("isotropy orders") {
    CHECK(isotropy_order(enumerate_groupoid(cartan_a2(3)), 0) == 6);  // W(A_2)
    // Cartan B_2
    auto ctx = ScalarContext::make(5, std::nullopt);
    Scalar q = scalar_zeta(ctx, 1);
    auto b2 = make2(ctx, scalar_pow(ctx, q, 2), scalar_pow(ctx, q, -2), scalar_one(), q);
    CHECK(isotropy_order(enumerate_groupoid(b2), 0) == 8);
    // A(1|1): isotropy S_1 x S_2 at {1}
    auto b = enumerate_groupoid(a11_point1(5));
    CHECK(isotropy_order(b, 0) == 2);
}

TEST_CASE("dimension report is invariant under vertex permutation") {
    // A(1|1)-style diagram entered with both orientations
    auto ctx = ScalarContext::make(2, 5);
    Scalar q = scalar_param(ctx), m1 = scalar_torsion(ctx, ctx.modulus / 2);
    auto a = make2(ctx, m1, scalar_inv(ctx, q), scalar_one(), q);
    auto b = make2(ctx, q, scalar_inv(ctx, q), scalar_one(), m1);
    auto ba = enumerate_groupoid(a.twist_class());
    auto bb = enumerate_groupoid(b.twist_class());
    auto da = dimension_report(ba, 0), db = dimension_report(bb, 0);
    REQUIRE(da.dim.has_value());
    CHECK(*da.dim == *db.dim);
    CHECK(da.gk == db.gk);
}

TEST_CASE("Cartan roots transport consistently along reflections") {
    auto ctx = ScalarContext::make(2, 4);
    Scalar q = scalar_param(ctx), m1 = scalar_torsion(ctx, ctx.modulus / 2);
    auto m = make2(ctx, m1, scalar_inv(ctx, q), scalar_one(), q);
    auto b = enumerate_groupoid(m.twist_class());
    for (std::size_t x = 0; x < b.points.size(); ++x) {
        auto croots = cartan_roots(b, static_cast<int>(x));
        auto pos = positive_roots(b, static_cast<int>(x));
        for (const auto& r : croots)
            CHECK(std::find(pos.begin(), pos.end(), r) != pos.end());
        for (int i = 0; i < b.theta; ++i) {
            int y = b.points[x].rho[i];
            std::set<Root> image;
            for (const auto& r : croots) {
                Root s = b.points[x].s[i].apply(r);
                if (!is_positive_root_vector(s)) s = negate_root(s);
                image.insert(s);
            }
            auto target = cartan_roots(b, y);
            CHECK(image == std::set<Root>(target.begin(), target.end()));
        }
    }
}
