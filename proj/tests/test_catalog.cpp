#include <doctest.h>

#include "nichols/catalog.hpp"
#include "nichols/diagram_io.hpp"

using namespace nichols;

TEST_CASE("labels") {
    auto& cat = Catalog::instance();
    auto labels = cat.labels();
    CHECK(labels.size() >= 40);
    CHECK(cat.has("Cartan:A"));
    CHECK(cat.has("ufo:7"));
    CHECK(cat.has("supermodular3:g(8,6)"));
}

TEST_CASE("build_diagram examples") {
    auto& cat = Catalog::instance();
    // Cartan A_3 at N=5: chain q -- q^{-1} -- q -- q^{-1} -- q
    auto a3 = cat.build_diagram("Cartan:A", CatalogParams::parse("theta=3,N=5"));
    CHECK(a3.matrix.theta() == 3);
    auto d = dynkin_diagram(a3.matrix);
    CHECK(scalar_order(a3.matrix.ctx(), d.vertex[0]) == 5);
    CHECK(d.edge.size() == 2);
    CHECK(d.vertex[0] == d.vertex[1]);
    CHECK(d.edge.at({0, 1}) == scalar_inv(a3.matrix.ctx(), d.vertex[0]));

    // super:A theta=2 J={1}: (-1) --q^{-1}-- (q)
    auto a11 = cat.build_diagram("super:A", CatalogParams::parse("theta=2,J=1,N=4"));
    auto d2 = dynkin_diagram(a11.matrix);
    CHECK(scalar_order(a11.matrix.ctx(), d2.vertex[0]) == 2);
    CHECK(scalar_order(a11.matrix.ctx(), d2.vertex[1]) == 4);

    // ufo:7 point a1: (-z^3) --z-- (-1) with z of order 12
    auto u7 = cat.build_diagram("ufo:7", CatalogParams::parse("point=a1"));
    auto d3 = dynkin_diagram(u7.matrix);
    CHECK(u7.matrix.ctx().modulus == 12);
    CHECK(d3.vertex[0] == scalar_torsion(u7.matrix.ctx(), 9));
    CHECK(d3.vertex[1] == scalar_torsion(u7.matrix.ctx(), 6));
    CHECK(d3.edge.at({0, 1}) == scalar_torsion(u7.matrix.ctx(), 1));

    // standard:G2 point a1: (z^2) --z-- (z^{-1}) with z of order 8
    auto g2 = cat.build_diagram("standard:G2", CatalogParams::parse("point=a1"));
    auto d4 = dynkin_diagram(g2.matrix);
    CHECK(d4.vertex[0] == scalar_torsion(g2.matrix.ctx(), 2));
    CHECK(d4.vertex[1] == scalar_torsion(g2.matrix.ctx(), 7));
    CHECK(d4.edge.at({0, 1}) == scalar_torsion(g2.matrix.ctx(), 1));
}

TEST_CASE("full fixture verification sweep") {
    auto& cat = Catalog::instance();
    for (const auto& inst : cat.default_instances()) {
        CAPTURE(inst.label);
        CAPTURE(inst.params);
        VerifyReport rep = cat.verify(inst.label, CatalogParams::parse(inst.params));
        for (const auto& m : rep.mismatches) {
            CAPTURE(m);
            CHECK(false);
        }
        CHECK(rep.match);
        CHECK(!rep.checks.empty());
    }
}

TEST_CASE("recognition round-trips") {
    auto& cat = Catalog::instance();
    auto contains = [](const std::vector<RecognitionHit>& hits, const std::string& label,
                       const std::string& point = "") {
        for (const auto& h : hits)
            if (h.label == label && (point.empty() || h.point == point)) return true;
        return false;
    };

    // chain q -- q^{-1} -- q with q in G'_5: Cartan A, theta=3... here theta=2 chain
    auto a2 = cat.build_diagram("Cartan:A", CatalogParams::parse("theta=2,N=3"));
    auto hits = cat.recognize(a2.matrix);
    CHECK(contains(hits, "Cartan:A"));

    auto a3 = cat.build_diagram("Cartan:A", CatalogParams::parse("theta=3,N=5"));
    CHECK(contains(cat.recognize(a3.matrix), "Cartan:A"));

    auto u7 = cat.build_diagram("ufo:7", CatalogParams::parse("point=a1"));
    CHECK(contains(cat.recognize(u7.matrix), "ufo:7", "a1"));

    auto g2 = cat.build_diagram("standard:G2", CatalogParams::parse(""));
    CHECK(contains(cat.recognize(g2.matrix), "standard:G2", "a1"));

    auto a11 = cat.build_diagram("super:A", CatalogParams::parse("theta=2,J=1,N=4"));
    CHECK(contains(cat.recognize(a11.matrix), "super:A"));

    // a generic-q instance recognizes through the infinite-order branch
    auto gen = cat.build_diagram("Cartan:A", CatalogParams::parse("theta=2,N=inf"));
    CHECK(contains(cat.recognize(gen.matrix), "Cartan:A"));
}

TEST_CASE("recognition coverage over small catalog instances") {
    auto& cat = Catalog::instance();
    // every instance with theta <= 5 and torsion order <= 24 recognizes itself
    std::vector<std::pair<std::string, std::string>> sample = {
        {"Cartan:A", "theta=2,N=3"},      {"Cartan:B", "theta=2,N=3"},
        {"Cartan:G2", "N=5"},             {"super:A", "theta=3,J=2,N=3"},
        {"super:B", "theta=2,J=1,N=3"},   {"super:D", "theta=3,J=1,N=3,sector=c"},
        {"super:D(2,1;a)", "M=12,kq=4,kr=3"}, {"standard:B", "theta=2,J=1"},
        {"standard:G2", ""},              {"modular:br(2,a)", "N=5"},
        {"modular:br(3)", ""},            {"supermodular3:brj(2;3)", ""},
        {"supermodular3:g(2,3)", ""},     {"supermodular5:brj(2;5)", ""},
        {"ufo:7", ""},                    {"ufo:8", ""},
        {"ufo:12", ""},                   {"ufo:9", ""},
    };
    for (auto& [label, params] : sample) {
        CAPTURE(label);
        CAPTURE(params);
        auto built = cat.build_diagram(label, CatalogParams::parse(params));
        auto hits = cat.recognize(built.matrix);
        bool found = false;
        for (const auto& h : hits)
            if (h.label == label) found = true;
        CHECK(found);
    }
}
