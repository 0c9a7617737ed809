#include "halo/polygons.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace halo;

namespace {

using K = PolygonElement::Kind;

PolygonElement chord(int n, int a, int b) { return {PolygonModel::A, n, K::Chord, a, b - a}; }

long long catalan(int n) {
    std::vector<long long> c{1};
    for (int k = 0; k < n; ++k) {
        long long s = 0;
        for (int i = 0; i <= k; ++i) s += c[i] * c[k - i];
        c.push_back(s);
    }
    return c[n];
}

}  // namespace

TEST_CASE("chord crossing on the hexagon") {
    CHECK(crosses(chord(6, 1, 3), chord(6, 2, 4)));
    CHECK_FALSE(crosses(chord(6, 1, 3), chord(6, 3, 5)));   // shared endpoint
    CHECK_FALSE(crosses(chord(6, 0, 2), chord(6, 2, 4)));
    CHECK_FALSE(crosses(chord(6, 0, 2), chord(6, 3, 5)));   // disjoint arcs
    CHECK(crosses(chord(6, 0, 3), chord(6, 2, 4)));
}

TEST_CASE("central vertex rules of C(n)") {
    for (int n : {2, 3, 4}) {
        const PolygonElement circle{PolygonModel::C, n, K::Circle, 0, 0};
        for (int a = 0; a < n; ++a) {
            const PolygonElement da{PolygonModel::C, n, K::Diameter, a, 0};
            CHECK(crosses(circle, da));
            CHECK(crosses(da, circle));
            for (int b = a + 1; b < n; ++b)
                CHECK_FALSE(crosses(da, PolygonElement{PolygonModel::C, n, K::Diameter, b, 0}));
        }
        for (int span = 2; span <= n; ++span)
            for (int a = 0; a < n; ++a)
                CHECK_FALSE(crosses(circle, PolygonElement{PolygonModel::C, n, K::Pair, a, span}));
    }
    // A pair of diameters is compatible with the single diameter on the same axis only.
    const PolygonElement pair02{PolygonModel::C, 2, K::Pair, 0, 2};
    CHECK_FALSE(crosses(pair02, PolygonElement{PolygonModel::C, 2, K::Diameter, 0, 0}));
    CHECK(crosses(pair02, PolygonElement{PolygonModel::C, 2, K::Diameter, 1, 0}));
    CHECK(crosses(pair02, PolygonElement{PolygonModel::C, 2, K::Pair, 1, 2}));
}

TEST_CASE("crossing is symmetric and irreflexive") {
    const std::vector<std::pair<PolygonModel, int>> models = {
        {PolygonModel::A, 6}, {PolygonModel::B, 3}, {PolygonModel::B, 4}, {PolygonModel::C, 3}};
    for (const auto& [model, n] : models) {
        const auto elements = polygon_elements(model, n);
        for (std::size_t i = 0; i < elements.size(); ++i) {
            CHECK_FALSE(crosses(elements[i], elements[i]));
            for (std::size_t j = i + 1; j < elements.size(); ++j)
                CHECK(crosses(elements[i], elements[j]) == crosses(elements[j], elements[i]));
        }
    }
    CHECK_THROWS_AS(crosses(chord(6, 0, 2), PolygonElement{PolygonModel::B, 3, K::Diameter, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(crosses(PolygonElement{PolygonModel::C, 3, K::Circle, 0, 0},
                            PolygonElement{PolygonModel::C, 4, K::Circle, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("element counts") {
    CHECK(polygon_elements(PolygonModel::A, 5).size() == 5);
    CHECK(polygon_elements(PolygonModel::A, 6).size() == 9);
    for (int n = 2; n <= 5; ++n)
        CHECK(polygon_elements(PolygonModel::B, n).size() ==
              static_cast<std::size_t>(n * n - n));
    for (int n = 1; n <= 5; ++n)
        CHECK(polygon_elements(PolygonModel::C, n).size() ==
              static_cast<std::size_t>(n * n + 1));
    CHECK(polygon_elements(PolygonModel::B, 1).empty());
}

TEST_CASE("polygon poset f-vectors") {
    CHECK(polygon_poset(PolygonModel::A, 5).f_vector() == std::vector<long long>{5, 5});
    CHECK(polygon_poset(PolygonModel::C, 2).f_vector() == std::vector<long long>{5, 5});
    // B(3) is the hexagonal cyclohedron W_3.
    CHECK(polygon_poset(PolygonModel::B, 3).f_vector() == std::vector<long long>{6, 6});
    CHECK(polygon_poset(PolygonModel::B, 2).f_vector() == std::vector<long long>{2});
    CHECK(polygon_poset(PolygonModel::C, 1).f_vector() == std::vector<long long>{2});

    for (int n : {3, 4, 5, 6}) {
        const auto p = polygon_poset(PolygonModel::A, n);
        CHECK(euler_relation_holds(p.f_vector(), p.ambient_dim));
    }
}

TEST_CASE("triangulation counts are Catalan") {
    for (int n = 3; n <= 8; ++n) {
        const auto p = polygon_poset(PolygonModel::A, n);
        const auto maxima = p.maximum_faces();
        CHECK(maxima.size() == static_cast<std::size_t>(catalan(n - 2)));
        for (const auto& f : maxima) CHECK(f.size() == static_cast<std::size_t>(n - 3));
    }
}

TEST_CASE("polygon-tubing isomorphisms") {
    for (int n = 3; n <= 7; ++n) {
        const auto rep = polygon_tubing_iso(PolygonModel::A, n);
        INFO("A(" << n << "): " << rep.detail);
        CHECK(rep.ok);
    }
    for (int n = 1; n <= 4; ++n) {
        const auto rep = polygon_tubing_iso(PolygonModel::B, n);
        INFO("B(" << n << "): " << rep.detail);
        CHECK(rep.ok);
    }
    for (int n = 1; n <= 4; ++n) {
        const auto rep = polygon_tubing_iso(PolygonModel::C, n);
        INFO("C(" << n << "): " << rep.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("facet-level elements map to design tubes bijectively") {
    for (int n = 2; n <= 4; ++n) {
        const auto elements = polygon_elements(PolygonModel::C, n);
        const Graph g = Graph::cycle(n);
        std::vector<DesignTube> images;
        for (const auto& e : elements) {
            const auto d = polygon_element_tube(e);
            validate_design_tube(g, d);
            images.push_back(d);
        }
        std::sort(images.begin(), images.end());
        CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
        CHECK(images.size() == enumerate_design_tubes(g).size());
    }
}

TEST_CASE("polygon json") {
    const auto p = polygon_poset(PolygonModel::C, 2);
    const auto j = poset_json(p);
    CHECK(j["object"] == "C(2)");
    CHECK(j["f_vector"] == std::vector<long long>{5, 5});
    std::vector<std::string> kinds;
    for (const auto& face : j["faces"])
        for (const auto& e : face["elements"]) kinds.push_back(e["kind"].get<std::string>());
    CHECK(std::count(kinds.begin(), kinds.end(), "circle") > 0);
    CHECK(std::count(kinds.begin(), kinds.end(), "diameter") > 0);
    CHECK(std::count(kinds.begin(), kinds.end(), "pair") > 0);
}
