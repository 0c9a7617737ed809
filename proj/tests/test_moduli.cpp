#include "halo/moduli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace halo;

namespace {

SurfaceSignature sig(int g, int h, int n, std::vector<int> m = {}) { return {g, h, n, std::move(m)}; }

}  // namespace

TEST_CASE("stability") {
    CHECK_FALSE(is_stable(sig(1, 0, 0)));          // bare torus
    CHECK(is_stable(sig(1, 0, 1)));                // once-punctured torus
    CHECK(is_stable(sig(0, 1, 1, {1})));           // punctured disk, one boundary mark
    CHECK_FALSE(is_stable(sig(0, 2, 0, {0, 0})));  // unmarked annulus
    CHECK_FALSE(is_stable(sig(0, 0, 2)));
    CHECK(is_stable(sig(0, 0, 3)));
    CHECK_FALSE(is_stable(sig(0, 1, 0, {2})));
    CHECK(is_stable(sig(0, 1, 0, {3})));
    CHECK_FALSE(is_stable(sig(0, 1, 1, {0})));
    CHECK_THROWS_AS(is_stable(sig(0, 2, 0, {1})), std::invalid_argument);  // |m| != h
    CHECK_THROWS_AS(is_stable(sig(-1, 0, 3)), std::invalid_argument);
}

TEST_CASE("dimension formula") {
    CHECK(dimension(sig(0, 3, 0, {0, 0, 0})) == 3);
    CHECK(dimension(sig(0, 1, 2, {0})) == 1);
    CHECK(dimension(sig(0, 0, 3)) == 0);
    CHECK(dimension(sig(0, 2, 0, {3, 0})) == 3);
    CHECK(dimension(sig(1, 0, 1)) == 2);
    CHECK_THROWS_AS(dimension(sig(1, 0, 0)), std::invalid_argument);
}

TEST_CASE("curve weights") {
    CHECK(curve_weight(CurveKind::Arc) == 1);
    CHECK(curve_weight(CurveKind::OneLoop) == 1);
    CHECK(curve_weight(CurveKind::TwoLoop) == 2);
}

TEST_CASE("polytopality classification") {
    auto r = classify_polytopality(sig(0, 2, 0, {3, 0}));
    CHECK(r.verdict == PolytopalityResult::Verdict::Polytope);
    CHECK(r.family_name() == "Y_3");

    r = classify_polytopality(sig(0, 2, 0, {0, 3}));  // circle order is immaterial
    CHECK(r.family_name() == "Y_3");

    r = classify_polytopality(sig(0, 1, 1, {2}));
    CHECK(r.family_name() == "W_2");

    r = classify_polytopality(sig(2, 3, 1, {0, 0, 0}));
    CHECK(r.verdict == PolytopalityResult::Verdict::NotPolytope);
    CHECK(r.reason == PolytopalityResult::Reason::PositiveGenus);

    CHECK(classify_polytopality(sig(1, 0, 0)).verdict == PolytopalityResult::Verdict::Unstable);
    CHECK(classify_polytopality(sig(0, 0, 3)).family_name() == "K_2");
    CHECK(classify_polytopality(sig(0, 1, 2, {0})).family_name() == "K_3");
    CHECK(classify_polytopality(sig(0, 2, 1, {0, 0})).family_name() == "K_4");
    CHECK(classify_polytopality(sig(0, 3, 0, {0, 0, 0})).family_name() == "K_5");
    CHECK(classify_polytopality(sig(0, 1, 0, {6})).family_name() == "K_5");

    CHECK(classify_polytopality(sig(0, 0, 5)).reason ==
          PolytopalityResult::Reason::HPlusNGreaterThan3);
    CHECK(classify_polytopality(sig(0, 1, 2, {1})).reason ==
          PolytopalityResult::Reason::HPlusN3WithBoundaryMarks);
    CHECK(classify_polytopality(sig(0, 2, 0, {1, 1})).reason ==
          PolytopalityResult::Reason::TwoMarkedBoundaries);
    // Reason order: positive genus wins even when several cases apply.
    CHECK(classify_polytopality(sig(1, 2, 3, {1, 1})).reason ==
          PolytopalityResult::Reason::PositiveGenus);
}

TEST_CASE("strata posets") {
    const auto k4 = strata_poset(sig(0, 1, 0, {5}));
    CHECK(k4.f_vector() == std::vector<long long>{5, 5});
    CHECK(k4.ambient_dim == dimension(sig(0, 1, 0, {5})));

    const auto y2 = strata_poset(sig(0, 2, 0, {2, 0}));
    CHECK(y2.f_vector() == std::vector<long long>{5, 5});
    CHECK(y2.ambient_dim == 2);

    const auto w3 = strata_poset(sig(0, 1, 1, {3}));
    CHECK(w3.ambient_dim == 2);  // 3h - 6 + 2n + m = 3 - 6 + 2 + 3
    CHECK(w3.f_vector() == std::vector<long long>{6, 6});

    CHECK_THROWS_WITH(strata_poset(sig(0, 0, 5)),
                      Catch::Matchers::ContainsSubstring("h_plus_n_greater_than_3"));
    CHECK_THROWS_AS(strata_poset(sig(1, 0, 0)), std::invalid_argument);
}

TEST_CASE("exhaustive scan up to dimension 4") {
    // Independent enumeration of the seven polytopal families at dimension <= 4.
    std::set<std::string> expected;
    expected.insert(sig(0, 0, 3).str());
    expected.insert(sig(0, 1, 2, {0}).str());
    expected.insert(sig(0, 2, 1, {0, 0}).str());
    expected.insert(sig(0, 3, 0, {0, 0, 0}).str());
    for (int m = 3; m <= 7; ++m) expected.insert(sig(0, 1, 0, {m}).str());
    for (int m = 1; m <= 5; ++m) expected.insert(sig(0, 1, 1, {m}).str());
    for (int m = 1; m <= 4; ++m) {
        expected.insert(sig(0, 2, 0, {m, 0}).str());
        expected.insert(sig(0, 2, 0, {0, m}).str());
    }

    std::set<std::string> polytopal;
    int stable_count = 0;
    for (const auto& s : enumerate_signatures(4)) {
        if (!is_stable(s)) {
            CHECK(classify_polytopality(s).verdict == PolytopalityResult::Verdict::Unstable);
            continue;
        }
        if (dimension(s) > 4) continue;
        ++stable_count;
        CHECK(dimension(s) == 6 * s.g + 3 * s.h - 6 + 2 * s.n + s.boundary_marks());
        const auto r = classify_polytopality(s);
        if (r.verdict == PolytopalityResult::Verdict::Polytope) {
            polytopal.insert(s.str());
            CHECK_FALSE(allows_two_loop(s));
            CHECK(strata_poset(s).ambient_dim == dimension(s));
        } else {
            REQUIRE(r.verdict == PolytopalityResult::Verdict::NotPolytope);
            CHECK(allows_two_loop(s));
            CHECK_FALSE(r.reason_name().empty());
        }
    }
    CHECK(stable_count > 22);
    CHECK(polytopal == expected);
}

TEST_CASE("verdict json") {
    auto j = verdict_json(sig(0, 2, 0, {3, 0}));
    CHECK(j["verdict"] == "polytope");
    CHECK(j["family"] == "Y_3");
    CHECK(j["dimension"] == 3);
    CHECK(j["stable"] == true);
    CHECK(j["signature"]["m"] == std::vector<int>{3, 0});

    j = verdict_json(sig(1, 0, 1));
    CHECK(j["verdict"] == "not_polytope");
    CHECK(j["reason"] == "positive_genus");

    j = verdict_json(sig(1, 0, 0));
    CHECK(j["verdict"] == "unstable");
    CHECK(j["dimension"].is_null());
}
