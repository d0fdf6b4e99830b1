#include <algorithm>
#include <limits>
#include <set>

#include "centerpole/cube.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace centerpole;

namespace {

std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("sigma0 sums the tail coordinates") {
    CHECK(sigma0(LatticePoint{0, 0, 0}) == std::pair<std::int64_t, std::int64_t>{0, 0});
    CHECK(sigma0(LatticePoint{1, 1, 1, 1}) == std::pair<std::int64_t, std::int64_t>{1, 3});
    CHECK(sigma0(LatticePoint{-1, 0, 1, 1}) == std::pair<std::int64_t, std::int64_t>{-1, 2});
    CHECK_THROWS_AS(sigma0(LatticePoint{}), std::invalid_argument);
}

TEST_CASE("binomial matches Pascal's triangle and vanishes outside the range") {
    for (int k = 0; k <= 20; ++k) {
        for (int s = -2; s <= k + 2; ++s) CHECK(binomial(k, s) == oracle::binomial(k, s));
    }
}

TEST_CASE("slices") {
    CHECK(build_slice(2, 0, SliceDirection::below).points.empty());
    const auto above = build_slice(2, 0, SliceDirection::above).points;
    const std::vector<CubePoint> expected{CubePoint({0, 1}), CubePoint({1, 0}), CubePoint({1, 1})};
    CHECK(above == expected);
    CHECK(build_slice(3, 1, SliceDirection::above).points.size() == 4);

    SUBCASE("the two slices miss exactly the weight-s layer") {
        for (int k = 0; k <= 12; ++k) {
            for (int s = 0; s <= k; ++s) {
                const auto lo = build_slice(k, s, SliceDirection::below).points.size();
                const auto hi = build_slice(k, s, SliceDirection::above).points.size();
                CHECK(lo + hi == (std::uint64_t{1} << k) - oracle::binomial(k, s));
            }
        }
    }
}

TEST_CASE("small sandwiches") {
    SUBCASE("Xi^0_{-2} is the singleton {1} in Z^1") {
        const Sandwich x = build_sandwich(0, -2);
        CHECK(x.points() == std::vector<LatticePoint>{LatticePoint{1}});
    }
    SUBCASE("Xi^2_0 is the cube without two opposite vertices") {
        const std::vector<LatticePoint> expected{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
        CHECK(build_sandwich(2, 0).points() == sorted(expected));
    }
    SUBCASE("Xi^1_{-1} read off the layer definition") {
        // {0} x 2^1_{<1} = {(0,0)}, {1} x 2^1_{>-1} = {(1,0),(1,1)}
        const std::vector<LatticePoint> expected{{0, 0}, {1, 0}, {1, 1}};
        CHECK(build_sandwich(1, -1).points() == expected);
    }
    SUBCASE("Xi^3_1 has layers of sizes 1, 7, 4") {
        const Sandwich x = build_sandwich(3, 1);
        CHECK(x.size() == 12);
        CHECK(x.layer(-1).size() == 1);
        CHECK(x.layer(0).size() == 7);
        CHECK(x.layer(1).size() == 4);
    }
    CHECK(build_sandwich(3, 0).size() == 14);
    CHECK(sandwich_size(3, 1) == 12);
    CHECK(sandwich_size(2, 0) == 6);
    CHECK(sandwich_size(3, 0) == 14);
}

TEST_CASE("sandwich points agree with the membership predicate") {
    for (int k = 0; k <= 7; ++k) {
        for (std::int64_t s = -2; s <= k + 1; ++s) {
            const Sandwich x = build_sandwich(k, s);
            std::size_t count = 0;
            // every point of {-1,0,1} x {0,1}^k
            for (int head = -1; head <= 1; ++head) {
                for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
                    std::vector<std::int64_t> p{head};
                    for (int i = 0; i < k; ++i) p.push_back(static_cast<std::int64_t>((m >> i) & 1U));
                    const bool in = oracle::in_sandwich(p, k, s);
                    CHECK(x.contains(LatticePoint(p)) == in);
                    count += in ? 1 : 0;
                }
            }
            CHECK(x.size() == count);
            if (s >= 0 && s <= k) CHECK(x.size() == (std::uint64_t{2} << k) - 1 - oracle::binomial(k, s));
            CHECK(sandwich_size(k, s) == count);
        }
    }
}

TEST_CASE("sandwich sizes follow the closed formula up to k = 12") {
    for (int k = 0; k <= 12; ++k) {
        for (int s = 0; s <= k; ++s) {
            CHECK(build_sandwich(k, s).size() == sandwich_size(k, s));
            CHECK(sandwich_size(k, s) == (std::uint64_t{2} << k) - 1 - oracle::binomial(k, s));
        }
    }
}

TEST_CASE("parity support and even floor") {
    CHECK(parity_support(LatticePoint{0, 0, 0}).empty());
    CHECK(parity_support(LatticePoint{1, 2, 3}) == std::vector<std::size_t>{0, 2});
    CHECK(parity_support(LatticePoint{2, 4}).empty());
    CHECK(even_floor(LatticePoint{0, 0}) == LatticePoint{0, 0});
    CHECK(even_floor(LatticePoint{3, -1}) == LatticePoint{2, -2});
    CHECK(even_floor(LatticePoint{5, 4, 1}) == LatticePoint{4, 4, 0});

    SUBCASE("x - floor(x) is the indicator of the odd coordinates") {
        for (std::int64_t a = -5; a <= 5; ++a) {
            for (std::int64_t b = -5; b <= 5; ++b) {
                for (std::int64_t c = -3; c <= 3; ++c) {
                    const LatticePoint x{a, b, c};
                    const LatticePoint f = even_floor(x);
                    CHECK(even_floor(f) == f);
                    const auto odd = parity_support(x);
                    CHECK(x - f == LatticePoint::indicator(3, odd));
                    for (std::size_t i = 0; i < 3; ++i) CHECK(f[i] % 2 == 0);
                }
            }
        }
    }
}

TEST_CASE("maximal Sigma_0-sets") {
    CHECK(enumerate_maximal_sigma0_sets(1).size() == 8);

    SUBCASE("k=2, facet x_0=0, anchor 0, upper L") {
        const auto all = enumerate_maximal_sigma0_sets(2);
        const auto it = std::find_if(all.begin(), all.end(), [](const SigmaZeroSet& t) {
            return t.facet() == Facet{0, 0} && t.anchor() == 0 && t.shape() == LShape::upper_l;
        });
        REQUIRE(it != all.end());
        std::set<CubePoint> got(it->points().begin(), it->points().end());
        const std::set<CubePoint> expected{CubePoint({0, 0, 0}), CubePoint({0, 0, 1}), CubePoint({0, 1, 0})};
        CHECK(got == expected);
    }

    SUBCASE("count, invariants and maximality") {
        for (int k = 1; k <= 6; ++k) {
            const auto all = enumerate_maximal_sigma0_sets(k);
            CHECK(all.size() == static_cast<std::size_t>((k + 1) * 2 * k * 2));
            for (const auto& tau : all) {
                CHECK(SigmaZeroSet::is_valid(k, tau.points(), tau.facet(), tau.anchor(), tau.shape()));
                const auto triple = l_triple(tau.anchor(), tau.shape());
                // every facet point with an admissible image is present
                std::size_t expected = 0;
                for (std::uint64_t m = 0; m < (std::uint64_t{1} << (k + 1)); ++m) {
                    const CubePoint p = CubePoint::from_mask(static_cast<std::size_t>(k) + 1, m);
                    if (p[tau.facet().axis] != tau.facet().level) continue;
                    if (std::find(triple.begin(), triple.end(), sigma0(p)) != triple.end()) ++expected;
                }
                CHECK(tau.points().size() == expected);
            }
        }
    }

    SUBCASE("subsets stay valid") {
        for (const auto& tau : enumerate_maximal_sigma0_sets(3)) {
            const auto& pts = tau.points();
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << pts.size()); ++m) {
                std::vector<CubePoint> sub;
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    if ((m >> i) & 1U) sub.push_back(pts[i]);
                }
                CHECK(SigmaZeroSet::is_valid(3, sub, tau.facet(), tau.anchor(), tau.shape()));
            }
        }
    }

    CHECK_THROWS(SigmaZeroSet(2, {CubePoint({0, 0, 0}), CubePoint({1, 1, 1})}, Facet{0, 0}, 0, LShape::upper_l));
}

TEST_CASE("lattice arithmetic overflow is checked") {
    const LatticePoint big{std::numeric_limits<std::int64_t>::max()};
    CHECK_THROWS_AS((void)(big + LatticePoint{1}), LatticeOverflow);
    CHECK_THROWS_AS((void)(LatticePoint({1, 2}) + LatticePoint{1}), std::invalid_argument);
    CHECK(LatticePoint({3, -4}).reflect_through(LatticePoint({1, 1})) == LatticePoint({-1, 6}));
    CHECK(LatticePoint({3, -4}).linf_norm() == 4);
}
