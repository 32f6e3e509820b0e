#include "binmosaic/analysis.hpp"
#include "binmosaic/mosaic.hpp"

#include "generators.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using namespace binmosaic;

namespace {

Rational r(std::int64_t n, std::int64_t d) { return make_rational(n, d); }

Rect rect(Rational x0, Rational y0, Rational x1, Rational y1) {
  return Rect{std::move(x0), std::move(y0), std::move(x1), std::move(y1)};
}

// Full assignment from order-position labels.
Assignment to_assignment(const Mosaic& m, const Region& region) {
  std::vector<std::uint8_t> bits(m.n_vars());
  for (std::size_t k = 0; k < region.labels.size(); ++k) {
    bits[m.variable_order()[k]] = region.labels[k];
  }
  return Assignment(bits);
}

bool interiors_overlap(const Rect& a, const Rect& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1 && !a.area().is_zero() &&
         !b.area().is_zero();
}

// Half-open containment matching locate's tie rule: closed on the edge at 1.
bool holds(const Rect& rc, const Point& p) {
  const Rational one(1);
  const bool in_x = rc.x0 <= p.x && (p.x < rc.x1 || (p.x == one && rc.x1 == one));
  const bool in_y = rc.y0 <= p.y && (p.y < rc.y1 || (p.y == one && rc.y1 == one));
  return in_x && in_y;
}

std::vector<std::size_t> shuffled_order(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);
  }
  return order;
}

}  // namespace

TEST_CASE("paper three-chain mosaic") {
  const Mosaic m = build_mosaic(preset_chain3());
  REQUIRE(m.segments().size() == 7);
  const Segment& first = m.segments()[0];
  CHECK(first.orientation == Orientation::vertical);
  CHECK(first.at == r(1, 2));
  CHECK(first.span_begin == Rational(0));
  CHECK(first.span_end == Rational(1));
  CHECK(first.variable == 0);

  const Region& r00 = m.levels()[2][0];
  CHECK(r00.labels == std::vector<std::uint8_t>{0, 0});
  CHECK(r00.rect == rect(0, 0, r(1, 2), r(1, 3)));
  CHECK(r00.rect.area() == r(1, 6));
  // Right half: P(X_1 = 0 | X_0 = 1) = 2/3 of the height.
  CHECK(m.levels()[2][2].rect == rect(r(1, 2), 0, 1, r(2, 3)));
  // Depth 2 splits are vertical again.
  CHECK(m.segments()[3].orientation == Orientation::vertical);
  CHECK(m.segments()[3].variable == 2);
  CHECK(m.segments()[3].at == r(1, 6));
}

TEST_CASE("one-variable mosaic") {
  const JointTable j(1, {r(3, 5), r(2, 5)});
  const Mosaic m = build_mosaic(j);
  const auto& leaves = leaf_regions(m);
  REQUIRE(leaves.size() == 2);
  CHECK(leaves[0].rect.width() == r(3, 5));
  CHECK(leaves[1].rect.width() == r(2, 5));
  CHECK(m.segments().size() == 1);
}

TEST_CASE("invalid orders") {
  const JointTable j = preset_chain3();
  CHECK_THROWS_AS(build_mosaic(j, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_mosaic(j, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_mosaic(j, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("policy and order") {
  const Mosaic h = build_mosaic(preset_chain3(), {}, OrientationPolicy::horizontal_first);
  CHECK(h.segments()[0].orientation == Orientation::horizontal);
  CHECK(h.segments()[1].orientation == Orientation::vertical);
  CHECK(h.levels()[1][0].rect == rect(0, 0, 1, r(1, 2)));

  const Mosaic m = build_mosaic(preset_common_effect(), {2, 0, 1});
  CHECK(m.segments()[0].variable == 2);
  CHECK(m.segments()[0].at == r(3, 4));  // P(C = 0) = 3/4
  CHECK(m.position_of(2) == 0);
  CHECK(m.position_of(0) == 1);
  CHECK(m.segments_for(1).size() == 4);
}

TEST_CASE("leaf_regions") {
  CHECK(leaf_regions(build_mosaic(preset_chain3())).size() == 8);
  const Mosaic ten = build_mosaic(chain_joint(paper_chain_spec(10)));
  const auto& leaves = leaf_regions(ten);
  CHECK(leaves.size() == 1024);
  Rational sum;
  for (const auto& leaf : leaves) {
    sum += leaf.rect.area();
  }
  CHECK(sum == Rational(1));
}

TEST_CASE("event_rects") {
  const Mosaic m = build_mosaic(preset_chain3());
  const auto x0 = event_rects(m, 0, 0);
  REQUIRE(x0.size() == 1);
  CHECK(x0[0] == rect(0, 0, r(1, 2), 1));

  const auto x1 = event_rects(m, 1, 0);
  CHECK(x1.size() == 2);
  CHECK(x1[0].area() + x1[1].area() == r(1, 2));

  CHECK(event_rects(m, 2, 0).size() == 4);
  CHECK_THROWS_AS(event_rects(m, 3, 0), std::out_of_range);
}

TEST_CASE("locate") {
  const Mosaic m = build_mosaic(preset_chain3());
  const Assignment a = locate(m, {r(1, 4), r(1, 6)});
  CHECK(a[0] == 0);
  CHECK(a[1] == 0);
  // Inside [0, 1/2] x [0, 1/3] the X_2 split is at x = 1/6.
  CHECK(a[2] == 1);
  CHECK(locate(m, {r(1, 2), r(1, 2)})[0] == 1);
  CHECK(locate(m, {0, r(1, 3)})[1] == 1);
  CHECK(locate(m, {1, 1}).bits() == std::vector<std::uint8_t>{1, 1, 1});
  CHECK(locate(m, {0, 0}).bits() == std::vector<std::uint8_t>{0, 0, 0});
  CHECK_THROWS_AS(locate(m, {r(3, 2), 0}), std::out_of_range);
  CHECK_THROWS_AS(locate(m, {0, r(-1, 2)}), std::out_of_range);
}

TEST_CASE("geometry equals probability on random tables, orders and policies") {
  SplitMix64 rng(Seed{2024});
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const JointTable j = gen::random_joint(n, seed);
    const auto order = shuffled_order(n, rng);
    const auto policy = seed % 2 ? OrientationPolicy::horizontal_first : OrientationPolicy::vertical_first;
    const Mosaic m = build_mosaic(j, order, policy);

    REQUIRE(m.levels().size() == n + 1);
    CHECK(m.segments().size() == (std::size_t{1} << n) - 1);
    for (std::size_t k = 0; k <= n; ++k) {
      const auto& level = m.levels()[k];
      REQUIRE(level.size() == (std::size_t{1} << k));
      Rational sum;
      for (std::size_t i = 0; i < level.size(); ++i) {
        sum += level[i].rect.area();
        if (k > 0) {
          CHECK(m.levels()[k - 1][i / 2].rect.contains(level[i].rect));
        }
        for (std::size_t other = i + 1; other < level.size(); ++other) {
          REQUIRE_FALSE(interiors_overlap(level[i].rect, level[other].rect));
        }
      }
      CHECK(sum == Rational(1));
    }
    for (const Region& leaf : leaf_regions(m)) {
      REQUIRE(leaf.rect.area() == j.prob(to_assignment(m, leaf)));
    }
    for (std::size_t v = 0; v < n; ++v) {
      for (int value = 0; value < 2; ++value) {
        Rational area;
        for (const Rect& rc : event_rects(m, v, value)) {
          area += rc.area();
        }
        CHECK(area == event_prob(j, {{v, value}}));
      }
    }
  }
}

TEST_CASE("zero-probability prefixes split in half and keep the tiling") {
  const JointTable j = preset_common_effect();
  const Mosaic m = build_mosaic(j);
  std::size_t degenerate = 0;
  for (const Segment& s : m.segments()) {
    degenerate += s.degenerate ? 1 : 0;
  }
  // C is determined by (A, B): every C split has fraction 0 or 1.
  CHECK(degenerate == 4);
  for (const Region& leaf : leaf_regions(m)) {
    CHECK(leaf.rect.area() == j.prob(to_assignment(m, leaf)));
  }

  const JointTable zero_branch = chain_joint(chain_spec_new(Rational(0), {{r(1, 3), r(2, 3)}}));
  const Mosaic z = build_mosaic(zero_branch);
  // The X_0 = 1 half has zero width; its X_1 split falls back to 1/2.
  CHECK(z.levels()[1][1].rect.width().is_zero());
  CHECK(z.segments()[2].at == r(1, 2));
  CHECK(z.segments()[2].degenerate);
  CHECK(z.levels()[2].size() == 4);
}

TEST_CASE("locate agrees with leaf containment") {
  SplitMix64 rng(Seed{31337});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const Mosaic m = build_mosaic(chain_joint(random_chain(n, Seed{seed}, 20)), {},
                                  seed % 2 ? OrientationPolicy::horizontal_first
                                           : OrientationPolicy::vertical_first);
    for (int s = 0; s < 50; ++s) {
      // Points on a coarse grid land on split lines now and then.
      const Point p{make_rational(static_cast<std::int64_t>(rng.uniform(0, 60)), 60),
                    make_rational(static_cast<std::int64_t>(rng.uniform(0, 60)), 60)};
      const Assignment label = locate(m, p);
      std::size_t holders = 0;
      for (const Region& leaf : leaf_regions(m)) {
        if (holds(leaf.rect, p)) {
          ++holders;
          CHECK(to_assignment(m, leaf) == label);
        }
      }
      CHECK(holders == 1);
    }
  }
}

TEST_CASE("conditional independence as an area identity") {
  const Mosaic m = build_mosaic(preset_chain3());
  const auto& leaves = leaf_regions(m);
  auto area_where = [&](auto pred) {
    Rational a;
    for (const Region& leaf : leaves) {
      if (pred(leaf.labels)) {
        a += leaf.rect.area();
      }
    }
    return a;
  };
  for (int v = 0; v < 2; ++v) {
    const Rational p1 = area_where([&](const auto& l) { return l[1] == v; });
    const Rational both = area_where([&](const auto& l) { return l[0] == 0 && l[1] == v && l[2] == 0; });
    const Rational x0 = area_where([&](const auto& l) { return l[0] == 0 && l[1] == v; });
    const Rational x2 = area_where([&](const auto& l) { return l[1] == v && l[2] == 0; });
    CHECK(both / p1 == (x0 / p1) * (x2 / p1));
  }
}

TEST_CASE("monte_carlo_check") {
  const JointTable j = preset_chain3();
  const Mosaic m = build_mosaic(j);
  const McReport report = monte_carlo_check(m, j, 100000, Seed{20240101});
  CHECK(report.samples == 100000);
  REQUIRE(report.variables.size() == 3);
  for (const auto& v : report.variables) {
    CHECK(v.deviation <= 0.01);
    CHECK(v.exact_p0 == r(1, 2));
  }
  // Golden counts for this seed.
  CHECK(report.variables[0].count0 == 50055);
  CHECK(report.variables[1].count0 == 50090);
  CHECK(report.variables[2].count0 == 49954);

  const McReport again = monte_carlo_check(m, j, 100000, Seed{20240101});
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(again.variables[v].count0 == report.variables[v].count0);
  }

  const McReport single = monte_carlo_check(m, j, 1, Seed{3});
  for (const auto& v : single.variables) {
    CHECK((v.frequency0 == 0.0 || v.frequency0 == 1.0));
  }
  CHECK_THROWS_AS(monte_carlo_check(m, j, 0, Seed{3}), std::invalid_argument);
  CHECK_THROWS_AS(monte_carlo_check(m, chain_joint(paper_chain_spec(2)), 10, Seed{3}), std::invalid_argument);
}
