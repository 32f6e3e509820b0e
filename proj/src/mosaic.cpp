#include "binmosaic/mosaic.hpp"

#include "binmosaic/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace binmosaic {

namespace {

Orientation orientation_for(OrientationPolicy policy, std::size_t depth) {
  const bool even = depth % 2 == 0;
  const bool vertical = policy == OrientationPolicy::vertical_first ? even : !even;
  return vertical ? Orientation::vertical : Orientation::horizontal;
}

}  // namespace

Mosaic::Mosaic(std::size_t n_vars, std::vector<std::size_t> order, OrientationPolicy policy,
               std::vector<std::vector<Region>> levels, std::vector<Segment> segments)
    : n_vars_(n_vars),
      order_(std::move(order)),
      position_(n_vars, 0),
      policy_(policy),
      levels_(std::move(levels)),
      segments_(std::move(segments)) {
  for (std::size_t k = 0; k < order_.size(); ++k) {
    position_[order_[k]] = k;
  }
}

std::vector<Segment> Mosaic::segments_for(std::size_t variable) const {
  std::vector<Segment> out;
  std::copy_if(segments_.begin(), segments_.end(), std::back_inserter(out),
               [variable](const Segment& s) { return s.variable == variable; });
  return out;
}

std::size_t Mosaic::position_of(std::size_t variable) const {
  if (variable >= n_vars_) {
    throw std::out_of_range("variable " + std::to_string(variable) + " out of range");
  }
  return position_[variable];
}

Orientation Mosaic::orientation_at(std::size_t depth) const {
  return orientation_for(policy_, depth);
}

namespace {

void check_permutation(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.size() != n) {
    throw std::invalid_argument("variable order has " + std::to_string(order.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (auto v : order) {
    if (v >= n || seen[v]) {
      throw std::invalid_argument("variable order is not a permutation of 0.." +
                                  std::to_string(n - 1));
    }
    seen[v] = true;
  }
}

}  // namespace

Mosaic build_mosaic(const JointTable& joint, std::vector<std::size_t> order,
                    OrientationPolicy policy) {
  const std::size_t n = joint.n_vars();
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  check_permutation(order, n);

  // prefix[k][m]: probability of the depth-k label prefix m under `order`.
  std::vector<std::vector<Rational>> prefix(n + 1);
  const JointTable permuted = marginal(joint, order);
  prefix[n].assign(permuted.entries().begin(), permuted.entries().end());
  for (std::size_t k = n; k-- > 0;) {
    prefix[k].resize(std::size_t{1} << k);
    for (std::size_t m = 0; m < prefix[k].size(); ++m) {
      prefix[k][m] = prefix[k + 1][2 * m] + prefix[k + 1][2 * m + 1];
    }
  }

  std::vector<std::vector<Region>> levels(n + 1);
  levels[0].push_back(Region{Rect{0, 0, 1, 1}, {}});
  std::vector<Segment> segments;
  segments.reserve((std::size_t{1} << n) - 1);
  const Rational half = make_rational(1, 2);

  for (std::size_t k = 0; k < n; ++k) {
    const Orientation orient = orientation_for(policy, k);
    levels[k + 1].reserve(levels[k].size() * 2);
    for (std::size_t m = 0; m < levels[k].size(); ++m) {
      const Region& parent = levels[k][m];
      const Rational& p_parent = prefix[k][m];
      const Rational f = p_parent.is_zero() ? half : prefix[k + 1][2 * m] / p_parent;
      const Rect& r = parent.rect;

      Region low{r, parent.labels};
      Region high{r, parent.labels};
      low.labels.push_back(0);
      high.labels.push_back(1);
      Segment seg;
      seg.variable = order[k];
      seg.orientation = orient;
      if (orient == Orientation::vertical) {
        const Rational split = r.x0 + f * r.width();
        low.rect.x1 = split;
        high.rect.x0 = split;
        seg.at = split;
        seg.span_begin = r.y0;
        seg.span_end = r.y1;
      } else {
        const Rational split = r.y0 + f * r.height();
        low.rect.y1 = split;
        high.rect.y0 = split;
        seg.at = split;
        seg.span_begin = r.x0;
        seg.span_end = r.x1;
      }
      seg.degenerate = seg.length().is_zero() || p_parent.is_zero() || f.is_zero() ||
                       f == Rational(1);
      segments.push_back(std::move(seg));
      levels[k + 1].push_back(std::move(low));
      levels[k + 1].push_back(std::move(high));
    }
  }
  return Mosaic(n, std::move(order), policy, std::move(levels), std::move(segments));
}

const std::vector<Region>& leaf_regions(const Mosaic& mosaic) { return mosaic.levels().back(); }

std::vector<Rect> event_rects(const Mosaic& mosaic, std::size_t var, int value) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument("event value must be 0 or 1");
  }
  const std::size_t pos = mosaic.position_of(var);
  std::vector<Rect> out;
  for (const Region& region : mosaic.levels()[pos + 1]) {
    if (region.labels[pos] == value) {
      out.push_back(region.rect);
    }
  }
  return out;
}

Assignment locate(const Mosaic& mosaic, const Point& p) {
  const Rational zero(0), one(1);
  if (p.x < zero || p.x > one || p.y < zero || p.y > one) {
    throw std::out_of_range("point outside the unit square");
  }
  std::vector<std::uint8_t> bits(mosaic.n_vars());
  std::size_t m = 0;
  for (std::size_t k = 0; k < mosaic.n_vars(); ++k) {
    // The low child's far edge is the split line.
    const Rect& low = mosaic.levels()[k + 1][2 * m].rect;
    const bool high = mosaic.orientation_at(k) == Orientation::vertical ? p.x >= low.x1
                                                                         : p.y >= low.y1;
    bits[mosaic.variable_order()[k]] = high ? 1 : 0;
    m = 2 * m + (high ? 1 : 0);
  }
  return Assignment(std::move(bits));
}

double McReport::max_deviation() const {
  double worst = 0.0;
  for (const auto& v : variables) {
    worst = std::max(worst, v.deviation);
  }
  return worst;
}

McReport monte_carlo_check(const Mosaic& mosaic, const JointTable& joint, std::uint64_t n_samples,
                           Seed seed) {
  if (n_samples == 0) {
    throw std::invalid_argument("monte carlo check needs at least one sample");
  }
  if (joint.n_vars() != mosaic.n_vars()) {
    throw std::invalid_argument("mosaic and joint table disagree on variable count");
  }
  const std::size_t n = mosaic.n_vars();
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> zeros(n, 0);
  for (std::uint64_t s = 0; s < n_samples; ++s) {
    const std::uint64_t a = rng.next_unit_numerator();
    const std::uint64_t b = rng.next_unit_numerator();
    const Point p{Rational(BigInt(a), BigInt(1) << 53), Rational(BigInt(b), BigInt(1) << 53)};
    const Assignment label = locate(mosaic, p);
    for (std::size_t v = 0; v < n; ++v) {
      zeros[v] += label[v] == 0 ? 1 : 0;
    }
  }
  const std::vector<Rational> exact = marginals_p0(joint);
  McReport report{n_samples, seed, {}};
  for (std::size_t v = 0; v < n; ++v) {
    McVariable mv;
    mv.variable = v;
    mv.count0 = zeros[v];
    mv.frequency0 = static_cast<double>(zeros[v]) / static_cast<double>(n_samples);
    mv.exact_p0 = exact[v];
    mv.deviation = std::fabs(mv.frequency0 - exact[v].to_double());
    report.variables.push_back(std::move(mv));
  }
  return report;
}

}  // namespace binmosaic
