#pragma once

#include "binmosaic/model.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace binmosaic {

struct Point {
  Rational x;
  Rational y;
};

// Axis-aligned rectangle in the unit square; y grows upward.
struct Rect {
  Rational x0, y0, x1, y1;

  Rational width() const { return x1 - x0; }
  Rational height() const { return y1 - y0; }
  Rational area() const { return width() * height(); }
  bool contains(const Rect& inner) const {
    return x0 <= inner.x0 && inner.x1 <= x1 && y0 <= inner.y0 && inner.y1 <= y1;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Orientation { vertical, horizontal };

enum class OrientationPolicy {
  vertical_first,    // depth 0 vertical, depth 1 horizontal, ...
  horizontal_first,  // depth 0 horizontal, depth 1 vertical, ...
};

// labels[k] is the value of variable order[k]; depth == labels.size().
struct Region {
  Rect rect;
  std::vector<std::uint8_t> labels;

  std::size_t depth() const { return labels.size(); }
};

// One split line. A vertical segment sits at x = at and spans y in
// [span_begin, span_end]; a horizontal one is the transpose.
struct Segment {
  std::size_t variable = 0;
  Orientation orientation = Orientation::vertical;
  Rational at;
  Rational span_begin;
  Rational span_end;
  // Zero length, zero-area parent, or a split fraction of 0 or 1 (the line
  // lies on the parent's edge). Kept in the mosaic, skipped when rendering.
  bool degenerate = false;

  Rational length() const { return span_end - span_begin; }
};

class Mosaic {
 public:
  Mosaic(std::size_t n_vars, std::vector<std::size_t> order, OrientationPolicy policy,
         std::vector<std::vector<Region>> levels, std::vector<Segment> segments);

  std::size_t n_vars() const { return n_vars_; }
  const std::vector<std::size_t>& variable_order() const { return order_; }
  OrientationPolicy policy() const { return policy_; }

  // levels()[k] holds the 2^k regions of depth k in label order; levels()[0]
  // is the whole square.
  const std::vector<std::vector<Region>>& levels() const { return levels_; }

  // All segments in construction order: depth ascending, then label order.
  const std::vector<Segment>& segments() const { return segments_; }
  std::vector<Segment> segments_for(std::size_t variable) const;

  // Depth at which `variable` is split, i.e. its position in the order.
  std::size_t position_of(std::size_t variable) const;
  Orientation orientation_at(std::size_t depth) const;

 private:
  std::size_t n_vars_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  OrientationPolicy policy_;
  std::vector<std::vector<Region>> levels_;
  std::vector<Segment> segments_;
};

// Region with prefix l at depth k is split by
// f = P(X_order[k] = 0 | l), or 1/2 when P(l) = 0. Value 0 goes left
// (vertical split) or to the bottom (horizontal split). An empty order means
// the identity.
Mosaic build_mosaic(const JointTable& joint, std::vector<std::size_t> order = {},
                    OrientationPolicy policy = OrientationPolicy::vertical_first);

const std::vector<Region>& leaf_regions(const Mosaic& mosaic);

// Rects of X_var^{-1}(value): every region at depth position_of(var) + 1
// whose label for var equals value.
std::vector<Rect> event_rects(const Mosaic& mosaic, std::size_t var, int value);

// Full assignment (indexed by variable) of the leaf holding `p`. A point on a
// split line belongs to the value-1 side (right or top). Throws
// std::out_of_range outside the unit square.
Assignment locate(const Mosaic& mosaic, const Point& p);

struct McVariable {
  std::size_t variable = 0;
  std::uint64_t count0 = 0;
  double frequency0 = 0.0;
  Rational exact_p0;
  double deviation = 0.0;
};

struct McReport {
  std::uint64_t samples = 0;
  Seed seed;
  std::vector<McVariable> variables;

  double max_deviation() const;
};

// Samples points (x, y) with x = a / 2^53 and y = b / 2^53, where a then b
// are the top 53 bits of consecutive SplitMix64 draws, classifies each with
// locate and compares per-variable frequencies of value 0 with the exact
// marginals of `joint`.
McReport monte_carlo_check(const Mosaic& mosaic, const JointTable& joint, std::uint64_t n_samples,
                           Seed seed);

}  // namespace binmosaic
