#pragma once

#include "binmosaic/analysis.hpp"
#include "binmosaic/model.hpp"
#include "binmosaic/mosaic.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace binmosaic {

enum class FillMode { none, leaf_shade };

struct Style {
  int canvas_px = 512;
  Rational stroke_px = 1;
  // Empty means the automatic hue wheel; otherwise variable i gets
  // palette[i % palette.size()].
  std::vector<std::string> palette;
  FillMode fill = FillMode::none;
  int decimal_places = 6;
  std::optional<std::string> title;

  // Throws std::invalid_argument on canvas_px < 16, stroke_px <= 0 or
  // decimal_places outside [1, 12].
  void validate() const;
};

// "#rrggbb" for hue round(360 i / n) at full saturation and 50% lightness.
std::string palette_color(std::size_t i, std::size_t n);

// SVG 1.1 document. Leaf fills (if enabled) come first in leaf order, then
// one <g> per variable in ascending index holding that variable's
// non-degenerate segments, then the frame. Coordinates are exact rationals
// scaled to the canvas and printed with Style::decimal_places digits; the
// SVG y axis points down, so mosaic y is flipped.
std::string render_svg(const Mosaic& mosaic, const Style& style = {});

struct ReportMetadata {
  std::optional<ChainSpec> chain;
  std::optional<std::string> preset;
  std::vector<std::string> variable_names;
  std::vector<PairConditional> conditionals;
  std::vector<Rational> marginals_p0;
};

// Collects conditionals and marginals of `joint` into a metadata block.
ReportMetadata describe_joint(const JointTable& joint);

// Analysis report:
//   {"n_vars", "markov", "fingerprint_scope", "statements": [{"a", "b",
//    "given", "independent"}], ...metadata}
// Keys sorted, two-space indent, trailing newline.
std::string render_report(const Fingerprint& fp, bool markov, const ReportMetadata& meta);

// {"n_vars", "order", "policy", "regions": [{"labels", "rect"}], "segments":
//  [{"var", "orient", "at", "span"}]} with rationals as strings. Regions are
// the leaves; labels follow the variable order.
nlohmann::json mosaic_to_json(const Mosaic& mosaic);
std::string render_mosaic_json(const Mosaic& mosaic);

std::string render_mc_report(const McReport& report, double tolerance);

}  // namespace binmosaic
