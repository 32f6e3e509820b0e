#include "binmosaic/render.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace binmosaic {

void Style::validate() const {
  if (canvas_px < 16) {
    throw std::invalid_argument("canvas must be at least 16 px");
  }
  if (stroke_px.sign() <= 0) {
    throw std::invalid_argument("stroke width must be positive");
  }
  if (decimal_places < 1 || decimal_places > 12) {
    throw std::invalid_argument("decimal places must be in [1, 12]");
  }
}

namespace {

std::string hex_color(int r, int g, int b) {
  std::array<char, 8> buf{};
  std::snprintf(buf.data(), buf.size(), "#%02x%02x%02x", r, g, b);
  return buf.data();
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(const Style& style) : scale_(style.canvas_px), places_(style.decimal_places) {}

  std::string x(const Rational& v) const { return to_fixed(v * scale_, places_); }
  std::string y(const Rational& v) const { return to_fixed((Rational(1) - v) * scale_, places_); }
  std::string len(const Rational& v) const { return to_fixed(v * scale_, places_); }

 private:
  Rational scale_;
  int places_;
};

const char* policy_name(OrientationPolicy p) {
  return p == OrientationPolicy::vertical_first ? "vertical-first" : "horizontal-first";
}

const char* scope_name(FingerprintScope s) {
  return s == FingerprintScope::full ? "full" : "pairwise-plus-adjacent";
}

}  // namespace

std::string palette_color(std::size_t i, std::size_t n) {
  if (n == 0 || i >= n) {
    throw std::out_of_range("palette index out of range");
  }
  // round(360 i / n), halves away from zero.
  const std::size_t hue = ((720 * i + n) / (2 * n)) % 360;
  const int sector = static_cast<int>(hue / 60);
  const int rising = static_cast<int>((255 * (hue % 60) + 30) / 60);
  const int falling = 255 - rising;
  switch (sector) {
    case 0: return hex_color(255, rising, 0);
    case 1: return hex_color(falling, 255, 0);
    case 2: return hex_color(0, 255, rising);
    case 3: return hex_color(0, falling, 255);
    case 4: return hex_color(rising, 0, 255);
    default: return hex_color(255, 0, falling);
  }
}

std::string render_svg(const Mosaic& mosaic, const Style& style) {
  style.validate();
  const Canvas c(style);
  const std::string size = std::to_string(style.canvas_px);
  const std::string stroke = to_fixed(style.stroke_px, style.decimal_places);
  const std::size_t n = mosaic.n_vars();
  auto color = [&](std::size_t var) {
    return style.palette.empty() ? palette_color(var, n) : style.palette[var % style.palette.size()];
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  if (style.title) {
    out << "<title>" << xml_escape(*style.title) << "</title>\n";
  }

  if (style.fill == FillMode::leaf_shade) {
    out << "<g id=\"fills\" stroke=\"none\">\n";
    for (const Region& leaf : leaf_regions(mosaic)) {
      if (leaf.rect.area().is_zero()) {
        continue;
      }
      std::size_t ones = 0;
      for (auto b : leaf.labels) {
        ones += b;
      }
      // Lighter for more zeros: 255 down to 64.
      const int grey = 255 - static_cast<int>((191 * ones + n / 2) / n);
      out << "<rect x=\"" << c.x(leaf.rect.x0) << "\" y=\"" << c.y(leaf.rect.y1) << "\" width=\""
          << c.len(leaf.rect.width()) << "\" height=\"" << c.len(leaf.rect.height())
          << "\" fill=\"" << hex_color(grey, grey, grey) << "\"/>\n";
    }
    out << "</g>\n";
  }

  for (std::size_t var = 0; var < n; ++var) {
    out << "<g id=\"var-" << var << "\" stroke=\"" << color(var) << "\" stroke-width=\"" << stroke
        << "\" fill=\"none\">\n";
    for (const Segment& seg : mosaic.segments()) {
      if (seg.variable != var || seg.degenerate) {
        continue;
      }
      if (seg.orientation == Orientation::vertical) {
        out << "<line x1=\"" << c.x(seg.at) << "\" y1=\"" << c.y(seg.span_begin) << "\" x2=\""
            << c.x(seg.at) << "\" y2=\"" << c.y(seg.span_end) << "\"/>\n";
      } else {
        out << "<line x1=\"" << c.x(seg.span_begin) << "\" y1=\"" << c.y(seg.at) << "\" x2=\""
            << c.x(seg.span_end) << "\" y2=\"" << c.y(seg.at) << "\"/>\n";
      }
    }
    out << "</g>\n";
  }

  out << "<rect id=\"frame\" x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << stroke << "\"/>\n";
  out << "</svg>\n";
  return out.str();
}

ReportMetadata describe_joint(const JointTable& joint) {
  ReportMetadata meta;
  meta.conditionals = pairwise_conditionals(joint);
  meta.marginals_p0 = marginals_p0(joint);
  return meta;
}

std::string render_report(const Fingerprint& fp, bool markov, const ReportMetadata& meta) {
  using nlohmann::json;
  json statements = json::array();
  for (const Statement& s : fp.statements) {
    statements.push_back(
        {{"a", s.a}, {"b", s.b}, {"given", s.given}, {"independent", s.independent}});
  }
  json doc = {{"n_vars", fp.n_vars},
              {"markov", markov},
              {"fingerprint_scope", scope_name(fp.scope)},
              {"statements", std::move(statements)}};
  if (meta.chain) {
    json steps = json::array();
    for (const auto& step : meta.chain->steps()) {
      steps.push_back({{"q0", step.p_zero_given[0].value().to_string()},
                       {"q1", step.p_zero_given[1].value().to_string()}});
    }
    doc["chain"] = {{"initial_p1", meta.chain->initial_p1().value().to_string()},
                    {"steps", std::move(steps)}};
  }
  if (meta.preset) {
    doc["preset"] = *meta.preset;
  }
  if (!meta.variable_names.empty()) {
    doc["variables"] = meta.variable_names;
  }
  if (!meta.marginals_p0.empty()) {
    json marg = json::array();
    for (const auto& p : meta.marginals_p0) {
      marg.push_back(p.to_string());
    }
    doc["marginals_p0"] = std::move(marg);
  }
  if (!meta.conditionals.empty()) {
    json conds = json::array();
    auto opt = [](const std::optional<Rational>& r) { return r ? json(r->to_string()) : json(nullptr); };
    for (const auto& pc : meta.conditionals) {
      conds.push_back({{"given", pc.given},
                       {"target", pc.target},
                       {"p0_given_0", opt(pc.p0_given0)},
                       {"p0_given_1", opt(pc.p0_given1)}});
    }
    doc["conditionals"] = std::move(conds);
  }
  return doc.dump(2) + "\n";
}

nlohmann::json mosaic_to_json(const Mosaic& mosaic) {
  using nlohmann::json;
  json regions = json::array();
  for (const Region& leaf : leaf_regions(mosaic)) {
    json labels = json::array();
    for (auto b : leaf.labels) {
      labels.push_back(static_cast<int>(b));
    }
    regions.push_back({{"labels", std::move(labels)},
                       {"rect",
                        {leaf.rect.x0.to_string(), leaf.rect.y0.to_string(),
                         leaf.rect.x1.to_string(), leaf.rect.y1.to_string()}}});
  }
  json segments = json::array();
  for (const Segment& seg : mosaic.segments()) {
    segments.push_back({{"var", seg.variable},
                        {"orient", seg.orientation == Orientation::vertical ? "v" : "h"},
                        {"at", seg.at.to_string()},
                        {"span", {seg.span_begin.to_string(), seg.span_end.to_string()}}});
  }
  return {{"n_vars", mosaic.n_vars()},
          {"order", mosaic.variable_order()},
          {"policy", policy_name(mosaic.policy())},
          {"regions", std::move(regions)},
          {"segments", std::move(segments)}};
}

std::string render_mosaic_json(const Mosaic& mosaic) { return mosaic_to_json(mosaic).dump(2) + "\n"; }

std::string render_mc_report(const McReport& report, double tolerance) {
  using nlohmann::json;
  json vars = json::array();
  for (const McVariable& v : report.variables) {
    vars.push_back({{"var", v.variable},
                    {"count0", v.count0},
                    {"empirical_p0", v.frequency0},
                    {"exact_p0", v.exact_p0.to_string()},
                    {"deviation", v.deviation}});
  }
  const double worst = report.max_deviation();
  json doc = {{"samples", report.samples},
              {"seed", report.seed.value},
              {"tolerance", tolerance},
              {"max_deviation", worst},
              {"pass", worst <= tolerance},
              {"variables", std::move(vars)}};
  return doc.dump(2) + "\n";
}

}  // namespace binmosaic
