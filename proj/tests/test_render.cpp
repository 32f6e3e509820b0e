#include "binmosaic/render.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace binmosaic;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(BINMOSAIC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string chain3_report() {
  const JointTable j = preset_chain3();
  ReportMetadata meta = describe_joint(j);
  meta.chain = paper_chain_spec(3);
  return render_report(fingerprint(j), verify_markov(j), meta);
}

}  // namespace

TEST_CASE("palette_color") {
  CHECK(palette_color(0, 10) == "#ff0000");
  CHECK(palette_color(5, 10) == "#00ffff");
  CHECK(palette_color(1, 3) == "#00ff00");
  CHECK(palette_color(2, 3) == "#0000ff");
  CHECK(palette_color(1, 10) == "#ff9900");   // hue 36
  CHECK(palette_color(7, 10) == "#3300ff");   // hue 252
  CHECK(palette_color(999, 1000) == "#ff0000");  // hue rounds to 360
  CHECK(palette_color(3, 10) == palette_color(3, 10));
  CHECK_THROWS_AS(palette_color(3, 3), std::out_of_range);
}

TEST_CASE("one-variable SVG golden file") {
  const Mosaic m = build_mosaic(JointTable(1, {make_rational(1, 2), make_rational(1, 2)}));
  const std::string svg = render_svg(m, Style{});
  CHECK(svg == golden("one_var_half.svg"));
  CHECK(count(svg, "<line ") == 1);
  CHECK(count(svg, "x1=\"256.000000\"") == 1);
}

TEST_CASE("render_svg is deterministic") {
  const Mosaic m = build_mosaic(chain_joint(random_chain(6, Seed{8}, 100)));
  CHECK(render_svg(m) == render_svg(m));
}

TEST_CASE("ten-variable chain draws one line per split") {
  const Mosaic m = build_mosaic(chain_joint(paper_chain_spec(10)));
  const std::string svg = render_svg(m);
  CHECK(count(svg, "<line ") == 1023);
  for (std::size_t v = 0; v < 10; ++v) {
    CHECK(count(svg, "<g id=\"var-" + std::to_string(v) + "\" stroke=\"" + palette_color(v, 10) + "\"") == 1);
  }
}

TEST_CASE("degenerate segments and empty leaves are skipped") {
  const Mosaic m = build_mosaic(preset_common_effect());
  Style style;
  style.fill = FillMode::leaf_shade;
  const std::string svg = render_svg(m, style);
  CHECK(count(svg, "<line ") == 3);
  // Four leaves carry probability 1/4; the rest have zero area.
  CHECK(count(svg, "<rect x=") == 4);
  CHECK(svg.find("<g id=\"fills\"") < svg.find("<g id=\"var-0\""));
}

TEST_CASE("style options") {
  const Mosaic m = build_mosaic(preset_chain3());
  Style style;
  style.canvas_px = 300;
  style.decimal_places = 2;
  style.palette = {"red", "green"};
  style.title = "a < b & c";
  style.stroke_px = make_rational(3, 2);
  const std::string svg = render_svg(m, style);
  CHECK(svg.find("width=\"300\"") != std::string::npos);
  CHECK(svg.find("x1=\"150.00\"") != std::string::npos);
  CHECK(svg.find("y1=\"200.00\"") != std::string::npos);  // y = 1/3 flipped
  CHECK(svg.find("<g id=\"var-2\" stroke=\"red\"") != std::string::npos);
  CHECK(svg.find("stroke-width=\"1.50\"") != std::string::npos);
  CHECK(svg.find("<title>a &lt; b &amp; c</title>") != std::string::npos);

  Style bad;
  bad.canvas_px = 15;
  CHECK_THROWS_AS(render_svg(m, bad), std::invalid_argument);
  bad = Style{};
  bad.decimal_places = 13;
  CHECK_THROWS_AS(render_svg(m, bad), std::invalid_argument);
  bad.decimal_places = 0;
  CHECK_THROWS_AS(render_svg(m, bad), std::invalid_argument);
  bad = Style{};
  bad.stroke_px = 0;
  CHECK_THROWS_AS(render_svg(m, bad), std::invalid_argument);
}

TEST_CASE("render_report") {
  const std::string text = chain3_report();
  CHECK(text == chain3_report());
  CHECK(text.back() == '\n');
  CHECK(text.find("\"markov\": true") != std::string::npos);
  CHECK(text.find("\"given\": []") != std::string::npos);
  CHECK(text.find("\"5/9\"") != std::string::npos);
  CHECK(text.find("\"4/9\"") != std::string::npos);

  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["n_vars"] == 3);
  CHECK(doc["fingerprint_scope"] == "full");
  REQUIRE(doc["statements"].size() == 6);
  CHECK(doc["statements"][0] == nlohmann::json::parse(R"({"a":0,"b":1,"given":[],"independent":false})"));
  CHECK(doc["statements"][3] == nlohmann::json::parse(R"({"a":0,"b":2,"given":[1],"independent":true})"));
  CHECK(doc["chain"]["initial_p1"] == "1/2");
  // Keys are emitted sorted.
  CHECK(text.find("\"chain\"") < text.find("\"conditionals\""));
  CHECK(text.find("\"markov\"") < text.find("\"n_vars\""));
  CHECK(text.find("\"n_vars\"") < text.find("\"statements\""));
}

TEST_CASE("mosaic dump JSON") {
  const auto doc = mosaic_to_json(build_mosaic(preset_chain3()));
  CHECK(doc["policy"] == "vertical-first");
  REQUIRE(doc["regions"].size() == 8);
  CHECK(doc["regions"][0] == nlohmann::json::parse(R"({"labels":[0,0,0],"rect":["0","0","1/6","1/3"]})"));
  REQUIRE(doc["segments"].size() == 7);
  CHECK(doc["segments"][0] == nlohmann::json::parse(R"({"var":0,"orient":"v","at":"1/2","span":["0","1"]})"));
  CHECK(doc["segments"][1] == nlohmann::json::parse(R"({"var":1,"orient":"h","at":"1/3","span":["0","1/2"]})"));
}

TEST_CASE("monte carlo report JSON") {
  const JointTable j = preset_chain3();
  const McReport rep = monte_carlo_check(build_mosaic(j), j, 1000, Seed{1});
  const auto doc = nlohmann::json::parse(render_mc_report(rep, 0.5));
  CHECK(doc["samples"] == 1000);
  CHECK(doc["pass"] == true);
  CHECK(doc["variables"].size() == 3);
  CHECK(doc["variables"][1]["exact_p0"] == "1/2");
  CHECK(render_mc_report(rep, 0.5) == render_mc_report(rep, 0.5));
  CHECK(nlohmann::json::parse(render_mc_report(rep, 0.0))["pass"] == false);
}
