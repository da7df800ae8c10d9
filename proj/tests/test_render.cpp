#include <doctest.h>

#include <sstream>

#include "deltanil/render.hpp"

using namespace deltanil;

namespace {
const GroupType kLong = validate(3, {3, 5, 6, 8, 10}, {});

std::string row(const std::string& text, int k) {
  std::istringstream is(text);
  std::string line;
  for (int i = 0; i <= k; ++i) std::getline(is, line);
  return line;
}
}  // namespace

TEST_CASE("exponent matrix text rendering") {
  const auto seq = uas_via_alpha(kLong);
  REQUIRE(seq.size() == 14);
  CHECK(row(render_exponent_matrix(seq[8], RenderFormat::kText), 4) ==
        "* p^2 p^2 p^3 p^3");
  CHECK(row(render_exponent_matrix(seq[13], RenderFormat::kText), 4) ==
        "* * * * p");
  CHECK(render_exponent_matrix(zero_ideal(validate(2, {1, 2}, {})),
                               RenderFormat::kText) == "0 0\n0 0");
}

TEST_CASE("exponent matrix latex and json rendering") {
  const GroupType g = validate(2, {1, 2}, {});
  const std::string latex =
      render_exponent_matrix(radical_shape(g), RenderFormat::kLatex);
  CHECK(latex.find("\\begin{array}{cc}") != std::string::npos);
  // cell (1,1) is the zero cell: pE vanishes mod p^{n_1} = p
  CHECK(latex.find("0&p\\\\") != std::string::npos);
  CHECK(latex.find("*&p\\\\") != std::string::npos);
  const std::string json =
      render_exponent_matrix(radical_shape(g), RenderFormat::kJson);
  CHECK(json == R"({"beta":[[1,1],[0,1]],"n":[1,2]})");
}

TEST_CASE("hypercenter rendering follows the annotated-matrix style") {
  const GroupType g = validate(3, {2, 4, 7}, {1, 1, 1});
  const std::string z1 =
      render_hypercenter(g, hypercenter_description(g, 1), RenderFormat::kText);
  CHECK(z1 == "pc33+1 0 0\n0 pc33+1 0\n0 0 pc33+1");
  // entry (2,1) carries the full-modulus congruence, canonicalized to 0
  const std::string z3 =
      render_hypercenter(g, hypercenter_description(g, 3), RenderFormat::kText);
  CHECK(z3 == "pc33+1 0 p^6c13\n0 p^3c22+pc33+1 p^5c23\npc31 p^2c32 pc33+1");
  const std::string z5 =
      render_hypercenter(g, hypercenter_description(g, 5), RenderFormat::kText);
  CHECK(z5 == "pc11+1 p^2c12 p^5c13\nc21 pc22+1 p^3c23\nc31 c32 pc33+1");
}

TEST_CASE("hypercenter rendering with a wide last block") {
  const GroupType g = validate(3, {3, 5, 7}, {1, 1, 2});
  const std::string z1 =
      render_hypercenter(g, hypercenter_description(g, 1), RenderFormat::kText);
  CHECK(row(z1, 0) == "pc44+1 0 0 0");
  CHECK(row(z1, 2) == "0 0 p^6c33+pc44+1 p^6c34");
  CHECK(row(z1, 3) == "0 0 p^6c43 pc44+1");
}

TEST_CASE("series report text contains the class line") {
  const SeriesReport rep = ucs_report(validate(3, {3, 5, 7}, {1, 1, 2}));
  const std::string text = render_report(rep, RenderFormat::kText);
  CHECK(text.find("class = 6") != std::string::npos);
  CHECK(text.find("|Delta(G)| = 3^68") != std::string::npos);
  CHECK(text.find("Z_6:") != std::string::npos);

  const std::string predicted =
      render_report(ucs_report(validate(2, {1, 2}, {1, 1})), RenderFormat::kText);
  CHECK(predicted.find("(predicted, unverified)") != std::string::npos);
}

TEST_CASE("series report json schema and round trip") {
  const SeriesReport rep = ucs_report(validate(3, {2, 4, 7}, {1, 1, 1}));
  const std::string json = render_report(rep, RenderFormat::kJson);
  CHECK(json.find("\"l\":6") != std::string::npos);
  CHECK(json.find("\"y\":5") != std::string::npos);
  CHECK(json.find("\"class\":5") != std::string::npos);
  // stable key order
  CHECK(json.rfind("{\"p\":3,\"type\":[2,4,7],\"ranks\":[1,1,1],\"sigma\":2,"
                   "\"case\":",
                   0) == 0);
  const SeriesReport back = parse_series_report(json);
  CHECK(back == rep);
  CHECK(render_report(back, RenderFormat::kJson) == json);
}

TEST_CASE("round trip across shapes") {
  for (const GroupType& g :
       {validate(2, {1}, {3}), validate(2, {1, 2}, {1, 1}),
        validate(5, {1, 2, 3}, {2, 1, 2}), validate(3, {3, 5, 7}, {1, 1, 2})}) {
    const SeriesReport rep = ucs_report(g);
    CHECK(parse_series_report(render_report(rep, RenderFormat::kJson)) == rep);
  }
}

TEST_CASE("oracle report rendering") {
  const OracleReport rep = compare_report(validate(3, {1, 2}, {1, 1}), 0);
  const std::string text = render_report(rep, RenderFormat::kText);
  CHECK(text.find("agreement: true") != std::string::npos);
  CHECK(text.find("oracle class = 2") != std::string::npos);
  const std::string json = render_report(rep, RenderFormat::kJson);
  CHECK(json.find("\"agreement\":true") != std::string::npos);
}

TEST_CASE("alpha slice rendering") {
  const GroupType g = validate(3, {1, 2}, {});
  AlphaTable table(g);
  CHECK(render_alpha_slice(g, table.slice(1), RenderFormat::kText) ==
        "0 0\n0 1");
  CHECK(render_alpha_slice(g, table.slice(1), RenderFormat::kJson) ==
        R"({"alpha":[[0,0],[0,1]]})");
}
