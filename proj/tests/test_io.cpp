#include "histo/families.hpp"
#include "histo/io.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace histo;

TEST_CASE("doubles round-trip through text") {
  for (double v : {0.1, -1.0 / 3.0, std::numbers::pi, 1e-300, -0.0, 12345678.875}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("support sets round-trip through JSON") {
  const std::vector<double> breaks{-1.0, -0.25, 0.5, 1.0};
  const SupportSet c1 = concat_from_nodes(breaks);
  const nlohmann::json j = to_json(c1);
  CHECK(j.at("class") == "C1");
  REQUIRE(j.at("supports").size() == 3);
  CHECK(j.at("supports")[1][0] == -0.25);
  const SupportSet back = support_set_from_json(nlohmann::json::parse(j.dump()));
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == c1[i]);
  CHECK(back.support_class() == SupportClass::C1);

  const SupportSet arc = fekete_arc(5, 0.3).set;
  const nlohmann::json ja = to_json(arc);
  CHECK(ja.at("rho") == 0.3);
  const SupportSet arc_back = support_set_from_json(nlohmann::json::parse(ja.dump()));
  REQUIRE(arc_back.arc().has_value());
  CHECK(arc_back.arc()->taus == arc.arc()->taus);
  for (std::size_t i = 0; i < 5; ++i) CHECK(arc_back[i] == arc[i]);
}

TEST_CASE("malformed support sets are rejected") {
  CHECK_THROWS_AS((void)support_set_from_json(nlohmann::json::parse(R"({"supports": [[0.0]]})")), std::invalid_argument);
  CHECK_THROWS_AS((void)support_set_from_json(nlohmann::json::parse(R"({"supports": "none"})")), std::invalid_argument);
  CHECK_THROWS_AS((void)support_set_from_json(nlohmann::json::parse(R"({"nodes": []})")), std::invalid_argument);
  CHECK_THROWS_AS((void)support_set_from_json(nlohmann::json::parse(R"({"supports": [[0, 1]], "class": "C7"})")),
                  std::invalid_argument);
}

TEST_CASE("Fekete results serialize every field") {
  const FeketeResult res = fekete_concat_normalized(5);
  const nlohmann::json j = to_json(res);
  CHECK(j.at("r") == 5);
  CHECK(j.at("mode") == "normalized");
  REQUIRE(j.at("endpoints").size() == 6);
  CHECK(j.at("endpoints")[2].get<double>() == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
  CHECK(j.at("log_abs_det").get<double>() == res.log_abs_det);
  const nlohmann::json& d = j.at("diagnostics");
  for (const char* key : {"starts", "iterations", "best_gap", "stationarity", "converged", "non_unique", "method",
                          "symmetric", "verified", "det_basis"}) {
    CHECK(d.contains(key));
  }
  CHECK(d.at("method") == "Optimized");
  CHECK(j.at("set").at("class") == "C1");
  CHECK(to_json(fekete_nodes(4)).at("diagnostics").at("method") == "ClosedForm");
}

TEST_CASE("integer ranges") {
  CHECK(parse_range("7") == std::vector<std::size_t>{7});
  CHECK(parse_range("3:6") == std::vector<std::size_t>{3, 4, 5, 6});
  CHECK(parse_range("10:120:10").size() == 12);
  CHECK(parse_range("10:35:10") == std::vector<std::size_t>{10, 20, 30});
  CHECK(parse_range("4:4") == std::vector<std::size_t>{4});
  for (const char* bad : {"", "a", "3:", ":4", "5:2", "1:4:0", "1:2:3:4", "-3", "2.5", "3:x"}) {
    INFO(bad);
    CHECK_THROWS_AS((void)parse_range(bad), std::invalid_argument);
  }
}

TEST_CASE("Lebesgue CSV") {
  std::vector<GrowthRow> rows(2);
  rows[0].r = 4;
  rows[0].estimate = LebesgueEstimate{1.5, -0.25, 2000, true, true};
  rows[1].r = 5;
  rows[1].error = "failed";
  CHECK(lebesgue_csv(rows) == "r,lebesgue,argmax_x,grid_size\n4,1.5,-0.25,2000\n5,,,\n");
}
