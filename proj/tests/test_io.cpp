#include <sstream>

#include "doctest.h"
#include "sheafccz/errors.hpp"
#include "sheafccz/pipeline.hpp"

using namespace sheafccz;

namespace {

json base_config() {
  return json::parse(R"({
    "schema": 1,
    "name": "t",
    "field": {"q": 2},
    "complex": {"type": "catalog", "name": "toric_like"},
    "sheaf": {"type": "tensor", "codes": ["rep", "rep", "rep"]},
    "level": 1,
    "seed": 4,
    "trials": 20
  })");
}

// Reads an alist back into (row, col, value) triples.
std::vector<SpEntry> parse_alist(const std::string& text, std::size_t& rows, std::size_t& cols) {
  std::istringstream in(text);
  in >> cols >> rows;
  std::size_t mc = 0, mr = 0;
  in >> mc >> mr;
  std::vector<std::size_t> cw(cols), rw(rows);
  for (auto& w : cw) in >> w;
  for (auto& w : rw) in >> w;
  std::vector<SpEntry> out;
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t k = 0; k < cw[c]; ++k) {
      std::string tok;
      in >> tok;
      const auto colon = tok.find(':');
      const auto r = std::stoul(tok.substr(0, colon)) - 1;
      const Elem v = colon == std::string::npos ? 1 : static_cast<Elem>(std::stoul(tok.substr(colon + 1)));
      out.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), v});
    }
  return out;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(parse_config(base_config()));

  auto j = base_config();
  j["schema"] = 2;
  CHECK_THROWS_AS(parse_config(j), ConfigError);

  j = base_config();
  j["colour"] = "blue";
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("colour"), ConfigError);

  j = base_config();
  j["field"]["q"] = 6;
  CHECK_THROWS_AS(parse_config(j), ConfigError);

  j = base_config();
  j.erase("complex");
  CHECK_THROWS_AS(parse_config(j), ConfigError);

  j = base_config();
  j["sheaf"] = json::parse(R"({"type": "tensor", "code": "rep"})");
  CHECK_THROWS_AS(parse_config(j), ConfigError);

  j = base_config();
  j["ccz"] = json::parse(R"({"form": "cubical", "levels": [1, 1]})");
  CHECK_THROWS_AS(parse_config(j), ConfigError);

  j = base_config();
  j["seed"] = "seven";
  CHECK_THROWS_AS(parse_config(j), ConfigError);
}

TEST_CASE("instances from configs") {
  auto cfg = parse_config(base_config());
  auto inst = build_instance(cfg);
  const auto s = build_summary(cfg, inst);
  CHECK(s.at("n") == 72);
  CHECK(s.at("cells") == json::parse("[24, 72, 72, 24]"));

  // Explicit generators give the same sheaf as the named code.
  auto j = base_config();
  j["sheaf"] = json::parse(R"({"type": "tensor", "codes": [{"generator": [[1, 1]]}, "rep", {"name": "rep"}]})");
  auto inst2 = build_instance(parse_config(j));
  CHECK(build_summary(parse_config(j), inst2).at("k") == s.at("k"));

  j = base_config();
  j["sheaf"] = json::parse(R"({"type": "tensor", "codes": [{"generator": [[1, 1, 1]]}, "rep", "rep"]})");
  CHECK_THROWS_AS(build_instance(parse_config(j)), ConfigError);

  j = base_config();
  j["complex"] = json::parse(R"({"type": "simplicial", "facets": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]})");
  j["sheaf"] = json::parse(R"({"type": "local_codes", "code": "rep"})");
  auto tet = build_instance(parse_config(j));
  CHECK(tet.complex->counts() == std::vector<std::size_t>{4, 6, 4});

  j["complex"] = json::parse(R"({"type": "cubical", "vertices": 3, "generators": [[[1, 0, 2]], [[0, 2, 1]]]})");
  CHECK_THROWS_AS(build_instance(parse_config(j)), ValidationError);

  j = base_config();
  j["level"] = 3;
  auto bad_level = parse_config(j);
  CHECK_THROWS_AS(build_summary(bad_level, build_instance(bad_level)), ConfigError);
}

TEST_CASE("alist round trip") {
  Field f4(2);
  const SpMat m = SpMat::from_triplets(f4, 3, 4, {{0, 0, 1}, {0, 3, 2}, {2, 1, 3}, {1, 1, 1}});
  std::ostringstream os;
  write_alist(os, m);
  std::size_t rows = 0, cols = 0;
  auto entries = parse_alist(os.str(), rows, cols);
  CHECK(rows == 3);
  CHECK(cols == 4);
  CHECK(SpMat::from_triplets(f4, rows, cols, entries) == m);

  Field f2(1);
  const SpMat b = SpMat::from_triplets(f2, 2, 2, {{0, 1, 1}, {1, 0, 1}});
  std::ostringstream ob;
  write_alist(ob, b);
  CHECK(ob.str().find(':') == std::string::npos);
}

TEST_CASE("verify and params reports") {
  auto j = base_config();
  j["ccz"] = json::parse(R"({"form": "cubical"})");
  auto cfg = parse_config(j);
  auto inst = build_instance(cfg);

  const auto report = run_verify(cfg, inst, "all");
  CHECK(report.at("pass") == true);
  CHECK(report.at("suites").at("leibniz").contains("skipped"));
  CHECK(report.at("suites").size() == suite_names().size());
  CHECK(run_verify(cfg, inst, "all").dump() == report.dump());
  CHECK_THROWS_AS(run_suite(cfg, inst, "nope"), ConfigError);

  const auto p = compute_params(cfg, inst);
  CHECK(p.at("n").at("value") == 72);
  CHECK(p.at("k").at("provenance") == "exact");
  CHECK(p.at("k_ccz_lb").at("value").get<std::size_t>() >= 1);
  CHECK(p.at("k_ccz_lb").at("verified") == true);
  CHECK(p.at("d_upper").contains("seed"));
  CHECK(compute_params(cfg, inst).dump() == p.dump());

  // Product condition violated: certification fails and CCZ fields are withheld.
  j["ccz"]["sheaves"] = json::array();
  for (int i = 0; i < 3; ++i) j["ccz"]["sheaves"].push_back(json::parse(R"({"type": "tensor", "codes": ["full", "full", "full"]})"));
  auto neg = parse_config(j);
  const auto nr = run_verify(neg, inst, "ccz");
  CHECK(nr.at("pass") == false);
  CHECK_FALSE(nr.at("suites").at("ccz").at("witnesses").empty());
  CHECK(compute_params(neg, inst).at("k_ccz_lb").at("provenance") == "uncertified");
}

TEST_CASE("k = 0 parameters") {
  auto j = base_config();
  j["field"]["q"] = 4;
  j["complex"] = json::parse(R"({"type": "catalog", "name": "single_cube"})");
  j["sheaf"] = json::parse(R"({"type": "local_codes", "code": "full"})");
  auto cfg = parse_config(j);
  auto inst = build_instance(cfg);
  const auto p = compute_params(cfg, inst);
  CHECK(p.at("k").at("value") == 0);
  CHECK(p.at("d_upper").at("value") == "inf");
  CHECK(p.at("n_ccz").at("value") == 0);
  CHECK(p.at("k_ccz_lb").at("value") == 0);
  CHECK(run_verify(cfg, inst, "poincare").at("pass") == true);
}
