#include "sheafccz/pipeline.hpp"

#include <cmath>
#include <fstream>

#include "sheafccz/errors.hpp"

namespace sheafccz {

namespace {

CSSCode level_code(const RunConfig& cfg, const Instance& inst) {
  try {
    return css_from_complex(*inst.cochains, cfg.level);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("level: ") + e.what());
  }
}

json tagged(json value, const char* provenance) { return {{"value", std::move(value)}, {"provenance", provenance}}; }

json skipped(const std::string& why) { return {{"pass", true}, {"skipped", why}}; }

json dd_zero(const Instance& inst) {
  const auto v = validate(*inst.complex);
  json degrees = json::array();
  bool all = v.ok();
  const auto& c = *inst.cochains;
  for (unsigned i = 0; i + 2 <= c.t(); ++i) {
    const bool zero = spmul(c.field(), c.delta(i + 1), c.delta(i)).is_zero();
    all = all && zero;
    degrees.push_back({{"i", i}, {"zero", zero}});
  }
  return {{"pass", all},
          {"complex_valid", v.ok()},
          {"diamond_violations", v.diamond_violations},
          {"dangling_incidences", v.dangling_incidences},
          {"findings", v.findings},
          {"degrees", degrees}};
}

json poincare(const Instance& inst) {
  const auto h = verify_h0_ht(*inst.sheaf);
  const auto d = verify_poincare(*inst.sheaf);
  const auto e = verify_exactness(*inst.sheaf);
  return {{"pass", h.ok() && d.ok() && e.ok()},
          {"h0_ht", h0ht_json(h)},
          {"duality", duality_json(d)},
          {"exactness", exactness_json(e)}};
}

json leibniz(const RunConfig& cfg, const Instance& inst) {
  if (inst.complex->is_cubical()) return skipped("cup products need a simplicial complex");
  auto prod = std::make_shared<const Sheaf>(product_sheaf(*inst.sheaf, *inst.sheaf));
  const CochainComplex cp = sheaf_cochain_complex(prod);
  const CochainComplex& c = *inst.cochains;
  const unsigned t = c.t();
  json pairs = json::array();
  bool all = true;
  for (unsigned i = 0; i < t; ++i)
    for (unsigned j = 0; i + j + 1 <= t; ++j) {
      const std::uint64_t seed = cfg.seed * 1000003u + 31u * i + j;
      const auto r = leibniz_check(c, c, cp, i, j, cfg.trials, seed);
      all = all && r.ok();
      json e = leibniz_json(r);
      e["i"] = i;
      e["j"] = j;
      e["seed"] = seed;
      pairs.push_back(e);
    }
  return {{"pass", all}, {"pairs", pairs}};
}

json ccz(const RunConfig& cfg, const Instance& inst) {
  if (!cfg.ccz) return skipped("no ccz section in the config");
  const CCZCode code = build_ccz(cfg, inst);
  const auto rep = certify_ccz(code, cfg.trials, cfg.seed);
  json j = certification_json(rep);
  j["code"] = code.name;
  return j;
}

std::string weight_text(std::size_t w) { return w == kInfiniteDistance ? "inf" : std::to_string(w); }

}  // namespace

json build_summary(const RunConfig& cfg, const Instance& inst) {
  const CSSCode code = level_code(cfg, inst);
  std::vector<std::size_t> dims;
  for (unsigned i = 0; i <= inst.cochains->t(); ++i) dims.push_back(inst.cochains->dim(i));
  return {{"name", cfg.name}, {"cells", inst.complex->counts()}, {"cochain_dims", dims},
          {"level", cfg.level}, {"n", code.n},                    {"k", code.k}};
}

void write_artifacts(const RunConfig& cfg, const Instance& inst, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto dump = [&](const char* file, const json& j) {
    std::ofstream out(dir / file);
    out << j.dump(2) << '\n';
  };
  const CSSCode code = level_code(cfg, inst);
  dump("complex.json", complex_json(*inst.complex));
  dump("sheaf.json", sheaf_json(*inst.sheaf));
  dump("code.json", css_json(code));
  {
    std::ofstream out(dir / "hx.alist");
    write_alist(out, code.hx);
  }
  {
    std::ofstream out(dir / "hz.alist");
    write_alist(out, code.hz);
  }
  if (cfg.ccz) {
    const CCZCode c = build_ccz(cfg, inst);
    std::ofstream out(dir / "gates.txt");
    write_gate_list(out, *c.form);
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dd-zero", "axioms", "acyclic", "poincare", "leibniz", "ccz"};
  return names;
}

json run_suite(const RunConfig& cfg, const Instance& inst, const std::string& suite) {
  if (suite == "dd-zero") return dd_zero(inst);
  if (suite == "axioms") return axiom_json(verify_axioms(*inst.sheaf));
  if (suite == "acyclic") return axiom_json(local_acyclicity(*inst.sheaf));
  if (suite == "poincare") return poincare(inst);
  if (suite == "leibniz") return leibniz(cfg, inst);
  if (suite == "ccz") return ccz(cfg, inst);
  throw ConfigError("unknown suite '" + suite + "'");
}

json run_verify(const RunConfig& cfg, const Instance& inst, const std::string& suite) {
  json suites = json::object();
  bool all = true;
  const std::vector<std::string> selected = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  for (const auto& s : selected) {
    json r = run_suite(cfg, inst, s);
    all = all && r.at("pass").get<bool>();
    suites[s] = std::move(r);
  }
  return {{"schema", kSchemaVersion}, {"name", cfg.name},  {"seed", cfg.seed},
          {"trials", cfg.trials},     {"suites", suites}, {"pass", all}};
}

json compute_params(const RunConfig& cfg, const Instance& inst) {
  const CSSCode code = level_code(cfg, inst);
  json p{{"schema", kSchemaVersion}, {"name", cfg.name}, {"field", field_json(inst.field)}, {"level", cfg.level}};
  p["n"] = tagged(code.n, "exact");
  p["k"] = tagged(code.k, "exact");

  const DistanceReport d = distance_bounds(code, cfg.distance);
  if (d.d_exact) {
    p["d_exact"] = tagged(weight_text(*d.d_exact), "exact");
  } else {
    p["d_exact"] = tagged(nullptr, "bound");
    p["d_exact"]["reason"] = "coset space above the brute-force cap; see d_upper";
  }
  json du = tagged(d.d_upper == kInfiniteDistance ? json("inf") : json(d.d_upper), d.d_exact ? "exact" : "bound");
  du["seed"] = d.seed;
  du["samples"] = d.samples;
  du["min_side"] = std::string(1, d.min_side);
  p["d_upper"] = du;
  p["weight"] = "nonzero field entries";

  if (code.k == 0) {
    p["n_ccz"] = tagged(0, "exact");
    p["w_ccz"] = tagged(0, "exact");
    p["k_ccz_lb"] = tagged(0, "exact");
    p["gamma_estimate"] = tagged(nullptr, "uncertified");
    return p;
  }
  if (!cfg.ccz) {
    for (const char* key : {"n_ccz", "w_ccz", "k_ccz_lb", "gamma_estimate"}) {
      json e = tagged(nullptr, "uncertified");
      e["reason"] = "no ccz section in the config";
      p[key] = e;
    }
    return p;
  }

  const CCZCode c = build_ccz(cfg, inst);
  const auto cert = certify_ccz(c, cfg.trials, cfg.seed);
  const bool certified = cert.ok();
  p["certification"] = {{"pass", certified}, {"trials", cert.trials}, {"seed", cert.seed}, {"form", cert.form}};
  const std::size_t nccz = n_ccz(*c.form);
  p["n_ccz"] = tagged(nccz, "exact");
  p["w_ccz"] = tagged(w_ccz(*c.form), "exact");
  if (!certified) {
    json e = tagged(nullptr, "uncertified");
    e["reason"] = "invariance certification failed";
    p["k_ccz_lb"] = e;
    p["gamma_estimate"] = e;
    return p;
  }
  const TTensor t = build_T(c);
  const SubrankBound b = subrank_lower_bound(inst.field, t, cfg.subrank);
  json k = tagged(b.r, b.exact ? "exact" : "bound");
  k["verified"] = b.verified;
  k["seed"] = cfg.subrank.seed;
  k["restarts"] = cfg.subrank.restarts;
  p["k_ccz_lb"] = k;
  if (b.r == 0 || d.d_upper == kInfiniteDistance || d.d_upper < 2 || nccz == 0) {
    p["gamma_estimate"] = tagged(nullptr, "uncertified");
  } else {
    const double g = std::log(static_cast<double>(nccz) / static_cast<double>(b.r)) / std::log(static_cast<double>(d.d_upper));
    json e = tagged(std::round(g * 1e6) / 1e6, "bound");
    e["formula"] = "log(n_ccz / k_ccz_lb) / log(d_upper)";
    p["gamma_estimate"] = e;
  }
  return p;
}

}  // namespace sheafccz
