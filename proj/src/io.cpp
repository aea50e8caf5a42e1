#include "sheafccz/io.hpp"

#include <fstream>
#include <sstream>

#include "sheafccz/catalog.hpp"
#include "sheafccz/errors.hpp"

namespace sheafccz {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* a : keys) known = known || k == a;
    if (!known) bad(where, "unknown key '" + k + "'");
  }
}

template <class T>
T get_or(const json& j, const char* key, const std::string& where, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(where + "." + key, "wrong type");
  }
}

template <class T>
T require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) bad(where, "missing key '" + std::string(key) + "'");
  return get_or<T>(j, key, where, T{});
}

unsigned field_degree(std::uint64_t q) {
  if (q < 2 || (q & (q - 1)) != 0) bad("field.q", "must be a power of two, got " + std::to_string(q));
  unsigned r = 0;
  while ((std::uint64_t{1} << r) < q) ++r;
  if (r > Field::kMaxDegree) bad("field.q", "degree above " + std::to_string(Field::kMaxDegree));
  return r;
}

CodeSpec parse_code(const json& j, const std::string& where) {
  CodeSpec c;
  if (j.is_string()) {
    c.name = j.get<std::string>();
    return c;
  }
  allow_keys(j, where, {"name", "generator"});
  if (j.contains("name") == j.contains("generator")) bad(where, "give exactly one of 'name' and 'generator'");
  if (j.contains("name")) {
    c.name = require<std::string>(j, "name", where);
  } else {
    c.generator = require<std::vector<std::vector<std::uint32_t>>>(j, "generator", where);
    if (c.generator.empty()) bad(where + ".generator", "needs at least one row");
  }
  return c;
}

SheafSpec parse_sheaf(const json& j, const std::string& where) {
  allow_keys(j, where, {"type", "code", "codes"});
  SheafSpec s;
  const auto type = require<std::string>(j, "type", where);
  if (type == "constant") {
    s.kind = SheafSpec::Kind::Constant;
    if (j.contains("code") || j.contains("codes")) bad(where, "a constant sheaf takes no codes");
    return s;
  }
  if (type == "local_codes")
    s.kind = SheafSpec::Kind::LocalCodes;
  else if (type == "tensor")
    s.kind = SheafSpec::Kind::Tensor;
  else
    bad(where + ".type", "unknown sheaf type '" + type + "'");
  if (j.contains("code") && j.contains("codes")) bad(where, "give 'code' or 'codes', not both");
  if (j.contains("code")) {
    if (s.kind == SheafSpec::Kind::Tensor) bad(where, "a tensor sheaf needs 'codes', one per direction");
    s.codes.push_back(parse_code(j.at("code"), where + ".code"));
  } else if (j.contains("codes")) {
    const json& arr = j.at("codes");
    if (!arr.is_array() || arr.empty()) bad(where + ".codes", "expected a nonempty array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      s.codes.push_back(parse_code(arr[i], where + ".codes[" + std::to_string(i) + "]"));
  } else {
    bad(where, "missing 'code' or 'codes'");
  }
  return s;
}

std::vector<std::vector<std::uint32_t>> read_facet_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("complex.file", "cannot open '" + path.string() + "'");
  std::vector<std::vector<std::uint32_t>> facets;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::uint32_t> f;
    long long v = 0;
    while (ls >> v) {
      if (v < 0) bad("complex.file", "negative vertex id in '" + path.string() + "'");
      f.push_back(static_cast<std::uint32_t>(v));
    }
    if (!ls.eof()) bad("complex.file", "non-numeric entry in '" + path.string() + "'");
    if (!f.empty()) facets.push_back(std::move(f));
  }
  return facets;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vec(i));
  return rows;
}

json weight_json(std::size_t w) { return w == kInfiniteDistance ? json("inf") : json(w); }

json findings_json(const std::vector<CellFinding>& fs) {
  json arr = json::array();
  for (const auto& f : fs) arr.push_back({{"dim", f.dim}, {"cell", f.cell}, {"what", f.what}});
  return arr;
}

}  // namespace

LinCode CodeSpec::resolve(const Field& f, std::size_t length) const {
  if (!name.empty()) return named_code(f, name, length);
  Mat g(generator.size(), length);
  for (std::size_t r = 0; r < generator.size(); ++r) {
    if (generator[r].size() != length)
      throw ConfigError("generator row " + std::to_string(r) + " has length " + std::to_string(generator[r].size()) +
                        ", expected " + std::to_string(length));
    for (std::size_t c = 0; c < length; ++c) {
      if (!f.contains(generator[r][c]))
        throw ConfigError("generator entry " + std::to_string(generator[r][c]) + " is not in F_" + std::to_string(f.q()));
      g(r, c) = static_cast<Elem>(generator[r][c]);
    }
  }
  return LinCode(f, g);
}

RunConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
  allow_keys(j, "config",
             {"schema", "name", "field", "complex", "sheaf", "level", "ccz", "seed", "trials", "distance", "subrank"});
  const int schema = require<int>(j, "schema", "config");
  if (schema != kSchemaVersion)
    bad("config.schema", "unsupported version " + std::to_string(schema) + ", expected " + std::to_string(kSchemaVersion));

  RunConfig cfg;
  cfg.base_dir = base_dir;
  cfg.name = get_or<std::string>(j, "name", "config", "unnamed");

  if (!j.contains("field")) bad("config", "missing key 'field'");
  const json& fj = j.at("field");
  if (fj.is_number_unsigned()) {
    cfg.field_r = field_degree(fj.get<std::uint64_t>());
  } else {
    allow_keys(fj, "field", {"q"});
    cfg.field_r = field_degree(require<std::uint64_t>(fj, "q", "field"));
  }

  if (!j.contains("complex")) bad("config", "missing key 'complex'");
  cfg.complex = j.at("complex");
  if (!cfg.complex.is_object() || !cfg.complex.contains("type")) bad("complex", "expected an object with 'type'");

  if (!j.contains("sheaf")) bad("config", "missing key 'sheaf'");
  cfg.sheaf = parse_sheaf(j.at("sheaf"), "sheaf");
  cfg.level = get_or<unsigned>(j, "level", "config", 1);
  cfg.seed = get_or<std::uint64_t>(j, "seed", "config", 1);
  cfg.trials = get_or<std::size_t>(j, "trials", "config", 200);

  if (j.contains("ccz")) {
    const json& cj = j.at("ccz");
    allow_keys(cj, "ccz", {"form", "levels", "sheaves"});
    CCZSpec c;
    const auto form = require<std::string>(cj, "form", "ccz");
    if (form == "cubical")
      c.form = CCZSpec::Form::Cubical;
    else if (form == "simplicial")
      c.form = CCZSpec::Form::Simplicial;
    else
      bad("ccz.form", "expected 'cubical' or 'simplicial', got '" + form + "'");
    if (cj.contains("levels")) {
      const auto lv = get_or<std::vector<unsigned>>(cj, "levels", "ccz", {});
      if (lv.size() != 3) bad("ccz.levels", "expected three levels");
      c.levels = {lv[0], lv[1], lv[2]};
    }
    if (cj.contains("sheaves")) {
      const json& arr = cj.at("sheaves");
      if (!arr.is_array() || arr.size() != 3) bad("ccz.sheaves", "expected three sheaf descriptions");
      for (std::size_t i = 0; i < 3; ++i) c.sheaves.push_back(parse_sheaf(arr[i], "ccz.sheaves[" + std::to_string(i) + "]"));
    }
    cfg.ccz = c;
  }

  if (j.contains("distance")) {
    const json& dj = j.at("distance");
    allow_keys(dj, "distance", {"brute_force_cap", "samples", "force_random"});
    cfg.distance.brute_force_cap = get_or<std::uint64_t>(dj, "brute_force_cap", "distance", cfg.distance.brute_force_cap);
    cfg.distance.samples = get_or<std::size_t>(dj, "samples", "distance", cfg.distance.samples);
    cfg.distance.force_random = get_or<bool>(dj, "force_random", "distance", false);
  }
  cfg.distance.seed = cfg.seed;

  if (j.contains("subrank")) {
    const json& sj = j.at("subrank");
    allow_keys(sj, "subrank", {"restarts", "attempts", "allow_exact"});
    cfg.subrank.restarts = get_or<std::size_t>(sj, "restarts", "subrank", cfg.subrank.restarts);
    cfg.subrank.attempts = get_or<std::size_t>(sj, "attempts", "subrank", cfg.subrank.attempts);
    cfg.subrank.allow_exact = get_or<bool>(sj, "allow_exact", "subrank", true);
  }
  cfg.subrank.seed = cfg.seed;
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(j, path.parent_path());
}

CellComplex load_complex(const json& spec, const std::filesystem::path& base_dir) {
  const auto type = require<std::string>(spec, "type", "complex");
  if (type == "catalog") {
    allow_keys(spec, "complex", {"type", "name"});
    const auto name = require<std::string>(spec, "name", "complex");
    try {
      return catalog::by_name(name);
    } catch (const LookupError& e) {
      bad("complex.name", e.what());
    }
  }
  if (type == "shifts") {
    allow_keys(spec, "complex", {"type", "vertices", "t", "shifts"});
    return CellComplex::cubical(catalog::shift_spec(require<std::uint32_t>(spec, "vertices", "complex"),
                                                    require<unsigned>(spec, "t", "complex"),
                                                    require<std::vector<std::uint32_t>>(spec, "shifts", "complex")));
  }
  if (type == "cubical") {
    allow_keys(spec, "complex", {"type", "vertices", "generators"});
    CubicalSpec cs;
    cs.n_vertices = require<std::uint32_t>(spec, "vertices", "complex");
    cs.gens = require<std::vector<std::vector<Perm>>>(spec, "generators", "complex");
    cs.t = static_cast<unsigned>(cs.gens.size());
    return CellComplex::cubical(cs);
  }
  if (type == "simplicial") {
    allow_keys(spec, "complex", {"type", "facets", "file"});
    if (spec.contains("facets") == spec.contains("file")) bad("complex", "give exactly one of 'facets' and 'file'");
    if (spec.contains("facets"))
      return CellComplex::simplicial(require<std::vector<std::vector<std::uint32_t>>>(spec, "facets", "complex"));
    std::filesystem::path p = require<std::string>(spec, "file", "complex");
    if (p.is_relative()) p = base_dir / p;
    return CellComplex::simplicial(read_facet_file(p));
  }
  bad("complex.type", "unknown complex type '" + type + "'");
}

Sheaf build_sheaf(ComplexPtr x, const Field& f, const SheafSpec& spec) {
  const unsigned t = x->t();
  switch (spec.kind) {
    case SheafSpec::Kind::Constant:
      return constant_sheaf(x, f);
    case SheafSpec::Kind::Tensor: {
      if (!x->is_cubical()) throw ConfigError("sheaf: a tensor sheaf needs a cubical complex");
      if (spec.codes.size() != t)
        throw ConfigError("sheaf.codes: expected " + std::to_string(t) + " codes, got " + std::to_string(spec.codes.size()));
      std::vector<LinCode> per_dir;
      for (const auto& c : spec.codes) per_dir.push_back(c.resolve(f, x->delta()));
      return cubical_tensor_sheaf(x, per_dir);
    }
    case SheafSpec::Kind::LocalCodes: {
      if (spec.codes.size() == 1) {
        const auto& c = spec.codes.front();
        if (!c.name.empty()) return sheaf_from_local_codes(x, f, uniform_local_codes(*x, f, c.name));
        std::vector<LinCode> codes;
        for (std::uint32_t e = 0; e < x->count(t - 1); ++e) codes.push_back(c.resolve(f, x->top_above(t - 1, e).size()));
        return sheaf_from_local_codes(x, f, codes);
      }
      if (!x->is_cubical()) throw ConfigError("sheaf.codes: per-direction codes need a cubical complex");
      if (spec.codes.size() != t)
        throw ConfigError("sheaf.codes: expected 1 or " + std::to_string(t) + " codes, got " +
                          std::to_string(spec.codes.size()));
      std::vector<LinCode> per_dir;
      for (const auto& c : spec.codes) per_dir.push_back(c.resolve(f, x->delta()));
      return sheaf_from_local_codes(x, f, cubical_local_codes(*x, per_dir));
    }
  }
  throw ConfigError("sheaf: unknown kind");
}

Instance build_instance(const RunConfig& cfg) {
  Instance inst{Field(cfg.field_r), nullptr, nullptr, nullptr};
  inst.complex = std::make_shared<const CellComplex>(load_complex(cfg.complex, cfg.base_dir));
  inst.sheaf = std::make_shared<const Sheaf>(build_sheaf(inst.complex, inst.field, cfg.sheaf));
  inst.cochains = std::make_shared<const CochainComplex>(sheaf_cochain_complex(inst.sheaf));
  return inst;
}

CCZCode build_ccz(const RunConfig& cfg, const Instance& inst) {
  if (!cfg.ccz) throw ConfigError("config has no 'ccz' section");
  const CCZSpec& spec = *cfg.ccz;
  std::array<std::shared_ptr<const CochainComplex>, 3> cs;
  for (std::size_t i = 0; i < 3; ++i) {
    if (spec.sheaves.empty()) {
      cs[i] = inst.cochains;
    } else {
      auto s = std::make_shared<const Sheaf>(build_sheaf(inst.complex, inst.field, spec.sheaves[i]));
      cs[i] = std::make_shared<const CochainComplex>(sheaf_cochain_complex(s));
    }
  }
  if (spec.form == CCZSpec::Form::Cubical) {
    if (!inst.complex->is_cubical() || inst.complex->t() != 3)
      throw ConfigError("ccz.form: the cubical form needs a three-dimensional cubical complex");
    if (spec.levels != std::array<unsigned, 3>{1, 1, 1}) throw ConfigError("ccz.levels: the cubical form uses levels 1, 1, 1");
    return cubical_ccz_code(cs[0], cs[1], cs[2]);
  }
  if (inst.complex->is_cubical()) throw ConfigError("ccz.form: the cup form needs a simplicial complex");
  if (spec.levels[0] + spec.levels[1] + spec.levels[2] != inst.complex->t())
    throw ConfigError("ccz.levels: levels must sum to t = " + std::to_string(inst.complex->t()));
  return simplicial_ccz_code(cs[0], spec.levels[0], cs[1], spec.levels[1], cs[2], spec.levels[2]);
}

void write_alist(std::ostream& os, const SpMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::pair<std::uint32_t, Elem>>> by_col(cols), by_row(rows);
  for (const auto& e : m.entries()) {
    by_col[e.col].push_back({e.row, e.value});
    by_row[e.row].push_back({e.col, e.value});
  }
  std::size_t max_col = 0, max_row = 0;
  for (const auto& c : by_col) max_col = std::max(max_col, c.size());
  for (const auto& r : by_row) max_row = std::max(max_row, r.size());
  bool binary = true;
  for (const auto& e : m.entries()) binary = binary && e.value == 1;

  auto line = [&](const std::vector<std::vector<std::pair<std::uint32_t, Elem>>>& lists) {
    for (const auto& l : lists) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) os << ' ';
        os << l[i].first + 1;
        if (!binary) os << ':' << static_cast<unsigned>(l[i].second);
      }
      os << '\n';
    }
  };
  os << cols << ' ' << rows << '\n' << max_col << ' ' << max_row << '\n';
  for (std::size_t c = 0; c < cols; ++c) os << (c ? " " : "") << by_col[c].size();
  os << '\n';
  for (std::size_t r = 0; r < rows; ++r) os << (r ? " " : "") << by_row[r].size();
  os << '\n';
  line(by_col);
  line(by_row);
}

json field_json(const Field& f) { return {{"q", f.q()}, {"modulus", f.modulus()}}; }

json complex_json(const CellComplex& x) {
  json j{{"kind", x.is_cubical() ? "cubical" : "simplicial"}, {"t", x.t()}, {"cells", x.counts()}};
  if (x.is_cubical()) {
    const auto& s = x.cubical_spec();
    j["vertices"] = s.n_vertices;
    j["generators"] = s.gens;
  } else {
    json facets = json::array();
    for (std::uint32_t i = 0; i < x.count(x.t()); ++i) facets.push_back(x.simplex(x.t(), i));
    j["facets"] = facets;
  }
  return j;
}

json sheaf_json(const Sheaf& s) {
  const CellComplex& x = s.complex();
  json dims = json::array();
  for (unsigned k = 0; k <= x.t(); ++k) {
    std::vector<std::size_t> d;
    for (std::uint32_t i = 0; i < x.count(k); ++i) d.push_back(s.dim(k, i));
    dims.push_back(d);
  }
  json codes = json::array();
  for (std::uint32_t e = 0; e < x.count(x.t() - 1); ++e)
    codes.push_back({{"cell", e}, {"support", x.top_above(x.t() - 1, e)}, {"generator", mat_json(s.basis(x.t() - 1, e))}});
  return {{"field", field_json(s.field())}, {"dims", dims}, {"local_codes", codes}};
}

json css_json(const CSSCode& c) {
  return {{"n", c.n}, {"m_x", c.hx.rows()}, {"m_z", c.hz.rows()}, {"k", c.k}, {"level", c.level},
          {"field", field_json(c.field)}};
}

json distance_json(const DistanceReport& r) {
  auto side = [](const SideDistance& s) {
    return json{{"side", std::string(1, s.side)}, {"exact", s.exact}, {"weight", weight_json(s.weight)}};
  };
  json j{{"d_upper", weight_json(r.d_upper)},
         {"d_exact", r.d_exact ? weight_json(*r.d_exact) : json(nullptr)},
         {"min_side", std::string(1, r.min_side)},
         {"x", side(r.x)},
         {"z", side(r.z)},
         {"seed", r.seed},
         {"samples", r.samples},
         {"weight", "nonzero field entries"}};
  return j;
}

json axiom_json(const AxiomReport& r) {
  return {{"pass", r.ok()}, {"cells_checked", r.cells_checked}, {"failures", findings_json(r.failures)}};
}

json h0ht_json(const H0HtReport& r) {
  return {{"pass", r.ok()},
          {"dim_ht", r.dim_ht},
          {"dim_h0_dual", r.dim_h0_dual},
          {"dim_sections", r.dim_sections},
          {"ht_is_sections", r.ht_is_sections},
          {"h0_onto_sections", r.h0_onto_sections}};
}

json duality_json(const DualityReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) pairs.push_back({{"i", p.i}, {"dim_h_t_minus_i", p.homology}, {"dim_h_i_dual", p.dual_cohomology}});
  return {{"status", to_string(r.status)},
          {"locally_acyclic", r.locally_acyclic},
          {"pairs", pairs},
          {"mismatched", r.mismatched}};
}

json exactness_json(const ExactnessReport& r) {
  return {{"pass", r.ok()},
          {"vertex_chains", r.vertex_chains},
          {"gluing", r.gluing},
          {"local_injective", r.local_injective},
          {"top_identification", r.top_identification},
          {"dual_kernel", r.dual_kernel},
          {"long_sequence", r.long_sequence},
          {"findings", findings_json(r.findings)}};
}

json leibniz_json(const LeibnizReport& r) {
  return {{"pass", r.ok()},
          {"trials", r.trials},
          {"failures", r.failures},
          {"witness_cell", r.witness_cell ? json(*r.witness_cell) : json(nullptr)}};
}

json certification_json(const CertificationReport& r) {
  json fails = json::array();
  for (const auto& w : r.failures) {
    fails.push_back({{"trial", w.trial},
                     {"trial_seed", w.trial_seed},
                     {"zeta", w.zeta},
                     {"beta", w.beta},
                     {"f_zeta", w.base},
                     {"f_zeta_plus_beta", w.shifted}});
  }
  return {{"pass", r.ok()}, {"form", r.form},       {"trials", r.trials},
          {"passed", r.passed}, {"seed", r.seed}, {"failure_count", r.failure_count},
          {"witnesses", fails}};
}

json subrank_json(const SubrankBound& b) {
  json maps = json::array();
  for (const auto& m : b.maps) maps.push_back(mat_json(m));
  return {{"r", b.r}, {"exact", b.exact}, {"verified", b.verified}, {"maps", maps}};
}

}  // namespace sheafccz
