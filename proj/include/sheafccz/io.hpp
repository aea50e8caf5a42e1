#pragma once

// Run configuration (JSON, "schema": 1), instance construction from a
// config, JSON views of the module reports, and alist export.

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sheafccz/ccz.hpp"
#include "sheafccz/chain.hpp"
#include "sheafccz/duality.hpp"

namespace sheafccz {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// A local code given by name ("rep", "rs:2", ...) or by explicit generator rows.
struct CodeSpec {
  std::string name;
  std::vector<std::vector<std::uint32_t>> generator;
  LinCode resolve(const Field& f, std::size_t length) const;
};

struct SheafSpec {
  enum class Kind { Constant, LocalCodes, Tensor };
  Kind kind = Kind::Constant;
  /// LocalCodes: one entry (same code everywhere) or one per direction of a
  /// cubical complex. Tensor: one per direction.
  std::vector<CodeSpec> codes;
};

struct CCZSpec {
  enum class Form { Cubical, Simplicial };
  Form form = Form::Cubical;
  std::array<unsigned, 3> levels{1, 1, 1};
  std::vector<SheafSpec> sheaves;  // empty: the main sheaf three times
};

struct RunConfig {
  std::string name;
  unsigned field_r = 1;
  json complex;  // validated source description, see load_complex
  SheafSpec sheaf;
  unsigned level = 1;
  std::optional<CCZSpec> ccz;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  DistanceBudget distance;
  SubrankBudget subrank;
  std::filesystem::path base_dir;  // relative file references resolve here
};

/// Throws ConfigError with the offending key on any schema violation.
RunConfig parse_config(const json& j, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Complex from {"type": "catalog" | "cubical" | "shifts" | "simplicial", ...}.
CellComplex load_complex(const json& spec, const std::filesystem::path& base_dir = {});
Sheaf build_sheaf(ComplexPtr x, const Field& f, const SheafSpec& spec);

struct Instance {
  Field field;
  ComplexPtr complex;
  SheafPtr sheaf;
  std::shared_ptr<const CochainComplex> cochains;
};
Instance build_instance(const RunConfig& cfg);
/// CCZ code described by cfg.ccz on the instance's complex.
CCZCode build_ccz(const RunConfig& cfg, const Instance& inst);

/// Sparse matrix in alist form: header, column and row weights, then the
/// nonzero positions (1-based) per column and per row. Nonbinary values
/// follow each position as "pos:value".
void write_alist(std::ostream& os, const SpMat& m);

json field_json(const Field& f);
json complex_json(const CellComplex& x);
json sheaf_json(const Sheaf& s);
json css_json(const CSSCode& c);
json distance_json(const DistanceReport& r);
json axiom_json(const AxiomReport& r);
json h0ht_json(const H0HtReport& r);
json duality_json(const DualityReport& r);
json exactness_json(const ExactnessReport& r);
json leibniz_json(const LeibnizReport& r);
json certification_json(const CertificationReport& r);
json subrank_json(const SubrankBound& b);

}  // namespace sheafccz
