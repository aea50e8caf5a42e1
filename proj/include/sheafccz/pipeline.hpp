#pragma once

// build / verify / params as library calls returning JSON. The CLI and the
// Python module are thin wrappers around these.

#include <filesystem>
#include <string>
#include <vector>

#include "sheafccz/io.hpp"

namespace sheafccz {

/// {cells, cochain_dims, n, k} for the configured level.
json build_summary(const RunConfig& cfg, const Instance& inst);
/// complex.json, sheaf.json, code.json, hx.alist, hz.alist and, with a CCZ
/// section, gates.txt.
void write_artifacts(const RunConfig& cfg, const Instance& inst, const std::filesystem::path& dir);

/// dd-zero, axioms, acyclic, poincare, leibniz, ccz.
const std::vector<std::string>& suite_names();
/// One suite's report; always has a boolean "pass". Throws ConfigError for an
/// unknown suite name.
json run_suite(const RunConfig& cfg, const Instance& inst, const std::string& suite);
/// Every suite for "all", otherwise one; {"schema", "name", "seed", "trials",
/// "suites", "pass"}.
json run_verify(const RunConfig& cfg, const Instance& inst, const std::string& suite);

/// {n, k, d_exact, d_upper, n_ccz, w_ccz, k_ccz_lb, gamma_estimate}; each
/// field is {"value", "provenance"} with provenance exact | bound | uncertified.
json compute_params(const RunConfig& cfg, const Instance& inst);

}  // namespace sheafccz
