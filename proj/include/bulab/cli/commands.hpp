#pragma once

#include <string>

#include "json.hpp"

#include "bulab/sphere/finite_order_map.hpp"

namespace bulab::cli {

// One experiment run. `document` is {config, results, meta}; config and
// results are byte-identical across runs of the same config (timing and
// versions live in meta). `csv` carries the plot-ready rows.
struct RunReport {
  nlohmann::json document;
  std::string csv;
  int exit_code = 0;
};

// Zero certificates for symmetrized functions over a seed list or a single
// supplied expression. Exit 1 when any certificate fails.
RunReport cmd_borsuk(const nlohmann::json& config);

// Grading decomposition checks plus the hull-of-spectrum test on powers of
// every nontrivial homogeneous component.
RunReport cmd_grade(const nlohmann::json& config);

// Partition/grading checks for the free group and truncated norm sweeps.
RunReport cmd_freegroup(const nlohmann::json& config);

sphere::FiniteOrderMap map_from_config(const nlohmann::json& map_spec);
std::string map_name(const nlohmann::json& map_spec);

}  // namespace bulab::cli
