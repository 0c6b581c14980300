#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schurasym/exact.hpp"
#include "schurasym/weights.hpp"

namespace schurasym {

/// Malformed or inconsistent campaign configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MomentSettings {
  ExactValue kappa;
  std::vector<std::pair<std::size_t, ExactValue>> y_weights;  // 1-based I_2 indices
  int p_max = 4;
};

enum class OutputFormat { csv, json };

/// Parsed campaign configuration. Which fields are mandatory depends on the
/// campaign; use the require_* helpers before running one.
///
/// JSON layout (rationals are "p/q" strings, complex values ["re","im"]):
///   {
///     "spectrum": {"values": ["2","1"], "densities": ["1/2","1/2"]},
///     "m": 2, "alpha1": "2", "perturbations": ["5/2"],
///     "N_list": [8, 16, 32, 64],
///     "moments": {"kappa": "1/2", "y": {"1": "1"}, "p_max": 4},
///     "seed": 1, "output": "out.csv", "format": "csv"
///   }
struct CampaignConfig {
  std::optional<WeightSpectrum> spectrum;
  int m = 1;
  std::optional<ExactValue> alpha1;
  std::vector<GaussianRational> perturbations;
  std::vector<std::int64_t> n_list;
  std::optional<MomentSettings> moments;
  std::uint64_t seed = 1;
  std::string output_path;
  std::optional<OutputFormat> format;
  nlohmann::json source;

  std::size_t k() const { return perturbations.size(); }

  /// spectrum, alpha1 > m-1, a strictly increasing N ladder with
  /// k <= min N and n <= min N.
  void require_theorem_fields() const;
  /// spectrum and the moment block.
  void require_moment_fields() const;
};

CampaignConfig parse_config(const nlohmann::json& j);
CampaignConfig load_config(const std::string& path);

OutputFormat parse_format(const std::string& name);

}  // namespace schurasym
