#include "schurasym/config.hpp"

#include <fstream>

namespace schurasym {

namespace {

ExactValue rational_field(const nlohmann::json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return ExactValue(mpz_class(std::to_string(v.get<std::int64_t>())));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
  throw ConfigError(where + ": expected a rational as a \"p/q\" string");
}

GaussianRational complex_field(const nlohmann::json& v, const std::string& where) {
  if (v.is_array()) {
    if (v.size() != 2) throw ConfigError(where + ": complex values are [\"re\",\"im\"] pairs");
    return {rational_field(v[0], where + ".re"), rational_field(v[1], where + ".im")};
  }
  return {rational_field(v, where), 0};
}

template <class T>
T integer_field(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
  return v.get<T>();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
}

CampaignConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  CampaignConfig c;
  c.source = j;

  if (j.contains("m")) c.m = integer_field<int>(j["m"], "m");
  if (c.m < 1) throw ConfigError("m must be >= 1");

  if (j.contains("spectrum")) {
    const auto& s = j["spectrum"];
    if (!s.is_object() || !s.contains("values") || !s.contains("densities"))
      throw ConfigError("spectrum needs \"values\" and \"densities\"");
    std::vector<ExactValue> values;
    std::vector<ExactValue> densities;
    for (std::size_t i = 0; i < s["values"].size(); ++i)
      values.push_back(rational_field(s["values"][i], "spectrum.values[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < s["densities"].size(); ++i)
      densities.push_back(
          rational_field(s["densities"][i], "spectrum.densities[" + std::to_string(i) + "]"));
    try {
      c.spectrum = WeightSpectrum::create(std::move(values), std::move(densities));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("spectrum: ") + e.what());
    }
  }

  if (j.contains("alpha1")) c.alpha1 = rational_field(j["alpha1"], "alpha1");

  if (j.contains("perturbations")) {
    const auto& p = j["perturbations"];
    if (!p.is_array()) throw ConfigError("perturbations must be an array");
    for (std::size_t i = 0; i < p.size(); ++i)
      c.perturbations.push_back(complex_field(p[i], "perturbations[" + std::to_string(i) + "]"));
  }

  if (j.contains("N_list")) {
    const auto& n = j["N_list"];
    if (!n.is_array()) throw ConfigError("N_list must be an array");
    for (std::size_t i = 0; i < n.size(); ++i) {
      auto N = integer_field<std::int64_t>(n[i], "N_list[" + std::to_string(i) + "]");
      if (N < 1) throw ConfigError("N_list entries must be positive");
      if (!c.n_list.empty() && N <= c.n_list.back())
        throw ConfigError("N_list must be strictly increasing");
      c.n_list.push_back(N);
    }
  }

  if (j.contains("moments")) {
    const auto& mo = j["moments"];
    if (!mo.is_object() || !mo.contains("kappa")) throw ConfigError("moments needs \"kappa\"");
    MomentSettings ms;
    ms.kappa = rational_field(mo["kappa"], "moments.kappa");
    if (!(sgn(ms.kappa) > 0 && ms.kappa < 1)) throw ConfigError("moments.kappa must lie in (0,1)");
    if (mo.contains("p_max")) ms.p_max = integer_field<int>(mo["p_max"], "moments.p_max");
    if (ms.p_max < 0) throw ConfigError("moments.p_max must be >= 0");
    if (mo.contains("y")) {
      const auto& y = mo["y"];
      if (!y.is_object()) throw ConfigError("moments.y maps I_2 indices to weights");
      for (auto it = y.begin(); it != y.end(); ++it) {
        std::size_t idx = 0;
        try {
          idx = std::stoul(it.key());
        } catch (const std::exception&) {
          throw ConfigError("moments.y key '" + it.key() + "' is not an index");
        }
        ExactValue w = rational_field(it.value(), "moments.y[" + it.key() + "]");
        if (sgn(w) <= 0) throw ConfigError("moments.y weights must be positive");
        ms.y_weights.emplace_back(idx, w);
      }
    }
    c.moments = std::move(ms);
  }

  if (j.contains("seed")) c.seed = integer_field<std::uint64_t>(j["seed"], "seed");
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw ConfigError("output must be a path string");
    c.output_path = j["output"].get<std::string>();
  }
  if (j.contains("format")) {
    if (!j["format"].is_string()) throw ConfigError("format must be a string");
    c.format = parse_format(j["format"].get<std::string>());
  }
  return c;
}

CampaignConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

void CampaignConfig::require_theorem_fields() const {
  if (!spectrum) throw ConfigError("campaign needs a spectrum");
  if (!alpha1) throw ConfigError("campaign needs alpha1");
  if (!(*alpha1 > m - 1))
    throw ConfigError("alpha1 = " + to_string(*alpha1) + " must exceed m-1 = " +
                      std::to_string(m - 1));
  if (n_list.empty()) throw ConfigError("campaign needs a non-empty N_list");
  if (k() > static_cast<std::size_t>(n_list.front()))
    throw ConfigError("k = " + std::to_string(k()) + " exceeds the smallest N");
  if (spectrum->size() > static_cast<std::size_t>(n_list.front()))
    throw ConfigError("smallest N is below the number of spectrum values");
}

void CampaignConfig::require_moment_fields() const {
  if (!spectrum) throw ConfigError("moment campaign needs a spectrum");
  if (!moments) throw ConfigError("moment campaign needs a \"moments\" block");
  for (const auto& [idx, y] : moments->y_weights)
    if (idx < 1 || idx > spectrum->size())
      throw ConfigError("moments.y index " + std::to_string(idx) + " outside 1..n");
}

}  // namespace schurasym
