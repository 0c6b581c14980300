// Command-line driver for the verification campaigns.
//
//   schurasym verify-t17 --config cfg.json [--out report.csv] [--format csv|json] [--jobs 4]
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "schurasym/campaigns.hpp"
#include "schurasym/config.hpp"
#include "schurasym/report.hpp"

namespace {

using namespace schurasym;

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format;
  unsigned jobs = 1;
};

struct Outcome {
  std::string text;
  bool passed = false;
};

using Campaign = std::function<Outcome(const CampaignConfig&, OutputFormat, unsigned)>;

const std::map<std::string, std::pair<Campaign, OutputFormat>>& campaigns() {
  static const std::map<std::string, std::pair<Campaign, OutputFormat>> table = {
      {"verify-t17",
       {[](const CampaignConfig& c, OutputFormat f, unsigned jobs) {
          auto r = verify_t17(c, jobs);
          return Outcome{render(r, c, f), r.passed()};
        },
        OutputFormat::csv}},
      {"compare-p28",
       {[](const CampaignConfig& c, OutputFormat f, unsigned jobs) {
          auto r = compare_p28(c, jobs);
          return Outcome{render(r, c, f), r.passed()};
        },
        OutputFormat::csv}},
      {"verify-pp1",
       {[](const CampaignConfig& c, OutputFormat f, unsigned jobs) {
          auto r = verify_pp1(c, jobs);
          return Outcome{render(r, c, f), r.passed()};
        },
        OutputFormat::csv}},
      {"moments",
       {[](const CampaignConfig& c, OutputFormat f, unsigned) {
          auto r = run_moments(c);
          return Outcome{render(r, c, f), r.passed};
        },
        OutputFormat::csv}},
      {"verify-identities",
       {[](const CampaignConfig& c, OutputFormat f, unsigned) {
          auto r = verify_identities(c);
          return Outcome{render(r, c, f), r.passed()};
        },
        OutputFormat::json}},
  };
  return table;
}

int run(const std::string& name, const Options& opt) {
  const auto& [campaign, default_format] = campaigns().at(name);
  CampaignConfig config;
  OutputFormat format = default_format;
  try {
    config = load_config(opt.config_path);
    if (config.format) format = *config.format;
    if (!opt.format.empty()) format = parse_format(opt.format);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  Outcome outcome;
  try {
    outcome = campaign(config, format, opt.jobs);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << name << " failed: " << e.what() << "\n";
    return 1;
  }

  const std::string& out = opt.out_path.empty() ? config.output_path : opt.out_path;
  if (out.empty()) {
    std::cout << outcome.text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write '" << out << "'\n";
      return 2;
    }
    file << outcome.text;
  }
  if (!outcome.passed) std::cerr << name << ": checks failed\n";
  return outcome.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schur polynomial ratios against their asymptotic limits"};
  app.require_subcommand(1);

  std::map<std::string, Options> options;
  for (const auto& [name, entry] : campaigns()) {
    auto& opt = options[name];
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", opt.config_path, "campaign config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_path, "output path (default: config \"output\" or stdout)");
    sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--jobs", opt.jobs, "threads for independent rows")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (const auto* sub : app.get_subcommands()) return run(sub->get_name(), options[sub->get_name()]);
  return 2;
}
