#pragma once

#include <optional>
#include <string>

#include "schurasym/campaigns.hpp"
#include "schurasym/config.hpp"

namespace schurasym {

/// "%.15g", the precision used in every CSV/JSON cell.
std::string format_number(double v);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

// CSV output starts with '#' lines naming the campaign and echoing the
// config, then a header row and one row per N (or p); a trailing '#' summary
// line closes the table. JSON output carries the same content.

std::string render(const ConvergenceReport& report, const CampaignConfig& config, OutputFormat f);
std::string render(const P28Report& report, const CampaignConfig& config, OutputFormat f);
std::string render(const PP1Report& report, const CampaignConfig& config, OutputFormat f);
std::string render(const MomentReport& report, const CampaignConfig& config, OutputFormat f);
std::string render(const IdentityReport& report, const CampaignConfig& config, OutputFormat f);

}  // namespace schurasym
