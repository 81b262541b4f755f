#pragma once

#include <optional>
#include <string_view>
#include <vector>

// Reference summary tables shipped with the library (also under data/).

namespace sizebias::bundled {

/// Names accepted by summary_csv, e.g. "ukraine_2019".
std::vector<std::string_view> names();

/// CSV text of a bundled summary table, nullopt for an unknown name.
std::optional<std::string_view> summary_csv(std::string_view name);

}  // namespace sizebias::bundled
