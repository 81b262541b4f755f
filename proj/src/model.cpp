#include "sizebias/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "sizebias/error.hpp"

namespace sizebias {

std::uint64_t HIndexWorkspace::operator()(std::span<const Citations> citations) {
    const std::size_t n = citations.size();
    if (n == 0) return 0;

    // buckets_[c] counts papers with exactly c citations, c capped at n.
    buckets_.assign(n + 1, 0);
    for (Citations c : citations) {
        ++buckets_[static_cast<std::size_t>(std::min<Citations>(c, n))];
    }

    std::uint64_t at_least = 0;
    for (std::size_t h = n; h > 0; --h) {
        at_least += buckets_[h];
        if (at_least >= h) return h;
    }
    return 0;
}

std::uint64_t h_index(std::span<const Citations> citations) {
    HIndexWorkspace ws;
    return ws(citations);
}

Unit::Unit(std::string id, std::string name, std::vector<Citations> citations)
    : id_(std::move(id)), name_(std::move(name)), citations_(std::move(citations)) {}

std::uint64_t productivity(const Unit& unit) noexcept { return unit.citations().size(); }

std::uint64_t group_h_index(const Unit& unit) { return h_index(unit.citations()); }

Dataset::Dataset(std::string name, std::vector<Unit> units)
    : name_(std::move(name)), units_(std::move(units)) {
    if (units_.empty()) throw ConfigError("dataset '" + name_ + "' has no units");
    std::unordered_set<std::string> seen;
    for (const auto& u : units_) {
        if (!seen.insert(u.id()).second) {
            throw ConfigError("duplicate unit id '" + u.id() + "' in dataset '" + name_ + "'");
        }
    }
}

std::vector<std::uint64_t> Dataset::productivities() const {
    std::vector<std::uint64_t> out;
    out.reserve(units_.size());
    for (const auto& u : units_) out.push_back(productivity(u));
    return out;
}

std::uint64_t Dataset::pool_size() const noexcept {
    std::uint64_t total = 0;
    for (const auto& u : units_) total += productivity(u);
    return total;
}

}  // namespace sizebias
