#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sizebias {

/// Citation count of one publication.
using Citations = std::uint64_t;

/// Largest h such that at least h of the counts are >= h.
///
/// Counting pass with buckets capped at n, linear in the input size.
/// Empty input yields 0.
std::uint64_t h_index(std::span<const Citations> citations);

/// Reusable bucket storage for repeated h-index evaluation in hot loops.
/// Not thread-safe; give each worker its own.
class HIndexWorkspace {
  public:
    std::uint64_t operator()(std::span<const Citations> citations);

  private:
    std::vector<std::uint32_t> buckets_;
};

/// A research unit (institution, department, group) and the citation counts
/// of its publications, one entry per publication. Duplicates are distinct
/// publications.
class Unit {
  public:
    Unit(std::string id, std::string name, std::vector<Citations> citations);

    const std::string& id() const noexcept { return id_; }
    const std::string& name() const noexcept { return name_; }
    std::span<const Citations> citations() const noexcept { return citations_; }

  private:
    std::string id_;
    std::string name_;
    std::vector<Citations> citations_;
};

/// Number of publications attributed to the unit.
std::uint64_t productivity(const Unit& unit) noexcept;

/// h-index over the unit's pooled publications.
std::uint64_t group_h_index(const Unit& unit);

/// Named, ordered collection of units with unique ids. Never empty.
class Dataset {
  public:
    Dataset(std::string name, std::vector<Unit> units);

    const std::string& name() const noexcept { return name_; }
    std::span<const Unit> units() const noexcept { return units_; }
    std::size_t size() const noexcept { return units_.size(); }
    const Unit& operator[](std::size_t i) const { return units_.at(i); }

    std::vector<std::uint64_t> productivities() const;
    std::uint64_t pool_size() const noexcept;

  private:
    std::string name_;
    std::vector<Unit> units_;
};

}  // namespace sizebias
