#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sizebias {

// Invalid numeric argument (r > n, k > K, alpha outside (0,1), ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Inconsistent inputs to a computation (size mismatch, too few replicates).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The power-law fit cannot be formed from the supplied points.
class FitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bad command-line usage; maps to exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct IngestIssue {
    std::size_t line = 0;  // 1-based, 0 when not tied to a line
    std::string message;
};

// Malformed input file. Carries every offending line, not just the first.
class IngestError : public std::runtime_error {
  public:
    IngestError(std::string source, std::vector<IngestIssue> issues);

    const std::string& source() const noexcept { return source_; }
    const std::vector<IngestIssue>& issues() const noexcept { return issues_; }

  private:
    std::string source_;
    std::vector<IngestIssue> issues_;
};

}  // namespace sizebias
