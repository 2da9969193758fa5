#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfsplit/subspace.hpp"

namespace hopfsplit {

/// Where two sides of an identity differ: a basis vector of the domain and a
/// coordinate of the codomain, with the two scalar values found there.
struct Witness {
  std::size_t col = 0;
  std::size_t row = 0;
  std::vector<std::size_t> domain_index;
  std::vector<std::size_t> codomain_index;
  std::string input;
  std::string output;
  std::string lhs;
  std::string rhs;
  std::string detail;

  std::string str() const;
  /// A witness carrying only a description.
  static Witness about(std::string detail) {
    Witness w;
    w.detail = std::move(detail);
    return w;
  }
};

struct Check {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
  /// Recorded for comparison only; does not affect all_passed().
  bool informational = false;
  std::string note;
};

class VerificationReport {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(const std::string& name, bool passed, const std::string& detail = "");
  /// Appends other's checks with names prefixed by `prefix`.
  void merge(const VerificationReport& other, const std::string& prefix = "");

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t size() const { return checks_.size(); }
  bool all_passed() const;
  std::size_t failures() const;
  const Check* find(const std::string& name) const;
  /// True iff a check with that name exists and passed.
  bool passed(const std::string& name) const;
  const Check* first_failure() const;

  std::string text() const;
  std::string json(int indent = 2) const;

 private:
  std::vector<Check> checks_;
};

/// Thrown when an operation needs verified input and verification failed.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, VerificationReport report)
      : Error(what + describe(report)), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  static std::string describe(const VerificationReport& r);
  VerificationReport report_;
};

/// lhs == rhs as linear maps; a failure carries the first differing entry.
template <class S>
Check compare_maps(const std::string& name, const LinMap<S>& lhs, const LinMap<S>& rhs);

template <class S>
Check compare_subspaces(const std::string& name, const Subspace<S>& lhs, const Subspace<S>& rhs);

}  // namespace hopfsplit
