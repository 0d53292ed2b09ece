#pragma once

#include <string>
#include <vector>

namespace nsymkit {

struct Check {
  std::string suite;
  std::string name;  // the identity being evaluated
  int n = 0;
  bool passed = false;
  std::string detail;  // first offending entry on failure
  // A known misprint reproduced verbatim. Reported, but does not decide Report::passed().
  bool printed_erratum = false;
};

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void merge(const Report& other);

  const std::vector<Check>& checks() const { return checks_; }
  // True iff every check except reproduced misprints passed.
  bool passed() const;
  // True iff every check passed, misprints included.
  bool all_passed() const;
  std::size_t failures(bool include_errata = false) const;

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace nsymkit
