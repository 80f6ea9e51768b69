#pragma once

#include <string>
#include <vector>

namespace hopftwist {

struct Check {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string witness;  // nonempty whenever pass is false
};

/// Outcome of a verifier: a list of named checks. A failing check always
/// carries a witness locating the broken identity.
class Report {
 public:
  void add(std::string name, bool pass, std::string witness = {});
  void addSkipped(std::string name);
  void merge(const std::string& prefix, const Report& other);
  bool pass() const;
  const Check* firstFailure() const;
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace hopftwist
