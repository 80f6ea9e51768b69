#include "hopftwist/report.hpp"

#include <utility>

namespace hopftwist {

void Report::add(std::string name, bool pass, std::string witness) {
  checks_.push_back(Check{std::move(name), pass, false, pass ? std::string{} : std::move(witness)});
}

void Report::addSkipped(std::string name) {
  checks_.push_back(Check{std::move(name), true, true, {}});
}

void Report::merge(const std::string& prefix, const Report& other) {
  for (const Check& c : other.checks_) {
    Check copy = c;
    copy.name = prefix.empty() ? c.name : prefix + "/" + c.name;
    checks_.push_back(std::move(copy));
  }
}

bool Report::pass() const {
  for (const Check& c : checks_)
    if (!c.skipped && !c.pass) return false;
  return true;
}

const Check* Report::firstFailure() const {
  for (const Check& c : checks_)
    if (!c.skipped && !c.pass) return &c;
  return nullptr;
}

}  // namespace hopftwist
