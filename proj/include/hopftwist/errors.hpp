#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopftwist {

// Invalid input or a violated precondition. The CLI maps this to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A square exact system turned out rank-deficient; carries the rank found.
class SingularError : public Error {
 public:
  SingularError(const std::string& what, std::int64_t rank)
      : Error(what), rank_(rank) {}
  std::int64_t rank() const { return rank_; }

 private:
  std::int64_t rank_;
};

}  // namespace hopftwist
