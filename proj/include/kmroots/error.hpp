#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kmroots {

// Domain error carrying a stable machine-readable code ("NotGCM",
// "EmptySubset", ...). The CLI maps these to error JSON and exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& what) {
  throw Error(std::move(code), what);
}

inline void require(bool cond, const char* code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace kmroots
