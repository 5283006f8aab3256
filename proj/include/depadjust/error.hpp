#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace depadjust {

// Library error with a stable machine-readable code ("empty-sample",
// "degenerate-variance", ...) alongside the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail = "")
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

}  // namespace depadjust
