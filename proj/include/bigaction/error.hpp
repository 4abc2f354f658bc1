// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bigaction {

// Every failure the library reports carries a short machine-readable kind
// ("NotInImage", "ConstraintViolated", ...) plus a human message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace bigaction
