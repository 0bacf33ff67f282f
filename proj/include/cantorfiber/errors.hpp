#pragma once

#include <stdexcept>
#include <string>

namespace cantorfiber {

/// Rejected input: out-of-domain scalar, malformed coding text, etc.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured node/size budget was exceeded.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Working precision is insufficient to certify the requested result.
class precision_error : public std::runtime_error {
 public:
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cantorfiber
