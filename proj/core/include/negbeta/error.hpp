#pragma once

#include <stdexcept>
#include <string>

namespace negbeta {

// Machine-readable reason attached to every library error. The CLI maps the
// category onto its exit code.
enum class ErrorCategory {
  domain,         // malformed input or a precondition the caller violated
  undecidable,    // a floor or comparison could not be settled within budget
  inconclusive,   // a bounded search ran out of room without an answer
  resource,       // requested size exceeds a hard limit
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string reason, const std::string& message)
      : std::runtime_error(message), category_(category), reason_(std::move(reason)) {}

  ErrorCategory category() const noexcept { return category_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  ErrorCategory category_;
  std::string reason_;
};

inline Error domain_error(std::string reason, const std::string& message) {
  return Error(ErrorCategory::domain, std::move(reason), message);
}

inline Error undecidable_error(const std::string& message) {
  return Error(ErrorCategory::undecidable, "undecidable-at-precision", message);
}

inline Error inconclusive_error(const std::string& message) {
  return Error(ErrorCategory::inconclusive, "search-inconclusive", message);
}

inline Error resource_error(const std::string& message) {
  return Error(ErrorCategory::resource, "resource-limit", message);
}

// Internal consistency checks between independent computation routes. They
// stay enabled in release builds unless NEGBETA_NO_INTERNAL_CHECKS is set.
#ifndef NEGBETA_NO_INTERNAL_CHECKS
#define NEGBETA_CHECK(cond, msg)                                       \
  do {                                                                 \
    if (!(cond)) throw std::logic_error(std::string("negbeta: ") + (msg)); \
  } while (0)
#else
#define NEGBETA_CHECK(cond, msg) \
  do {                           \
  } while (0)
#endif

}  // namespace negbeta
