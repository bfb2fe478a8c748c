#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfister {

enum class ErrorCode {
  kDomain,
  kUnsupported,
  kParse,
  kFactorBound,
  kInternal,
};

// Base of every exception thrown by the library. The C API maps each code to
// a pf_status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::kDomain, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what)
      : Error(ErrorCode::kUnsupported, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::kParse,
              what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class FactorBoundError : public Error {
 public:
  explicit FactorBoundError(const std::string& what)
      : Error(ErrorCode::kFactorBound, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCode::kInternal, what) {}
};

}  // namespace pfister
