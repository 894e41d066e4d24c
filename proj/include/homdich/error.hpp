#pragma once

#include <stdexcept>
#include <string>

namespace homdich {

// Categories drive the CLI exit codes: Parse -> 2, Contract -> 3, Budget -> 4.
enum class ErrorKind {
  Parse,
  Contract,
  Shape,
  Budget,
  Precision,
  IllConditioned,
  DegenerateNode,
  OrderBound,
  ZeroConstantTerm,
  EmptyDomain,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Contract: return "contract";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::IllConditioned: return "ill-conditioned";
    case ErrorKind::DegenerateNode: return "degenerate-node";
    case ErrorKind::OrderBound: return "order-bound";
    case ErrorKind::ZeroConstantTerm: return "zero-constant-term";
    case ErrorKind::EmptyDomain: return "empty-domain";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace homdich
