#pragma once

#include <stdexcept>
#include <string>

namespace atlink {

// Input that violates the graph schema or a structural invariant.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated preconditions.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A certificate assertion failed while the certificate was being built,
// or a stored certificate does not fit the link it is checked against.
struct CertificateError : std::runtime_error {
  explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace atlink
