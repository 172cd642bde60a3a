#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcf/rational.hpp"

namespace qcf {

/// Argument outside the declared value range (x ∉ [n_x], y ∉ [n_y]).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Structurally malformed argument: duplicate antecedents, mismatched sizes.
class ContractError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured table cap.
class ResourceError : public std::runtime_error {
  public:
    ResourceError(const std::string& what, std::uint64_t cap)
        : std::runtime_error(what), cap_(cap) {}
    std::uint64_t cap() const noexcept { return cap_; }

  private:
    std::uint64_t cap_;
};

/// Conditioning on an event of probability zero.
class UndefinedConditionalError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The equality system {A p = b, p >= 0} is empty. `certificate` is a Farkas
/// vector y with y^T A >= 0 componentwise and y^T b < 0.
class InfeasibleError : public std::runtime_error {
  public:
    InfeasibleError(const std::string& what, std::vector<Rational> certificate)
        : std::runtime_error(what), certificate_(std::move(certificate)) {}
    const std::vector<Rational>& certificate() const noexcept { return certificate_; }

  private:
    std::vector<Rational> certificate_;
};

/// Matrix element extraction needs alpha_x * conj(alpha_x') != 0.
class ExtractionError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Measured statistics admit no distribution over functions.
class InconsistencyError : public std::runtime_error {
  public:
    InconsistencyError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

class UnsupportedError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input parsed but violates a model invariant.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qcf
