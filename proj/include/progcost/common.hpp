// Shared error types and exact-integer helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace progcost {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when caller-supplied parameters violate an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal cross-check fails (bound violated, oracle
/// mismatch, optimizer stagnation, non-convergence).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// log2 of a positive big integer, accurate to double rounding.
double log2_big(const BigInt& value);

/// Exact binomial coefficient C(n, k).
BigInt binomial(long long n, long long k);

/// A bound evaluation; `vacuous` marks values that carry no information
/// (negative costs, fidelity bounds below zero, log arguments <= 1).
struct BoundValue {
  double value = 0.0;
  bool vacuous = false;
};

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace progcost
