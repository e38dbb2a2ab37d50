#pragma once

#include <stdexcept>
#include <string>

#include "dedekind/integer.hpp"

namespace dedekind {

/// Raised when two quantities that must be coprime share a factor.
/// Carries both operands and their greatest common divisor.
class NotCoprimeError : public std::invalid_argument {
 public:
  NotCoprimeError(Integer a, Integer b, Integer divisor, const std::string& what)
      : std::invalid_argument(what),
        a_(std::move(a)),
        b_(std::move(b)),
        divisor_(std::move(divisor)) {}

  const Integer& first() const noexcept { return a_; }
  const Integer& second() const noexcept { return b_; }
  const Integer& common_divisor() const noexcept { return divisor_; }

 private:
  Integer a_;
  Integer b_;
  Integer divisor_;
};

/// a has no inverse modulo n.
class NotInvertibleError : public NotCoprimeError {
 public:
  NotInvertibleError(Integer a, Integer n, Integer divisor);
};

/// Throws NotCoprimeError when gcd(a, n) != 1. `what` names the operation.
void require_coprime(const Integer& a, const Integer& n, std::string_view what);

/// Throws std::invalid_argument when n < 1.
void require_positive(const Integer& n, std::string_view what);

}  // namespace dedekind
