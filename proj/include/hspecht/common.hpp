#ifndef HSPECHT_COMMON_HPP
#define HSPECHT_COMMON_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hspecht {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an argument violates a documented precondition or fails to parse.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a configured size bound (group order, degree, ...) is exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact computation contradicted a structural claim at a concrete instance.
/// `instance` identifies the inputs precisely enough to re-run them in isolation.
class Falsification : public std::runtime_error {
 public:
  Falsification(std::string check, std::string instance, std::string witness)
      : std::runtime_error(check + " failed at " + instance + ": " + witness),
        check_(std::move(check)),
        instance_(std::move(instance)),
        witness_(std::move(witness)) {}

  const std::string& check() const noexcept { return check_; }
  const std::string& instance() const noexcept { return instance_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string check_;
  std::string instance_;
  std::string witness_;
};

// Canonical text for a rational: "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// num/den in lowest terms (mpq_class does not reduce on construction).
inline Rational fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text);

}  // namespace hspecht

#endif
