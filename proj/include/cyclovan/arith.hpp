#pragma once

#include <gmpxx.h>

#include <vector>

#include "cyclovan/errors.hpp"

namespace cyclovan {

struct PrimePower {
  long prime;
  int exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Exact prime factorization by trial division, smallest prime first.
/// Returns the empty list for n = 1 and rejects n < 1.
std::vector<PrimePower> factorize(long n);

/// A positive integer together with its prime factorization.
///
/// All derived quantities (totient, radical, squarefree cofactor) are read
/// off the cached factorization, so a Modulus is cheap to pass around and
/// query repeatedly.
class Modulus {
 public:
  explicit Modulus(long n) : n_(n), factors_(factorize(n)) {}

  long value() const { return n_; }
  const std::vector<PrimePower>& factorization() const { return factors_; }

  /// Euler's totient.
  long totient() const;

  /// Product of the distinct prime factors; rad(1) = 1.
  long radical() const;

  /// n / rad(n).
  long radical_cofactor() const { return n_ / radical(); }

  /// Moebius function: 0 unless squarefree, otherwise (-1)^(#primes).
  int moebius() const;

  bool squarefree() const;
  bool is_prime() const { return factors_.size() == 1 && factors_[0].exponent == 1; }

  /// p when n = p^k with k >= 1, otherwise 0.
  long prime_power_base() const {
    return factors_.size() == 1 ? factors_[0].prime : 0;
  }

 private:
  long n_;
  std::vector<PrimePower> factors_;
};

long euler_phi(const Modulus& n);
int moebius(const Modulus& n);
long radical(const Modulus& n);

/// All divisors of n, ascending.
std::vector<long> divisors(const Modulus& n);

/// The phi(n) integers a in [1, n] with gcd(a, n) = 1, strictly ascending.
/// This is the canonical ordering of the primitive n-th roots of unity used
/// throughout: the i-th root is exp(2*pi*I * a_i / n).
std::vector<long> coprime_residues(const Modulus& n);

/// Dense integer polynomial; coefficients in ascending degree order with no
/// trailing zeros (the zero polynomial has an empty coefficient vector).
struct IntPolynomial {
  std::vector<mpz_class> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  mpz_class coeff(long k) const {
    return (k >= 0 && k < static_cast<long>(coeffs.size())) ? coeffs[k]
                                                            : mpz_class(0);
  }

  bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient num / den; throws ExactDivisionError if den does not
/// divide num (nonzero remainder or inexact leading-coefficient division).
IntPolynomial poly_div_exact(const IntPolynomial& num, const IntPolynomial& den);

/// The n-th cyclotomic polynomial: monic, integer coefficients, degree
/// phi(n). Computed by exact division
///     Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
/// with the recursion memoized process-wide (safe for concurrent callers).
IntPolynomial cyclotomic_poly(const Modulus& n);

}  // namespace cyclovan
