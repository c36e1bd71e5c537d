#pragma once

#include <gmpxx.h>

#include <vector>

#include "cyclovan/errors.hpp"
#include "cyclovan/matrices.hpp"

namespace cyclovan {

/// Square matrix of arbitrary-precision integers, row-major.
class BigIntMatrix {
 public:
  explicit BigIntMatrix(long size) : size_(size), entries_(size * size) {}

  static BigIntMatrix identity(long size) {
    BigIntMatrix id(size);
    for (long i = 0; i < size; ++i) id.at(i, i) = 1;
    return id;
  }

  long size() const { return size_; }

  mpz_class& at(long i, long j) { return entries_[i * size_ + j]; }
  const mpz_class& at(long i, long j) const { return entries_[i * size_ + j]; }

  mpz_class trace() const {
    mpz_class t = 0;
    for (long i = 0; i < size_; ++i) t += at(i, i);
    return t;
  }

  BigIntMatrix operator*(const BigIntMatrix& rhs) const;
  BigIntMatrix operator*(const mpz_class& scalar) const;
  bool operator==(const BigIntMatrix&) const = default;

 private:
  long size_;
  std::vector<mpz_class> entries_;
};

/// Densify a Gram matrix into exact integer form.
BigIntMatrix to_bigint(const GramMatrix& g);

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. Every intermediate division is checked; a nonzero remainder
/// raises ExactDivisionError (it would mean the elimination is broken).
mpz_class det_exact(BigIntMatrix m);

struct AdjugateDet {
  BigIntMatrix adjugate;
  mpz_class det;
};

/// Adjugate and determinant by one-pass fraction-free Gauss-Jordan
/// elimination on [M | I]: the left block ends as det * I and the right
/// block as adj(M). Requires all leading principal minors nonzero (true for
/// any positive definite matrix); throws SingularMatrixError otherwise.
AdjugateDet adjugate_det(const BigIntMatrix& m);

/// Exact Tr(G_n^-1) = Tr(adj(G_n)) / det(G_n) as a reduced rational.
mpq_class inverse_trace_exact(const Modulus& n);

/// The integer matrix n * G_n^-1, computed in exact rational arithmetic and
/// verified entrywise to be integral. A non-integral entry throws
/// NonIntegralError (it would falsify the integrality theorem; it is never
/// rounded).
BigIntMatrix scaled_inverse(const Modulus& n);

/// Table of the reductions of x^l modulo the n-th cyclotomic polynomial:
/// coeff(i, l) is the coefficient of x^i in (x^l mod Phi_n), for
/// 0 <= i < m = phi(n) and 0 <= l <= n. For l < m this is the Kronecker
/// delta [i == l]; column n repeats column 0 because z^n = 1 for every
/// primitive n-th root z.
class STable {
 public:
  STable(long n, long m) : n_(n), m_(m), values_(m * (n + 1)) {}

  long modulus() const { return n_; }
  long rows() const { return m_; }

  mpz_class& coeff(long i, long l) { return values_[i * (n_ + 1) + l]; }
  const mpz_class& coeff(long i, long l) const {
    return values_[i * (n_ + 1) + l];
  }

 private:
  long n_, m_;
  std::vector<mpz_class> values_;
};

/// Builds the reduction table by iterated multiplication by x modulo Phi_n,
/// entirely in integer arithmetic.
STable build_s_table(const Modulus& n);

/// n * G_n^-1 through the reduction table: entry (i, j) is the sum over
/// l = 1..n of coeff(i, l) * coeff(j, l). Pure integer arithmetic; must
/// agree with scaled_inverse exactly.
BigIntMatrix scaled_inverse_via_recurrence(const Modulus& n);

/// [Tr(n * G_n^-1) for n = from..to], each term from the exact rational
/// construction. Propagates NonIntegralError.
std::vector<mpz_class> trace_sequence(long from, long to);

}  // namespace cyclovan
