#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "cyclovan/ramanujan.hpp"

namespace cyclovan {

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  std::complex<double>& at(long i, long j) { return entries_[i * cols_ + j]; }
  const std::complex<double>& at(long i, long j) const {
    return entries_[i * cols_ + j];
  }

 private:
  long rows_, cols_;
  std::vector<std::complex<double>> entries_;
};

/// The Vandermonde matrix of the primitive n-th roots of unity: row i holds
/// 1, z_i, z_i^2, ..., z_i^(m-1) where z_i = exp(2*pi*I*a_i/n) and a_1 < ...
/// < a_m are the ascending coprime residues (m = phi(n)).
ComplexMatrix build_vandermonde(const Modulus& n);

/// sqrt of the sum of squared entry moduli; equals sqrt(Tr(A* A)).
double frobenius_norm(const ComplexMatrix& a);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
/// Throws SingularMatrixError if a pivot vanishes numerically.
ComplexMatrix complex_inverse(const ComplexMatrix& a);

/// log |det A| via LU with partial pivoting (log space avoids overflow for
/// the large determinants that show up here). -inf for a singular matrix.
double log_abs_det(const ComplexMatrix& a);

/// The Gram matrix G_n = V_n* V_n, which works out to the symmetric integer
/// Toeplitz matrix with entry (i, j) = c_n(i - j). Stored compressed as its
/// first row; densified on demand.
class GramMatrix {
 public:
  explicit GramMatrix(Modulus n)
      : n_(std::move(n)), first_row_(ramanujan_row(n_)) {}

  const Modulus& modulus() const { return n_; }
  long size() const { return static_cast<long>(first_row_.values.size()); }
  const RamanujanRow& first_row() const { return first_row_; }

  long entry(long i, long j) const {
    return first_row_.values[i >= j ? i - j : j - i];
  }

  std::vector<double> dense_double() const;

 private:
  Modulus n_;
  RamanujanRow first_row_;
};

GramMatrix build_gram(const Modulus& n);

/// True iff the numeric product V_n* V_n matches build_gram(n) entrywise to
/// within 1e-6 * n.
bool gram_numeric_check(const Modulus& n);

/// True iff G_n = h * (G_rad(n) (x) Id_h) entrywise, with h = n / rad(n);
/// rows and columns indexed as i = h*i' + i'' over [0, m).
bool kronecker_check(const Modulus& n);

/// For odd n: true iff G_2n(i, j) = (-1)^(i-j) * G_n(i, j) exactly, i.e.
/// G_2n = J^-1 G_n J with J = diag(+1, -1, +1, ...). Rejects even n.
bool j_similarity_check(const Modulus& n);

/// Determinant of the k x k matrix with a on the diagonal and b elsewhere:
/// (a - b)^(k-1) * (a + (k-1) b), evaluated exactly.
mpq_class structured_det(const mpq_class& a, const mpq_class& b, long k);

/// Distinct eigenvalues with multiplicities, ascending.
struct Spectrum {
  std::vector<std::pair<double, long>> pairs;

  long total_multiplicity() const {
    long s = 0;
    for (const auto& [v, m] : pairs) s += m;
    return s;
  }
};

/// Eigenvalues of the (positive definite) Gram matrix by a cyclic Jacobi
/// solver, clustered into distinct values: eigenvalues closer than
/// 1e-6 * lambda_max share a cluster and are reported as (mean, count).
/// Throws RoundoffError if an eigenvalue comes out <= 1e-9.
Spectrum spectrum_numeric(const GramMatrix& g);

/// Checks the orthogonality of the primitive roots: for all k, h the sum
/// over l = 1..n of (z_k * conj(z_h))^l must be n when k = h and 0
/// otherwise, to within 1e-6 * n.
bool orthogonality_check(const Modulus& n);

}  // namespace cyclovan
