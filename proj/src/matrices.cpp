#include "cyclovan/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cyclovan/errors.hpp"

namespace cyclovan {

namespace {

// Unit roots exp(2*pi*I*r/n) for r = 0..n-1.
std::vector<std::complex<double>> root_table(long n) {
  std::vector<std::complex<double>> roots(n);
  for (long r = 0; r < n; ++r)
    roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                   static_cast<double>(n));
  return roots;
}

}  // namespace

ComplexMatrix build_vandermonde(const Modulus& n) {
  const auto residues = coprime_residues(n);
  const long m = static_cast<long>(residues.size());
  const auto roots = root_table(n.value());
  ComplexMatrix v(m, m);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      v.at(i, j) = roots[residues[i] * j % n.value()];
  return v;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) sum += std::norm(a.at(i, j));
  return std::sqrt(sum);
}

ComplexMatrix complex_inverse(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("complex_inverse: matrix must be square");
  const long m = a.rows();
  ComplexMatrix work = a;
  ComplexMatrix inv(m, m);
  for (long i = 0; i < m; ++i) inv.at(i, i) = 1.0;

  for (long k = 0; k < m; ++k) {
    long piv = k;
    double best = std::abs(work.at(k, k));
    for (long i = k + 1; i < m; ++i) {
      if (double v = std::abs(work.at(i, k)); v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0)
      throw SingularMatrixError("complex_inverse: singular matrix at column " +
                                std::to_string(k));
    if (piv != k) {
      for (long j = 0; j < m; ++j) {
        std::swap(work.at(piv, j), work.at(k, j));
        std::swap(inv.at(piv, j), inv.at(k, j));
      }
    }
    const std::complex<double> d = work.at(k, k);
    for (long j = 0; j < m; ++j) {
      work.at(k, j) /= d;
      inv.at(k, j) /= d;
    }
    for (long i = 0; i < m; ++i) {
      if (i == k) continue;
      const std::complex<double> f = work.at(i, k);
      if (f == 0.0) continue;
      for (long j = 0; j < m; ++j) {
        work.at(i, j) -= f * work.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

double log_abs_det(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("log_abs_det: matrix must be square");
  const long m = a.rows();
  ComplexMatrix work = a;
  double log_det = 0.0;
  for (long k = 0; k < m; ++k) {
    long piv = k;
    double best = std::abs(work.at(k, k));
    for (long i = k + 1; i < m; ++i) {
      if (double v = std::abs(work.at(i, k)); v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return -std::numeric_limits<double>::infinity();
    if (piv != k)
      for (long j = k; j < m; ++j) std::swap(work.at(piv, j), work.at(k, j));
    log_det += std::log(best);
    const std::complex<double> d = work.at(k, k);
    for (long i = k + 1; i < m; ++i) {
      const std::complex<double> f = work.at(i, k) / d;
      if (f == 0.0) continue;
      for (long j = k + 1; j < m; ++j) work.at(i, j) -= f * work.at(k, j);
    }
  }
  return log_det;
}

std::vector<double> GramMatrix::dense_double() const {
  const long m = size();
  std::vector<double> a(m * m);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      a[i * m + j] = static_cast<double>(entry(i, j));
  return a;
}

GramMatrix build_gram(const Modulus& n) { return GramMatrix(n); }

bool gram_numeric_check(const Modulus& n) {
  const GramMatrix g = build_gram(n);
  const ComplexMatrix v = build_vandermonde(n);
  const long m = g.size();
  const double tol = 1e-6 * static_cast<double>(n.value());
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < m; ++j) {
      std::complex<double> prod = 0.0;
      for (long k = 0; k < m; ++k) prod += std::conj(v.at(k, i)) * v.at(k, j);
      if (std::abs(prod - static_cast<double>(g.entry(i, j))) >= tol)
        return false;
    }
  }
  return true;
}

bool kronecker_check(const Modulus& n) {
  const GramMatrix g = build_gram(n);
  const Modulus nprime(n.radical());
  const RamanujanRow base = ramanujan_row(nprime);
  const long h = n.radical_cofactor();
  const long m = g.size();
  for (long i = 0; i < m; ++i) {
    const long ip = i / h, ipp = i % h;
    for (long j = 0; j < m; ++j) {
      const long jp = j / h, jpp = j % h;
      long expected = 0;
      if (ipp == jpp) {
        const long d = ip >= jp ? ip - jp : jp - ip;
        expected = h * base.values[d];
      }
      if (g.entry(i, j) != expected) return false;
    }
  }
  return true;
}

bool j_similarity_check(const Modulus& n) {
  if (n.value() % 2 == 0)
    throw std::invalid_argument("j_similarity_check: n must be odd, got " +
                                std::to_string(n.value()));
  const GramMatrix gn = build_gram(n);
  const GramMatrix g2n = build_gram(Modulus(2 * n.value()));
  const long m = gn.size();
  if (g2n.size() != m) return false;  // phi(2n) = phi(n) for odd n
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      const long sign = (i - j) % 2 == 0 ? 1 : -1;
      if (g2n.entry(i, j) != sign * gn.entry(i, j)) return false;
    }
  return true;
}

mpq_class structured_det(const mpq_class& a, const mpq_class& b, long k) {
  if (k < 1) throw std::invalid_argument("structured_det: k must be >= 1");
  const mpq_class diff = a - b;
  mpq_class det = a + mpq_class(k - 1) * b;
  for (long i = 1; i < k; ++i) det *= diff;
  det.canonicalize();
  return det;
}

namespace {

// Cyclic Jacobi rotations for a symmetric matrix; eigenvalues only.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, long m) {
  if (m == 1) return {a[0]};
  auto at = [&](long i, long j) -> double& { return a[i * m + j]; };
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (long i = 0; i < m; ++i)
      for (long j = i + 1; j < m; ++j) off += 2.0 * at(i, j) * at(i, j);
    double diag = 0.0;
    for (long i = 0; i < m; ++i) diag += at(i, i) * at(i, i);
    if (off <= 1e-30 * (diag + off)) break;

    for (long p = 0; p < m - 1; ++p) {
      for (long q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (long k = 0; k < m; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (long k = 0; k < m; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(m);
  for (long i = 0; i < m; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace

Spectrum spectrum_numeric(const GramMatrix& g) {
  const long m = g.size();
  const auto eig = jacobi_eigenvalues(g.dense_double(), m);
  for (double v : eig)
    if (v <= 1e-9)
      throw RoundoffError(
          "spectrum_numeric: eigenvalue " + std::to_string(v) +
          " is not positive; G_n must be positive definite (n = " +
          std::to_string(g.modulus().value()) + ")");

  const double cluster_tol = 1e-6 * eig.back();
  Spectrum spec;
  long start = 0;
  for (long i = 1; i <= m; ++i) {
    if (i == m || eig[i] - eig[i - 1] >= cluster_tol) {
      double mean = 0.0;
      for (long k = start; k < i; ++k) mean += eig[k];
      mean /= static_cast<double>(i - start);
      spec.pairs.emplace_back(mean, i - start);
      start = i;
    }
  }
  return spec;
}

bool orthogonality_check(const Modulus& n) {
  const auto residues = coprime_residues(n);
  const long m = static_cast<long>(residues.size());
  const long nn = n.value();
  const auto roots = root_table(nn);
  const double tol = 1e-6 * static_cast<double>(nn);
  for (long k = 0; k < m; ++k) {
    for (long h = 0; h < m; ++h) {
      // z_k * conj(z_h) = exp(2*pi*I*(a_k - a_h)/n)
      const long d = ((residues[k] - residues[h]) % nn + nn) % nn;
      std::complex<double> sum = 0.0;
      for (long l = 1; l <= nn; ++l) sum += roots[d * l % nn];
      const double target = k == h ? static_cast<double>(nn) : 0.0;
      if (std::abs(sum - target) >= tol) return false;
    }
  }
  return true;
}

}  // namespace cyclovan
