#include "cyclovan/exact.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cyclovan {

BigIntMatrix BigIntMatrix::operator*(const BigIntMatrix& rhs) const {
  if (size_ != rhs.size_)
    throw std::invalid_argument("BigIntMatrix: size mismatch in product");
  BigIntMatrix out(size_);
  for (long i = 0; i < size_; ++i)
    for (long k = 0; k < size_; ++k) {
      const mpz_class& lik = at(i, k);
      if (lik == 0) continue;
      for (long j = 0; j < size_; ++j)
        mpz_addmul(out.at(i, j).get_mpz_t(), lik.get_mpz_t(),
                   rhs.at(k, j).get_mpz_t());
    }
  return out;
}

BigIntMatrix BigIntMatrix::operator*(const mpz_class& scalar) const {
  BigIntMatrix out(size_);
  for (long i = 0; i < size_; ++i)
    for (long j = 0; j < size_; ++j) out.at(i, j) = at(i, j) * scalar;
  return out;
}

BigIntMatrix to_bigint(const GramMatrix& g) {
  const long m = g.size();
  BigIntMatrix out(m);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) out.at(i, j) = g.entry(i, j);
  return out;
}

mpz_class det_exact(BigIntMatrix m) {
  const long size = m.size();
  if (size == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  mpz_class t, r;
  for (long k = 0; k + 1 < size; ++k) {
    if (m.at(k, k) == 0) {
      long piv = k + 1;
      while (piv < size && m.at(piv, k) == 0) ++piv;
      if (piv == size) return 0;
      for (long j = 0; j < size; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    const mpz_class pivot = m.at(k, k);
    for (long i = k + 1; i < size; ++i) {
      const mpz_class lik = m.at(i, k);
      for (long j = k + 1; j < size; ++j) {
        mpz_mul(t.get_mpz_t(), pivot.get_mpz_t(), m.at(i, j).get_mpz_t());
        mpz_submul(t.get_mpz_t(), lik.get_mpz_t(), m.at(k, j).get_mpz_t());
        mpz_tdiv_qr(m.at(i, j).get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(),
                    prev.get_mpz_t());
        if (r != 0)
          throw ExactDivisionError(
              "det_exact: inexact division in fraction-free elimination");
      }
      m.at(i, k) = 0;
    }
    prev = pivot;
  }
  return sign > 0 ? m.at(size - 1, size - 1) : -m.at(size - 1, size - 1);
}

AdjugateDet adjugate_det(const BigIntMatrix& m) {
  const long size = m.size();
  BigIntMatrix left = m;
  BigIntMatrix right = BigIntMatrix::identity(size);

  // One-pass fraction-free Gauss-Jordan: at step k every row i != k is
  // updated by the Bareiss cross-multiplication rule, dividing by the
  // previous pivot (the division is exact: every intermediate entry is a
  // minor of [M | I]). Nonzero entries of row i live in left columns
  // {i} U (k, size) and right columns [0, k] U {i}, which is what the
  // explicit column ranges below cover.
  mpz_class prev = 1;
  mpz_t t1;
  mpz_init(t1);
  for (long k = 0; k < size; ++k) {
    const mpz_class pivot = left.at(k, k);
    if (pivot == 0) {
      mpz_clear(t1);
      throw SingularMatrixError(
          "adjugate_det: zero pivot at step " + std::to_string(k) +
          "; input must have nonzero leading principal minors");
    }
    for (long i = 0; i < size; ++i) {
      if (i == k) continue;
      const mpz_class lik = left.at(i, k);
      for (long j = k + 1; j < size; ++j) {
        mpz_mul(t1, pivot.get_mpz_t(), left.at(i, j).get_mpz_t());
        mpz_submul(t1, lik.get_mpz_t(), left.at(k, j).get_mpz_t());
        mpz_divexact(left.at(i, j).get_mpz_t(), t1, prev.get_mpz_t());
      }
      if (i < k) {
        mpz_mul(t1, pivot.get_mpz_t(), left.at(i, i).get_mpz_t());
        mpz_divexact(left.at(i, i).get_mpz_t(), t1, prev.get_mpz_t());
      }
      for (long j = 0; j <= k; ++j) {
        mpz_mul(t1, pivot.get_mpz_t(), right.at(i, j).get_mpz_t());
        mpz_submul(t1, lik.get_mpz_t(), right.at(k, j).get_mpz_t());
        mpz_divexact(right.at(i, j).get_mpz_t(), t1, prev.get_mpz_t());
      }
      if (i > k) {
        mpz_mul(t1, pivot.get_mpz_t(), right.at(i, i).get_mpz_t());
        mpz_divexact(right.at(i, i).get_mpz_t(), t1, prev.get_mpz_t());
      }
      left.at(i, k) = 0;
    }
    prev = pivot;
  }
  mpz_clear(t1);
  return {std::move(right), left.at(size - 1, size - 1)};
}

mpq_class inverse_trace_exact(const Modulus& n) {
  const auto [adj, det] = adjugate_det(to_bigint(build_gram(n)));
  if (det == 0)
    throw SingularMatrixError("inverse_trace_exact: det(G_n) = 0 for n = " +
                              std::to_string(n.value()));
  mpq_class tr(adj.trace(), det);
  tr.canonicalize();
  return tr;
}

BigIntMatrix scaled_inverse(const Modulus& n) {
  const auto [adj, det] = adjugate_det(to_bigint(build_gram(n)));
  const long m = adj.size();
  BigIntMatrix out(m);
  mpz_class num, r;
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      num = adj.at(i, j) * n.value();
      mpz_tdiv_qr(out.at(i, j).get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                  det.get_mpz_t());
      if (r != 0) {
        mpq_class q(num, det);
        q.canonicalize();
        throw NonIntegralError(n.value(), i, j, q.get_str());
      }
    }
  return out;
}

STable build_s_table(const Modulus& n) {
  const long nn = n.value();
  const long m = n.totient();
  const IntPolynomial phi = cyclotomic_poly(n);
  STable table(nn, m);

  // Coefficient vector of x^l mod Phi_n; multiply by x and reduce once per
  // step. Phi_n is monic, so the reduction subtracts lead * Phi_n.
  std::vector<mpz_class> cur(m, mpz_class(0));
  cur[0] = 1;
  for (long i = 0; i < m; ++i) table.coeff(i, 0) = cur[i];
  mpz_class lead;
  for (long l = 1; l <= nn; ++l) {
    lead = cur[m - 1];
    for (long i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (lead != 0)
      for (long i = 0; i < m; ++i)
        mpz_submul(cur[i].get_mpz_t(), lead.get_mpz_t(),
                   phi.coeffs[i].get_mpz_t());
    for (long i = 0; i < m; ++i) table.coeff(i, l) = cur[i];
  }
  return table;
}

BigIntMatrix scaled_inverse_via_recurrence(const Modulus& n) {
  const STable s = build_s_table(n);
  const long m = s.rows();
  const long nn = n.value();
  BigIntMatrix out(m);
  for (long i = 0; i < m; ++i)
    for (long j = i; j < m; ++j) {
      mpz_class& acc = out.at(i, j);
      for (long l = 1; l <= nn; ++l)
        mpz_addmul(acc.get_mpz_t(), s.coeff(i, l).get_mpz_t(),
                   s.coeff(j, l).get_mpz_t());
      if (i != j) out.at(j, i) = acc;
    }
  return out;
}

std::vector<mpz_class> trace_sequence(long from, long to) {
  if (from < 1 || from > to)
    throw std::invalid_argument("trace_sequence: need 1 <= from <= to");
  std::vector<mpz_class> seq;
  seq.reserve(to - from + 1);
  for (long n = from; n <= to; ++n)
    seq.push_back(scaled_inverse(Modulus(n)).trace());
  return seq;
}

}  // namespace cyclovan
