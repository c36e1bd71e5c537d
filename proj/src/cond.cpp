#include "cyclovan/cond.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cyclovan/exact.hpp"
#include "cyclovan/matrices.hpp"

namespace cyclovan {

double cond_float(const Modulus& n) {
  const ComplexMatrix v = build_vandermonde(n);
  const ComplexMatrix inv = complex_inverse(v);
  return frobenius_norm(v) * frobenius_norm(inv);
}

namespace {

// Exact inverse traces are expensive at large n and requested repeatedly by
// the report/verification layers, so cache per n.
std::mutex cond_sq_mutex;
std::map<long, mpq_class> cond_sq_cache;

}  // namespace

mpq_class cond_exact_sq(const Modulus& n) {
  {
    std::lock_guard lock(cond_sq_mutex);
    auto it = cond_sq_cache.find(n.value());
    if (it != cond_sq_cache.end()) return it->second;
  }
  const long m = n.totient();
  mpq_class sq = mpq_class(m) * mpq_class(m) * inverse_trace_exact(n);
  sq.canonicalize();
  std::lock_guard lock(cond_sq_mutex);
  return cond_sq_cache.try_emplace(n.value(), std::move(sq)).first->second;
}

double cond_reduced(const Modulus& n) {
  const long h = n.radical_cofactor();
  const mpq_class sq = cond_exact_sq(Modulus(n.radical()));
  return static_cast<double>(h) * std::sqrt(mpq_get_d(sq.get_mpq_t()));
}

namespace {

// Odd prime p when the closed form applies (n = p^k or 2^k p^l), 2 for
// n = 2^k, 0 when it does not apply. n = 1 handled by the callers.
long closed_form_prime(const Modulus& n) {
  const auto& f = n.factorization();
  if (f.size() == 1) return f[0].prime;
  if (f.size() == 2 && f[0].prime == 2) return f[1].prime;
  return 0;
}

}  // namespace

std::optional<mpq_class> cond_closed_form_sq(const Modulus& n) {
  if (n.value() == 1) return mpq_class(1);
  const long p = closed_form_prime(n);
  if (p == 0) return std::nullopt;
  const long m = n.totient();
  // 2 phi(n)^2 (1 - 1/p)
  mpq_class sq(mpz_class(2 * m) * m * (p - 1), mpz_class(p));
  sq.canonicalize();
  return sq;
}

std::optional<double> cond_closed_form(const Modulus& n) {
  if (n.value() == 1) return 1.0;
  const long p = closed_form_prime(n);
  if (p == 0) return std::nullopt;
  const double phi = static_cast<double>(n.totient());
  return phi * std::sqrt(2.0 * (1.0 - 1.0 / static_cast<double>(p)));
}

double cond_prime_closed_form(long p) {
  if (p < 2 || !Modulus(p).is_prime())
    throw std::invalid_argument("cond_prime_closed_form: " + std::to_string(p) +
                                " is not prime");
  return static_cast<double>(p - 1) *
         std::sqrt(2.0 * (1.0 - 1.0 / static_cast<double>(p)));
}

ConditionReport cond_report(const Modulus& n) {
  ConditionReport rep{};
  rep.n = n.value();
  rep.m = n.totient();
  rep.cond_sq_exact = cond_exact_sq(n);
  rep.cond_float = cond_float(n);
  rep.cond_reduced_float = cond_reduced(n);
  rep.cond_closed_form = cond_closed_form(n);

  const double exact = std::sqrt(mpq_get_d(rep.cond_sq_exact.get_mpq_t()));
  rep.agree_float_exact = std::abs(rep.cond_float - exact) <= 1e-8 * exact;

  // Reduction route, checked as the exact rational identity
  // cond_exact_sq(n) = h^2 * cond_exact_sq(rad(n)).
  const long h = n.radical_cofactor();
  mpq_class reduced_sq = mpq_class(h) * mpq_class(h) * cond_exact_sq(Modulus(n.radical()));
  reduced_sq.canonicalize();
  rep.agree_reduced_exact = reduced_sq == rep.cond_sq_exact;

  if (auto closed_sq = cond_closed_form_sq(n))
    rep.agree_closed_exact = (*closed_sq == rep.cond_sq_exact);

  if (n.prime_power_base() != 0 && n.value() > 1) {
    const long p = n.prime_power_base();
    const long bound = 2 * (p - 1) * n.totient();
    rep.prior_bound = static_cast<double>(bound);
    mpq_class bound_sq(bound);
    bound_sq *= bound;
    rep.below_prior_bound = rep.cond_sq_exact < bound_sq;
  }
  return rep;
}

}  // namespace cyclovan
