#pragma once

#include <gmpxx.h>

#include <optional>

#include "cyclovan/arith.hpp"

namespace cyclovan {

/// Frobenius condition number ||V_n|| * ||V_n^-1|| with a numeric inverse
/// (partial-pivoting elimination in complex doubles). The float oracle for
/// the exact routes.
double cond_float(const Modulus& n);

/// Exact Cond(V_n)^2 = phi(n)^2 * Tr(G_n^-1) as a reduced rational. Exact
/// values are carried squared so that every identity check stays in
/// rational arithmetic.
mpq_class cond_exact_sq(const Modulus& n);

/// Cond(V_n) through the reduction to the squarefree radical:
/// (n / rad(n)) * sqrt(cond_exact_sq(rad(n))).
double cond_reduced(const Modulus& n);

/// Closed form phi(n) * sqrt(2 (1 - 1/p)) for n = p^k (any prime p, k >= 1)
/// and n = 2^k * p^l (p odd, k, l >= 1); 1 for n = 1. Empty for any other n.
std::optional<double> cond_closed_form(const Modulus& n);

/// The closed form squared, as an exact rational: 2 * phi(n)^2 * (1 - 1/p).
/// Same applicability as cond_closed_form.
std::optional<mpq_class> cond_closed_form_sq(const Modulus& n);

/// (p - 1) * sqrt(2 (1 - 1/p)) for a prime p; rejects composite arguments.
double cond_prime_closed_form(long p);

/// Condition number of V_n by every applicable route, with cross-route
/// agreement flags. Exact-vs-exact comparisons are zero-tolerance rational
/// identities; float-vs-exact comparisons use relative tolerance 1e-8.
struct ConditionReport {
  long n;
  long m;
  mpq_class cond_sq_exact;
  double cond_float;
  double cond_reduced_float;
  std::optional<double> cond_closed_form;
  std::optional<double> prior_bound;  // 2 (p-1) phi(n), prime powers only

  bool agree_float_exact;                  // |float - sqrt(exact)| <= 1e-8 rel
  bool agree_reduced_exact;                // exact rational identity
  std::optional<bool> agree_closed_exact;  // exact rational identity
  std::optional<bool> below_prior_bound;   // exact rational comparison

  bool all_agree() const {
    return agree_float_exact && agree_reduced_exact &&
           agree_closed_exact.value_or(true) && below_prior_bound.value_or(true);
  }
};

ConditionReport cond_report(const Modulus& n);

}  // namespace cyclovan
