#pragma once

#include <vector>

#include "cyclovan/arith.hpp"

namespace cyclovan {

/// First phi(n) Ramanujan sums of modulus n: values[t] = c_n(t) for
/// t = 0 .. phi(n)-1. This is exactly the first row of the Gram matrix G_n.
struct RamanujanRow {
  long n;
  std::vector<long> values;
};

/// Ramanujan sum c_n(t) via the von Sterneck closed form
///     c_n(t) = mu(n/g) * phi(n) / phi(n/g),  g = gcd(n, t mod n),
/// with gcd(n, 0) taken as n (so c_n(0) = phi(n)). Works for any integer t.
long ramanujan_sum(const Modulus& n, long t);

/// c_n(t) evaluated from the definition, summing the t-th powers of all
/// primitive n-th roots of unity in double precision and rounding. Serves
/// as the independent oracle for ramanujan_sum. Throws RoundoffError when
/// the sum is not integral to within 1e-6.
long ramanujan_sum_direct(const Modulus& n, long t);

/// [c_n(0), ..., c_n(phi(n)-1)] via the closed form.
RamanujanRow ramanujan_row(const Modulus& n);

}  // namespace cyclovan
