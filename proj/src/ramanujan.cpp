#include "cyclovan/ramanujan.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>

#include "cyclovan/errors.hpp"

namespace cyclovan {

long ramanujan_sum(const Modulus& n, long t) {
  const long nn = n.value();
  const long t0 = ((t % nn) + nn) % nn;
  const long g = t0 == 0 ? nn : std::gcd(nn, t0);
  const Modulus reduced(nn / g);
  const int mu = reduced.moebius();
  if (mu == 0) return 0;
  // phi(d) divides phi(n) for every divisor d of n
  return mu * (n.totient() / reduced.totient());
}

long ramanujan_sum_direct(const Modulus& n, long t) {
  constexpr double kTol = 1e-6;
  const long nn = n.value();
  const long t0 = ((t % nn) + nn) % nn;
  std::complex<double> sum = 0.0;
  for (long a : coprime_residues(n)) {
    const long e = a * t0 % nn;  // a, t0 < n, so the product fits 64 bits at desk scale
    sum += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                               static_cast<double>(nn));
  }
  if (std::abs(sum.imag()) >= kTol)
    throw RoundoffError("ramanujan_sum_direct: imaginary part " +
                        std::to_string(sum.imag()) + " exceeds tolerance for n = " +
                        std::to_string(nn));
  const double rounded = std::round(sum.real());
  if (std::abs(sum.real() - rounded) >= kTol)
    throw RoundoffError("ramanujan_sum_direct: real part " +
                        std::to_string(sum.real()) +
                        " is not integral for n = " + std::to_string(nn));
  return static_cast<long>(rounded);
}

RamanujanRow ramanujan_row(const Modulus& n) {
  RamanujanRow row{n.value(), {}};
  const long m = n.totient();
  row.values.reserve(m);
  for (long t = 0; t < m; ++t) row.values.push_back(ramanujan_sum(n, t));
  return row;
}

}  // namespace cyclovan
