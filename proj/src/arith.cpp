#include "cyclovan/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace cyclovan {

std::vector<PrimePower> factorize(long n) {
  if (n < 1) {
    throw std::invalid_argument("factorize: n must be a positive integer, got " +
                                std::to_string(n));
  }
  std::vector<PrimePower> factors;
  auto strip = [&](long p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  };
  strip(2);
  for (long p = 3; p * p <= n; p += 2) strip(p);
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

long Modulus::totient() const {
  long phi = 1;
  for (const auto& [p, e] : factors_) {
    long pe = p;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe / p * (p - 1);
  }
  return phi;
}

long Modulus::radical() const {
  long r = 1;
  for (const auto& f : factors_) r *= f.prime;
  return r;
}

int Modulus::moebius() const {
  for (const auto& f : factors_)
    if (f.exponent > 1) return 0;
  return factors_.size() % 2 == 0 ? 1 : -1;
}

bool Modulus::squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

long euler_phi(const Modulus& n) { return n.totient(); }
int moebius(const Modulus& n) { return n.moebius(); }
long radical(const Modulus& n) { return n.radical(); }

std::vector<long> divisors(const Modulus& n) {
  std::vector<long> divs = {1};
  for (const auto& [p, e] : n.factorization()) {
    const size_t base = divs.size();
    long pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<long> coprime_residues(const Modulus& n) {
  std::vector<long> res;
  res.reserve(n.totient());
  for (long a = 1; a <= n.value(); ++a)
    if (std::gcd(a, n.value()) == 1) res.push_back(a);
  return res;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  IntPolynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      mpz_addmul(out.coeffs[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(),
                 b.coeffs[j].get_mpz_t());
    }
  }
  return out;
}

IntPolynomial poly_div_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.coeffs.empty()) throw std::invalid_argument("poly_div_exact: division by zero polynomial");
  if (num.coeffs.empty()) return {};
  if (num.degree() < den.degree())
    throw ExactDivisionError("poly_div_exact: nonzero remainder (degree too small)");

  std::vector<mpz_class> rem = num.coeffs;
  const long dq = num.degree() - den.degree();
  std::vector<mpz_class> quot(dq + 1, mpz_class(0));
  const mpz_class& lead = den.coeffs.back();

  for (long k = dq; k >= 0; --k) {
    mpz_class& top = rem[k + den.degree()];
    if (top == 0) continue;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0)
      throw ExactDivisionError("poly_div_exact: inexact leading-coefficient division");
    quot[k] = q;
    for (long j = 0; j <= den.degree(); ++j)
      mpz_submul(rem[j + k].get_mpz_t(), q.get_mpz_t(), den.coeffs[j].get_mpz_t());
  }
  for (const auto& c : rem)
    if (c != 0) throw ExactDivisionError("poly_div_exact: nonzero remainder");

  IntPolynomial out;
  out.coeffs = std::move(quot);
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

namespace {

// x^n - 1
IntPolynomial x_pow_minus_one(long n) {
  IntPolynomial p;
  p.coeffs.assign(n + 1, mpz_class(0));
  p.coeffs[0] = -1;
  p.coeffs[n] = 1;
  return p;
}

std::shared_mutex cyclo_mutex;
std::map<long, IntPolynomial> cyclo_memo;

}  // namespace

IntPolynomial cyclotomic_poly(const Modulus& n) {
  {
    std::shared_lock lock(cyclo_mutex);
    auto it = cyclo_memo.find(n.value());
    if (it != cyclo_memo.end()) return it->second;
  }

  IntPolynomial result;
  if (n.value() == 1) {
    result.coeffs = {mpz_class(-1), mpz_class(1)};  // x - 1
  } else {
    IntPolynomial den{{mpz_class(1)}};
    for (long d : divisors(n)) {
      if (d == n.value()) continue;
      den = poly_mul(den, cyclotomic_poly(Modulus(d)));
    }
    result = poly_div_exact(x_pow_minus_one(n.value()), den);
  }

  std::unique_lock lock(cyclo_mutex);
  return cyclo_memo.try_emplace(n.value(), std::move(result)).first->second;
}

}  // namespace cyclovan
