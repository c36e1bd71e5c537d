#include "cyclovan/verify.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cyclovan/cond.hpp"
#include "cyclovan/exact.hpp"
#include "cyclovan/matrices.hpp"
#include "cyclovan/ramanujan.hpp"

namespace cyclovan {

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {
      Suite::Ramanujan, Suite::Gram,     Suite::Kronecker,
      Suite::Similarity, Suite::Theorem1, Suite::Theorem2,
      Suite::Theorem3,  Suite::Orthogonality, Suite::Spectrum};
  return suites;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Ramanujan: return "ramanujan";
    case Suite::Gram: return "gram";
    case Suite::Kronecker: return "kronecker";
    case Suite::Similarity: return "similarity";
    case Suite::Theorem1: return "theorem1";
    case Suite::Theorem2: return "theorem2";
    case Suite::Theorem3: return "theorem3";
    case Suite::Orthogonality: return "orthogonality";
    case Suite::Spectrum: return "spectrum";
  }
  return "?";
}

std::vector<Suite> parse_suites(const std::string& spec) {
  if (spec == "all" || spec.empty()) return all_suites();
  std::vector<Suite> out;
  size_t pos = 0;
  while (pos <= spec.size()) {
    const size_t comma = spec.find(',', pos);
    const std::string name =
        spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    bool found = false;
    for (Suite s : all_suites())
      if (suite_name(s) == name) {
        out.push_back(s);
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("unknown verification suite: '" + name + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

namespace {

enum class Outcome { Pass, Fail, Skip };

Outcome check_ramanujan(const Modulus& n) {
  const long nn = n.value();
  // closed form vs direct summation over one full period
  for (long t = 0; t < nn; ++t)
    if (ramanujan_sum(n, t) != ramanujan_sum_direct(n, t)) return Outcome::Fail;
  // periodicity and evenness on [-2n, 2n]
  for (long t = -2 * nn; t <= 2 * nn; ++t) {
    if (ramanujan_sum(n, t) != ramanujan_sum(n, t + nn)) return Outcome::Fail;
    if (ramanujan_sum(n, t) != ramanujan_sum(n, -t)) return Outcome::Fail;
  }
  // multiplicativity over every coprime splitting n = a * b
  for (long a = 2; a * a <= nn; ++a) {
    if (nn % a != 0) continue;
    const long b = nn / a;
    if (std::gcd(a, b) != 1) continue;
    const Modulus ma(a), mb(b);
    for (long t = 0; t < nn; ++t)
      if (ramanujan_sum(n, t) != ramanujan_sum(ma, t) * ramanujan_sum(mb, t))
        return Outcome::Fail;
  }
  // vanishing criterion: h = n/rad(n) must divide t whenever c_n(t) != 0
  if (!n.squarefree()) {
    const long h = n.radical_cofactor();
    for (long t = 0; t < nn; ++t)
      if (t % h != 0 && ramanujan_sum(n, t) != 0) return Outcome::Fail;
  }
  return Outcome::Pass;
}

Outcome check_gram(const Modulus& n) {
  return gram_numeric_check(n) ? Outcome::Pass : Outcome::Fail;
}

Outcome check_kronecker(const Modulus& n) {
  return kronecker_check(n) ? Outcome::Pass : Outcome::Fail;
}

bool spectra_match(const Spectrum& a, const Spectrum& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (size_t i = 0; i < a.pairs.size(); ++i) {
    if (a.pairs[i].second != b.pairs[i].second) return false;
    const double scale = std::max(std::abs(a.pairs[i].first), 1.0);
    if (std::abs(a.pairs[i].first - b.pairs[i].first) > 1e-6 * scale)
      return false;
  }
  return true;
}

Outcome check_similarity(const Modulus& n) {
  if (n.value() % 2 == 0) return Outcome::Skip;
  if (!j_similarity_check(n)) return Outcome::Fail;
  const Spectrum sn = spectrum_numeric(build_gram(n));
  const Spectrum s2n = spectrum_numeric(build_gram(Modulus(2 * n.value())));
  return spectra_match(sn, s2n) ? Outcome::Pass : Outcome::Fail;
}

Outcome check_theorem1(const Modulus& n) {
  const long h = n.radical_cofactor();
  mpq_class reduced = mpq_class(h) * mpq_class(h) * cond_exact_sq(Modulus(n.radical()));
  reduced.canonicalize();
  return cond_exact_sq(n) == reduced ? Outcome::Pass : Outcome::Fail;
}

Outcome check_theorem2(const Modulus& n) {
  if (n.value() == 1) return Outcome::Skip;
  const auto closed_sq = cond_closed_form_sq(n);
  if (!closed_sq) return Outcome::Skip;
  return cond_exact_sq(n) == *closed_sq ? Outcome::Pass : Outcome::Fail;
}

Outcome check_theorem3(const Modulus& n) {
  const BigIntMatrix direct = scaled_inverse(n);  // NonIntegralError = failure
  if (direct != scaled_inverse_via_recurrence(n)) return Outcome::Fail;
  const BigIntMatrix product = to_bigint(build_gram(n)) * direct;
  const BigIntMatrix expected =
      BigIntMatrix::identity(direct.size()) * mpz_class(n.value());
  return product == expected ? Outcome::Pass : Outcome::Fail;
}

Outcome check_orthogonality(const Modulus& n) {
  return orthogonality_check(n) ? Outcome::Pass : Outcome::Fail;
}

Outcome check_spectrum(const Modulus& n) {
  const Spectrum spec = spectrum_numeric(build_gram(n));
  const long m = n.totient();
  if (spec.total_multiplicity() != m) return Outcome::Fail;
  // eigenvalue form: m * sqrt(sum mult_i / lambda_i) vs the exact value
  double inv_sum = 0.0;
  for (const auto& [lambda, mult] : spec.pairs)
    inv_sum += static_cast<double>(mult) / lambda;
  const double via_spectrum = static_cast<double>(m) * std::sqrt(inv_sum);
  const double exact = std::sqrt(mpq_get_d(cond_exact_sq(n).get_mpq_t()));
  if (std::abs(via_spectrum - exact) > 1e-6 * exact) return Outcome::Fail;
  // primes: eigenvalues are exactly p (mult p-2) and 1 (mult 1)
  if (n.is_prime() && n.value() > 2) {
    const long p = n.value();
    if (spec.pairs.size() != 2) return Outcome::Fail;
    if (spec.pairs[0].second != 1 || std::abs(spec.pairs[0].first - 1.0) > 1e-6)
      return Outcome::Fail;
    if (spec.pairs[1].second != p - 2 ||
        std::abs(spec.pairs[1].first - static_cast<double>(p)) > 1e-6 * p)
      return Outcome::Fail;
  }
  return Outcome::Pass;
}

Outcome run_check(Suite s, const Modulus& n) {
  switch (s) {
    case Suite::Ramanujan: return check_ramanujan(n);
    case Suite::Gram: return check_gram(n);
    case Suite::Kronecker: return check_kronecker(n);
    case Suite::Similarity: return check_similarity(n);
    case Suite::Theorem1: return check_theorem1(n);
    case Suite::Theorem2: return check_theorem2(n);
    case Suite::Theorem3: return check_theorem3(n);
    case Suite::Orthogonality: return check_orthogonality(n);
    case Suite::Spectrum: return check_spectrum(n);
  }
  return Outcome::Skip;
}

}  // namespace

SuiteReport run_suite(Suite s, long from, long to, int jobs) {
  if (from < 1 || from > to)
    throw std::invalid_argument("run_suite: need 1 <= from <= to");
  const long count = to - from + 1;
  std::vector<Outcome> outcomes(count, Outcome::Skip);

  const int workers = static_cast<int>(std::max<long>(1, std::min<long>(jobs, count)));
  std::atomic<long> next{0};
  auto work = [&] {
    for (long idx = next.fetch_add(1); idx < count; idx = next.fetch_add(1)) {
      try {
        outcomes[idx] = run_check(s, Modulus(from + idx));
      } catch (const std::exception&) {
        outcomes[idx] = Outcome::Fail;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SuiteReport rep{s, from, to};
  for (long idx = 0; idx < count; ++idx) {
    switch (outcomes[idx]) {
      case Outcome::Pass:
        ++rep.checked;
        ++rep.passed;
        break;
      case Outcome::Fail:
        ++rep.checked;
        ++rep.failed;
        if (!rep.first_failure) rep.first_failure = from + idx;
        break;
      case Outcome::Skip:
        ++rep.skipped;
        break;
    }
  }
  return rep;
}

std::vector<SuiteReport> run_suites(const std::vector<Suite>& suites, long from,
                                    long to, int jobs) {
  std::vector<SuiteReport> reports;
  reports.reserve(suites.size());
  for (Suite s : suites) reports.push_back(run_suite(s, from, to, jobs));
  return reports;
}

}  // namespace cyclovan
