#include "qzeta/classical.hpp"

#include <map>
#include <mutex>

namespace qzeta {

namespace {

std::mutex cache_mu;
std::vector<Rational> bernoulli_cache;
std::vector<Rational> euler_cache;
std::map<Rational, std::vector<Rational>> frobenius_cache;

// All three recurrences come from multiplying the defining EGF by its
// denominator series and matching coefficients of t^n/n!.

void extend_bernoulli(std::vector<Rational>& t, long n) {
  if (t.empty()) t.push_back(Rational(1));
  for (long m = static_cast<long>(t.size()); m <= n; ++m) {
    Rational acc(0);
    for (long k = 0; k < m; ++k)
      acc += binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(k)) * t[k];
    t.push_back(-acc / Rational(m + 1));
  }
}

void extend_euler(std::vector<Rational>& t, long n) {
  if (t.empty()) t.push_back(Rational(1));
  for (long m = static_cast<long>(t.size()); m <= n; ++m) {
    Rational acc(0);
    for (long k = 0; k < m; ++k)
      acc += binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)) * t[k];
    t.push_back(-acc / Rational(2));
  }
}

void extend_frobenius(std::vector<Rational>& t, long n, const Rational& u) {
  if (t.empty()) t.push_back(Rational(1));
  for (long m = static_cast<long>(t.size()); m <= n; ++m) {
    Rational acc(0);
    for (long k = 0; k < m; ++k)
      acc += binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)) * t[k];
    t.push_back(acc / (u - Rational(1)));
  }
}

} // namespace

Rational bernoulli(long n) {
  if (n < 0) throw DomainError("bernoulli: n must be >= 0");
  std::lock_guard<std::mutex> lock(cache_mu);
  extend_bernoulli(bernoulli_cache, n);
  return bernoulli_cache[static_cast<std::size_t>(n)];
}

Rational euler_number(long n) {
  if (n < 0) throw DomainError("euler_number: n must be >= 0");
  std::lock_guard<std::mutex> lock(cache_mu);
  extend_euler(euler_cache, n);
  return euler_cache[static_cast<std::size_t>(n)];
}

Rational frobenius_euler(long n, const Rational& u) {
  if (n < 0) throw DomainError("frobenius_euler: n must be >= 0");
  if (u == Rational(1)) throw DomainError("frobenius_euler: u must differ from 1");
  std::lock_guard<std::mutex> lock(cache_mu);
  auto& t = frobenius_cache[u];
  extend_frobenius(t, n, u);
  return t[static_cast<std::size_t>(n)];
}

std::vector<AuditRow> bernoulli_euler_identity_audit(long n_max) {
  if (n_max < 0) throw DomainError("audit: n_max must be >= 0");
  std::vector<AuditRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) {
    AuditRow row;
    row.n = n;
    row.lhs = frobenius_euler(n, Rational(-1));
    Rational rhs(0);
    Rational p2(1);
    for (long k = 0; k <= n; ++k) {
      rhs += binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(k)) * p2 *
             bernoulli(k);
      p2 *= Rational(2);
    }
    row.rhs = rhs;
    row.equal = row.lhs == row.rhs;
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace qzeta
