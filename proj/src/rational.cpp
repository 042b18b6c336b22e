#include "qzeta/rational.hpp"

#include <cctype>

namespace qzeta {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
  if (v_.get_den() == 0) throw DomainError("rational: zero denominator");
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

bool Rational::fits_long() const {
  return is_integer() && v_.get_num().fits_slong_p();
}

long Rational::to_long() const {
  if (!fits_long()) throw DomainError("rational: not an integer fitting long");
  return v_.get_num().get_si();
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw DomainError("rational: 0 raised to a negative power");
    return Rational(0);
  }
  const unsigned long ue = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                                 : static_cast<unsigned long>(e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
  // num/den coprime => their powers are coprime; only the sign of d needs fixing.
  if (e < 0) std::swap(n, d);
  if (sgn(d) < 0) { n = -n; d = -d; }
  mpq_class out;
  mpq_set_num(out.get_mpq_t(), n.get_mpz_t());
  mpq_set_den(out.get_mpq_t(), d.get_mpz_t());
  return Rational(out);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';

  std::string digits;
  long frac_len = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw FormatError("not a number: '" + std::string(s) + "'");

  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    if (i >= s.size()) throw FormatError("truncated exponent in '" + std::string(s) + "'");
    long e = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw FormatError("bad exponent in '" + std::string(s) + "'");
      e = e * 10 + (s[i] - '0');
      if (e > 1000000) throw FormatError("exponent out of range in '" + std::string(s) + "'");
    }
    exp10 = eneg ? -e : e;
  }
  if (i != s.size()) throw FormatError("trailing characters in '" + std::string(s) + "'");

  mpz_class mant(digits, 10);
  if (neg) mant = -mant;
  const long shift = exp10 - frac_len;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift >= 0 ? Rational(mpz_class(mant * p10), mpz_class(1))
                    : Rational(mant, p10);
}

} // namespace

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw FormatError("empty number");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);

  std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
  std::string_view ns_digits = ns;
  if (!ns_digits.empty() && (ns_digits[0] == '+' || ns_digits[0] == '-'))
    ns_digits.remove_prefix(1);
  if (!all_digits(ns_digits) || !all_digits(ds))
    throw FormatError("not a fraction: '" + std::string(s) + "'");
  mpz_class num(std::string(ns), 10), den(std::string(ds), 10);
  if (den == 0) throw FormatError("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

mpz_class binomial_z(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational binomial(unsigned long n, unsigned long k) {
  return Rational(binomial_z(n, k));
}

} // namespace qzeta
