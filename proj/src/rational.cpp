#include "sic/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace sic {

namespace {

void require_nonzero_den(const BigInt& d) {
  if (sgn(d) == 0) throw std::invalid_argument("rational with zero denominator");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}

Rational::Rational(const BigInt& n, const BigInt& d) : v_(n) {
  require_nonzero_den(d);
  v_ = mpq_class(n, d);  // den may be negative here; canonicalize fixes the sign
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den))
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  mpq_class v(std::string(num) + "/" + std::string(den));
  if (sgn(v.get_den()) == 0)
    throw std::invalid_argument("bad rational (zero denominator): '" + std::string(text) + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, unsigned long exp) {
  Rational acc = 1, sq = base;
  for (; exp; exp >>= 1) {
    if (exp & 1) acc *= sq;
    if (exp > 1) sq *= sq;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sic
