#include "jetforge/rational.hpp"

#include <cctype>

#include "jetforge/error.hpp"

namespace jetforge {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  const auto digits = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw InputError("rational with zero denominator");
  mpq_class q(n, d);
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InputError("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::uint32_t Rational::residue(std::uint32_t prime) const {
  const mpz_class p(prime);
  mpz_class num = value_.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value_.get_den() % p;
  if (den == 0)
    throw DomainError("denominator of " + to_string() + " vanishes modulo " + std::to_string(prime));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace jetforge
