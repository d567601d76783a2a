#include "graev/rational.hpp"

#include <cctype>

#include "graev/errors.hpp"

namespace graev {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = body.substr(dot + 1);
  if (whole.empty()) whole = "0";
  if (!all_digits(whole) || !all_digits(frac)) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  Integer numerator(std::string(whole) + std::string(frac), 10);
  Integer denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
  Rational q(numerator, denominator);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational literal");
  if (text.find('.') != std::string_view::npos) return parse_decimal(text);

  std::string_view digits = text;
  if (digits.front() == '-' || digits.front() == '+') digits.remove_prefix(1);
  const auto slash = digits.find('/');
  const bool ok = slash == std::string_view::npos
                      ? all_digits(digits)
                      : all_digits(digits.substr(0, slash)) && all_digits(digits.substr(slash + 1));
  if (!ok) throw InputError("not a rational number: '" + std::string(text) + "'");

  std::string literal(text.front() == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(literal, 10) != 0 || q.get_den() == 0) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer pow2(unsigned bits) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
  return r;
}

Integer isqrt(const Integer& z) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  Rational r(isqrt(q.get_num()), isqrt(q.get_den()));
  r.canonicalize();
  return r;
}

SqrtEnclosure sqrt_enclosure(const Rational& q, unsigned bits) {
  if (sgn(q) < 0) throw PreconditionError("sqrt_enclosure of a negative number");
  if (auto root = exact_sqrt(q)) return {*root, *root, true};
  // sqrt(a/b) = sqrt(a*b)/b
  const Integer scale = pow2(bits);
  const Integer t = isqrt(Integer(q.get_num() * q.get_den() * scale * scale));
  const Integer den = q.get_den() * scale;
  Rational lo(t, den);
  Rational hi(t + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi, false};
}

}  // namespace graev
