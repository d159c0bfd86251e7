#include "probdef/rational.hpp"

#include <cctype>

#include "probdef/error.hpp"

namespace probdef {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const std::string shown(token);
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    auto num = token.substr(0, slash);
    auto den = token.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorKind::kSyntax, "malformed rational '" + shown + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw Error(ErrorKind::kDenominatorZero, "'" + shown + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = token.find('.'); dot != std::string_view::npos) {
    auto whole = token.substr(0, dot);
    auto frac = token.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw Error(ErrorKind::kSyntax, "malformed decimal '" + shown + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = whole.empty() ? mpz_class(0) : parse_integer(whole);
    Rational r(w * scale + parse_integer(frac), scale);
    r.canonicalize();
    return r;
  }
  if (!all_digits(token)) {
    throw Error(ErrorKind::kSyntax, "malformed number '" + shown + "'");
  }
  return Rational(parse_integer(token));
}

std::string to_compact_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const bool negative = value < 0;
  Rational scaled = abs(value) * scale;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  // Compare 2r against the denominator to decide rounding direction.
  const mpz_class twice = 2 * r;
  const int order = cmp(twice, mpz_class(scaled.get_den()));
  if (order > 0 || (order == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string digits = q.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && q != 0) digits.insert(0, "-");
  return digits;
}

Rational round_half_up(const Rational& value, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Rational shifted = value * scale + Rational(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  Rational out(q, scale);
  out.canonicalize();
  return out;
}

}  // namespace probdef
