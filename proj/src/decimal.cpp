#include "chebcert/decimal.hpp"

#include <stdexcept>

namespace chebcert {

DecimalString round_decimal(const Rational& x, int digits) {
  if (digits < 1) throw std::invalid_argument("round_decimal: digits must be >= 1");
  const bool neg = x.sign() < 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  // |x| * 10^digits = q + r/den with 0 <= r < den
  mpz_class n = ::abs(x.num()) * scale;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), x.den().get_mpz_t());

  const int half = cmp(mpz_class(2 * r), x.den());
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  mpz_class ip = q / scale;
  mpz_class fp = q % scale;
  std::string frac = fp.get_str();
  frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');

  std::string text = ip.get_str() + "." + frac;
  if (neg && q != 0) text.insert(0, "-");
  return DecimalString{text, digits};
}

DecimalString round_decimal(const ExtReal& x, int digits) {
  if (digits < 1) throw std::invalid_argument("round_decimal: digits must be >= 1");
  if (x.precision_digits() < digits + 8) {
    throw std::invalid_argument(
        "round_decimal: working precision must be at least digits + 8");
  }
  return round_decimal(x.to_rational(), digits);
}

Rational parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_decimal: empty string");
  std::string s = text;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  const auto dot = s.find('.');
  std::string ip = dot == std::string::npos ? s : s.substr(0, dot);
  std::string fp = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (ip.empty() && fp.empty()) throw std::invalid_argument("parse_decimal: no digits");
  if (ip.find_first_not_of("0123456789") != std::string::npos ||
      fp.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("parse_decimal: invalid character in \"" + text + "\"");
  }
  mpz_class digits(ip + fp, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
  Rational r{digits, den};
  return neg ? -r : r;
}

}  // namespace chebcert
