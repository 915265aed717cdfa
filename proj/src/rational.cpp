#include "gridramsey/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gridramsey {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("expected NUM/DEN rational, got '" + std::string(text) + "'");
  Rational q{Integer{std::string(num[0] == '+' ? num.substr(1) : num)}, Integer{std::string(den)}};
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Integer ipow(unsigned long base, unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

Rational qpow(const Rational& base, unsigned long exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out{num, den};
  out.canonicalize();
  return out;
}

Rational qpow_signed(unsigned long base, long exponent) {
  if (exponent >= 0) return Rational{ipow(base, static_cast<unsigned long>(exponent))};
  Rational out{Integer{1}, ipow(base, static_cast<unsigned long>(-exponent))};
  out.canonicalize();
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string to_decimal(const Rational& value, int significant_digits) {
  if (value == 0) return "0";
  // Enough binary precision for the integer part plus the requested digits.
  const auto bits = mpz_sizeinbase(value.get_num_mpz_t(), 2) + mpz_sizeinbase(value.get_den_mpz_t(), 2) + 64 +
                    static_cast<std::size_t>(significant_digits) * 4;
  mpf_class f(value, bits);
  mp_exp_t exponent = 0;
  char* raw = mpf_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(significant_digits), f.get_mpf_t());
  std::string digits(raw);
  void (*free_fn)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(raw, std::char_traits<char>::length(raw) + 1);

  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  while (digits.size() < static_cast<std::size_t>(significant_digits)) digits.push_back('0');
  std::ostringstream out;
  out << sign << digits[0] << '.' << digits.substr(1) << 'e' << (exponent - 1 >= 0 ? "+" : "") << (exponent - 1);
  return out.str();
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace gridramsey
