#include "jacobi_walk/rational.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace jacobi_walk {

std::string to_fraction_string(const BigRational& q) {
  // mpq_class::get_str already omits "/1"; canonicalize defensively in case
  // a caller built the value from raw parts.
  BigRational c(q);
  c.canonicalize();
  return c.get_str(10);
}

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

BigRational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos++]);
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos++]);
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) bad(text);
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    long e = 0;
    const char* first = text.data() + pos;
    if (pos < text.size() && text[pos] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), e);
    if (ec != std::errc() || ptr == first) bad(text);
    pos = static_cast<std::size_t>(ptr - text.data());
    exponent += e;
  }
  if (pos != text.size()) bad(text);
  if (exponent > 4096 || exponent < -4096) bad(text);

  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  BigRational out = exponent < 0 ? BigRational(num, scale) : BigRational(num * scale);
  out.canonicalize();
  return negative ? BigRational(-out) : out;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  if (text.empty()) bad(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  auto is_integer = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) bad(text);
  mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den[0] == '+' ? den.substr(1) : den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  BigRational out(p, q);
  out.canonicalize();
  return out;
}

BigRational ratio(long p, long q) {
  if (q == 0) throw std::invalid_argument("ratio: zero denominator");
  BigRational out{mpz_class(p), mpz_class(q)};
  out.canonicalize();
  return out;
}

BigRational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(f);
}

std::string to_decimal_string(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buf.data(), ptr);
}

}  // namespace jacobi_walk
