#include "plumbing/rational.hpp"

#include <stdexcept>

#include "plumbing/errors.hpp"

namespace plumbing {

Integer floor_int(const Rational& r) {
  Integer q = numer(r) / denom(r);  // mpz division truncates toward zero
  if (r < 0 && q * denom(r) != numer(r)) --q;
  return q;
}

Integer ceil_int(const Rational& r) { return -floor_int(-r); }

Integer round_int(const Rational& r) {
  if (r >= 0) return floor_int(r + Rational(1, 2));
  return -floor_int(-r + Rational(1, 2));
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw MathError(MathError::Code::domain, "isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

std::string to_fraction_string(const Rational& r) {
  return numer(r).str() + "/" + denom(r).str();
}

Rational parse_fraction(std::string_view text) {
  auto bad = [&] { return ParseError("malformed fraction \"" + std::string(text) + "\""); };
  if (text.empty()) throw bad();
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
  }
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) throw bad();
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(Integer(num), d);
}

}  // namespace plumbing
