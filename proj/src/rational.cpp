#include "hecke_atlas/rational.hpp"

#include <charconv>
#include <cmath>

#include "hecke_atlas/error.hpp"

namespace hecke_atlas {

std::string to_fraction_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(const std::string& text, const std::string& whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw InputError("not a fraction: \"" + whole + "\"");
  return value;
}

bool exact_isqrt(std::int64_t v, std::int64_t& root) {
  if (v < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c) {
    if (c * c == v) {
      root = c;
      return true;
    }
  }
  return false;
}

}  // namespace

Rational parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

bool exact_sqrt(const Rational& r, Rational& root) {
  std::int64_t n = 0, d = 0;
  if (!exact_isqrt(r.numerator(), n) || !exact_isqrt(r.denominator(), d)) return false;
  root = Rational(n, d);
  return true;
}

}  // namespace hecke_atlas
