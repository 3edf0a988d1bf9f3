#include "hecke_atlas/unit_monomial.hpp"

#include "hecke_atlas/error.hpp"

namespace hecke_atlas {

namespace {

Rational reduce_mod_one(Rational r) {
  auto whole = r.numerator() / r.denominator();
  r -= whole;
  if (r < 0) r += 1;
  return r;
}

std::string half_string(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return "(" + std::to_string(twice) + "/2)";
}

}  // namespace

UnitMonomial::UnitMonomial(Rational root, int twice_q_exponent)
    : root_(reduce_mod_one(root)), twice_qexp_(twice_q_exponent) {}

UnitMonomial UnitMonomial::inverse() const { return {-root_, -twice_qexp_}; }

UnitMonomial UnitMonomial::operator*(const UnitMonomial& other) const {
  return {root_ + other.root_, twice_qexp_ + other.twice_qexp_};
}

UnitMonomial UnitMonomial::pow(std::int64_t e) const {
  return {root_ * e, static_cast<int>(twice_qexp_ * e)};
}

std::string UnitMonomial::root_string() const { return to_fraction_string(root_); }

std::string UnitMonomial::qexp_string() const { return std::to_string(twice_qexp_) + "/2"; }

std::string UnitMonomial::to_string() const {
  std::string out;
  if (root_.numerator() == 0) {
    out = twice_qexp_ == 0 ? "1" : "";
  } else if (root_ == Rational(1, 2)) {
    out = twice_qexp_ == 0 ? "-1" : "-";
  } else {
    out = "e(" + to_fraction_string(root_) + ")";
  }
  if (twice_qexp_ != 0) out += "q^" + half_string(twice_qexp_);
  return out;
}

std::strong_ordering UnitMonomial::operator<=>(const UnitMonomial& other) const {
  if (root_ != other.root_) return root_ < other.root_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return twice_qexp_ <=> other.twice_qexp_;
}

UnitMonomial parse_unit_monomial(const std::string& root, const std::string& qexp) {
  Rational r = parse_fraction(root);
  Rational e = parse_fraction(qexp) * 2;
  if (e.denominator() != 1) throw InputError("q-exponent must be a half-integer: \"" + qexp + "\"");
  return {r, static_cast<int>(e.numerator())};
}

}  // namespace hecke_atlas
