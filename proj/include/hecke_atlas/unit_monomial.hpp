#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hecke_atlas/rational.hpp"

namespace hecke_atlas {

/// An exact value c * q^e with c = exp(2 pi i * root) a root of unity and e a
/// half-integer. This is the range of the f-invariant of an inertial orbit.
class UnitMonomial {
 public:
  UnitMonomial() = default;
  UnitMonomial(Rational root, int twice_q_exponent);

  static UnitMonomial one() { return {}; }
  static UnitMonomial minus_one() { return {Rational(1, 2), 0}; }
  static UnitMonomial root_of_unity(std::int64_t num, std::int64_t den) {
    return {Rational(num, den), 0};
  }
  static UnitMonomial q_power(int twice_q_exponent) { return {Rational(0), twice_q_exponent}; }

  /// In [0, 1), reduced.
  const Rational& root() const { return root_; }
  int twice_q_exponent() const { return twice_qexp_; }

  UnitMonomial inverse() const;
  UnitMonomial operator*(const UnitMonomial& other) const;
  UnitMonomial pow(std::int64_t e) const;

  bool is_one() const { return root_.numerator() == 0 && twice_qexp_ == 0; }
  bool is_minus_one() const { return root_ == Rational(1, 2) && twice_qexp_ == 0; }
  bool is_sign() const { return is_one() || is_minus_one(); }

  /// Serialized forms: root as "a/b", q-exponent as "c/2".
  std::string root_string() const;
  std::string qexp_string() const;
  /// Compact human form: "1", "-1", "e(1/4)", "e(1/4)q^(3/2)".
  std::string to_string() const;

  bool operator==(const UnitMonomial& other) const = default;
  std::strong_ordering operator<=>(const UnitMonomial& other) const;

 private:
  Rational root_{0};
  int twice_qexp_ = 0;
};

/// Parses the JSON string pair used in parameter files.
UnitMonomial parse_unit_monomial(const std::string& root, const std::string& qexp);

}  // namespace hecke_atlas
