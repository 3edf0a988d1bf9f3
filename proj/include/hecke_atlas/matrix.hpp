#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke_atlas/rational.hpp"

namespace hecke_atlas {

/// Dense square matrix over exact rationals. Sizes stay small (<= 12) so no
/// attempt is made at blocking.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& d);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix scaled(const Rational& c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& b) const = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diag(const std::vector<Matrix>& blocks);
/// [[0, g], [c*g, 0]].
Matrix hyperbolic(const Matrix& g, const Rational& c);

/// Inverse of a diagonal matrix with nonzero diagonal.
Matrix diagonal_inverse(const Matrix& d);

/// log of a unipotent matrix and exp of a nilpotent one, by the finite series.
Matrix unipotent_log(const Matrix& u);
Matrix nilpotent_exp(const Matrix& n);

}  // namespace hecke_atlas
