#include "hecke_atlas/matrix.hpp"

#include "hecke_atlas/error.hpp"

namespace hecke_atlas {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (n_ != b.n_) throw ContractError("matrix size mismatch");
  Matrix c(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x.numerator() == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (b(k, j).numerator() != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix Matrix::operator+(const Matrix& b) const {
  if (n_ != b.n_) throw ContractError("matrix size mismatch");
  Matrix c(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix Matrix::operator-(const Matrix& b) const { return *this + b.scaled(Rational(-1)); }

Matrix Matrix::scaled(const Rational& c) const {
  Matrix m(*this);
  for (auto& x : m.a_) x *= c;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x.numerator() != 0) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += " ";
      const auto& x = (*this)(i, j);
      out += x.denominator() == 1 ? std::to_string(x.numerator()) : to_fraction_string(x);
    }
    out += "]\n";
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b.size();
  Matrix c(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).numerator() == 0) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) c(i * m + k, j * m + l) = a(i, j) * b(k, l);
    }
  return c;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  Matrix c(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return c;
}

Matrix hyperbolic(const Matrix& g, const Rational& c) {
  const std::size_t n = g.size();
  Matrix h(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      h(i, n + j) = g(i, j);
      h(n + i, j) = c * g(i, j);
    }
  return h;
}

Matrix diagonal_inverse(const Matrix& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j && d(i, j).numerator() != 0) throw ContractError("diagonal_inverse: not diagonal");
    if (d(i, i).numerator() == 0) throw ContractError("diagonal_inverse: singular");
    m(i, i) = Rational(1) / d(i, i);
  }
  return m;
}

Matrix unipotent_log(const Matrix& u) {
  const std::size_t n = u.size();
  const Matrix x = u - Matrix::identity(n);
  Matrix power = x;
  Matrix out(n);
  for (std::size_t k = 1; k <= n && !power.is_zero(); ++k) {
    out = out + power.scaled(Rational(k % 2 == 1 ? 1 : -1, static_cast<std::int64_t>(k)));
    power = power * x;
  }
  if (!power.is_zero()) throw ContractError("unipotent_log: matrix is not unipotent");
  return out;
}

Matrix nilpotent_exp(const Matrix& nil) {
  const std::size_t n = nil.size();
  Matrix out = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = (term * nil).scaled(Rational(1, static_cast<std::int64_t>(k)));
    if (term.is_zero()) return out;
    out = out + term;
  }
  if (!term.is_zero()) throw ContractError("nilpotent_exp: matrix is not nilpotent");
  return out;
}

}  // namespace hecke_atlas
