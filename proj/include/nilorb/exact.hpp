#pragma once

// Exact linear algebra over Q and Q(i): dense matrices, null spaces of
// rational linear systems, and inertia of Hermitian matrices by congruence.
// All arithmetic is exact; nothing here uses floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilorb {

using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) { return x.sign(); }

// Element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(long r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

using QI = GaussianRational;

// Dense matrix over Q(i), row major.
class CMat {
 public:
  CMat() : rows_(0), cols_(0) {}
  CMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static CMat identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = QI(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  QI& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const QI& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  CMat transpose() const {
    CMat m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  CMat conj() const {
    CMat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).conj();
    return m;
  }
  CMat conj_transpose() const { return conj().transpose(); }

  friend CMat operator+(const CMat& a, const CMat& b) {
    require_same_shape(a, b);
    CMat m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
    return m;
  }
  friend CMat operator-(const CMat& a, const CMat& b) {
    require_same_shape(a, b);
    CMat m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
    return m;
  }
  friend CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    CMat m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const QI& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_zero()) continue;
          m(i, j) += aik * b(k, j);
        }
      }
    return m;
  }
  friend CMat operator*(const QI& s, const CMat& a) {
    CMat m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = s * a.a_[k];
    return m;
  }
  friend bool operator==(const CMat& a, const CMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  QI trace() const {
    QI t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  // Kronecker product.
  static CMat kron(const CMat& a, const CMat& b) {
    CMat m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a(i, j).is_zero()) continue;
        for (std::size_t p = 0; p < b.rows_; ++p)
          for (std::size_t q = 0; q < b.cols_; ++q)
            m(i * b.rows_ + p, j * b.cols_ + q) = a(i, j) * b(p, q);
      }
    return m;
  }

  static CMat block_diag(const std::vector<CMat>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows(), c += b.cols();
    CMat m(r, c);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
      ro += b.rows(), co += b.cols();
    }
    return m;
  }

 private:
  static void require_same_shape(const CMat& a, const CMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_, cols_;
  std::vector<QI> a_;
};

inline CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

// Inverse of a square matrix over Q(i) by Gauss-Jordan elimination.
inline CMat qi_inverse(const CMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("qi_inverse: matrix must be square");
  const std::size_t n = m.rows();
  CMat a = m, inv = CMat::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::invalid_argument("qi_inverse: singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    const QI p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / p;
      inv(col, j) = inv(col, j) / p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const QI f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

// Rank of a rational matrix given as rows, by Gaussian elimination in place.
inline std::size_t rational_rank(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Rational p = rows[rank][col];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / p;
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Homogeneous rational linear system A x = 0 with dense rows; the unknown
// vector has `unknowns` entries.  Rows may be appended freely; duplicate or
// dependent rows are harmless.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t row_count() const { return rows_.size(); }

  std::vector<Rational>& new_row() {
    rows_.emplace_back(unknowns_);
    return rows_.back();
  }
  void add_row(std::vector<Rational> r) {
    if (r.size() != unknowns_) throw std::invalid_argument("row size mismatch");
    rows_.push_back(std::move(r));
  }

  std::size_t kernel_dimension() const {
    auto rows = rows_;
    return unknowns_ - rational_rank(rows, unknowns_);
  }

  // Basis of the kernel (each vector of length unknowns()).
  std::vector<std::vector<Rational>> kernel_basis() const {
    auto rows = rows_;
    // Reduced row echelon form, tracking pivot columns.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns_ && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[rank], rows[piv]);
      const Rational p = rows[rank][col];
      for (std::size_t c = col; c < unknowns_; ++c) rows[rank][c] /= p;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        const Rational f = rows[r][col];
        for (std::size_t c = col; c < unknowns_; ++c) rows[r][c] -= f * rows[rank][c];
      }
      pivot_col.push_back(col);
      ++rank;
    }
    std::vector<bool> is_pivot(unknowns_, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < unknowns_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> v(unknowns_);
      v[free] = 1;
      for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t unknowns_;
  std::vector<std::vector<Rational>> rows_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Inertia of a Hermitian matrix over Q(i) (real symmetric as a special
// case), by Hermitian congruence; exact, no eigenvalues involved.
inline Inertia hermitian_inertia(CMat b) {
  const std::size_t n = b.rows();
  if (b.cols() != n) throw std::invalid_argument("inertia needs a square matrix");
  if (!(b == b.conj_transpose())) throw std::invalid_argument("inertia needs a Hermitian matrix");
  std::vector<std::size_t> act(n);
  for (std::size_t i = 0; i < n; ++i) act[i] = i;
  Inertia out;
  auto congruence_add = [&](std::size_t i, std::size_t j, const QI& c) {
    // row_i += c * row_j, then col_i += conj(c) * col_j
    for (std::size_t k = 0; k < n; ++k) b(i, k) += c * b(j, k);
    for (std::size_t k = 0; k < n; ++k) b(k, i) += c.conj() * b(k, j);
  };
  while (!act.empty()) {
    std::size_t pick = act.size();
    for (std::size_t t = 0; t < act.size(); ++t)
      if (!b(act[t], act[t]).is_zero()) {
        pick = t;
        break;
      }
    if (pick == act.size()) {
      // All active diagonal entries vanish; look for an off-diagonal entry.
      std::size_t fi = 0, fj = 0;
      bool found = false;
      for (std::size_t s = 0; s < act.size() && !found; ++s)
        for (std::size_t t = s + 1; t < act.size() && !found; ++t)
          if (!b(act[s], act[t]).is_zero()) {
            fi = act[s];
            fj = act[t];
            found = true;
          }
      if (!found) {
        out.zero += act.size();
        break;
      }
      // Make the (fi,fi) entry nonzero: 2*Re(c̄·B_ij) for c = 1 or i.
      if (b(fi, fj).re != 0)
        congruence_add(fi, fj, QI(1));
      else
        congruence_add(fi, fj, QI::unit_i());
      continue;
    }
    const std::size_t p = act[pick];
    const Rational d = b(p, p).re;  // Hermitian diagonal is real
    if (d > 0)
      ++out.positive;
    else
      ++out.negative;
    for (std::size_t t = 0; t < act.size(); ++t) {
      const std::size_t r = act[t];
      if (r == p || b(r, p).is_zero()) continue;
      congruence_add(r, p, -(b(r, p) / b(p, p)));
    }
    act.erase(act.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace nilorb
