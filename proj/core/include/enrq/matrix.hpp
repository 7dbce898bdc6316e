#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "enrq/numeric.hpp"

namespace enrq {

template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : init) {
      if (static_cast<int>(r.size()) != cols_) throw DomainError("ragged matrix literal");
      for (const auto& x : r) a_.push_back(x);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat zero(int r, int c) { return Mat(r, c); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<T> row(int i) const {
    return std::vector<T>(a_.begin() + static_cast<size_t>(i) * cols_,
                          a_.begin() + static_cast<size_t>(i + 1) * cols_);
  }
  void set_row(int i, const std::vector<T>& r) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  // Lexicographic; usable as an ordering canon.
  bool operator<(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t k = 0; k < a_.size(); ++k)
      if (a_[k] != o.a_[k]) return a_[k] < o.a_[k];
    return false;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
    Mat p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        if (x == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
      }
    return p;
  }

  Mat operator+(const Mat& o) const {
    Mat s(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] + o.a_[k];
    return s;
  }
  Mat operator-(const Mat& o) const {
    Mat s(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] - o.a_[k];
    return s;
  }
  Mat operator-() const {
    Mat s(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = -a_[k];
    return s;
  }
  Mat operator*(const T& c) const {
    Mat s(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] * c;
    return s;
  }

  bool is_symmetric() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : a_) if (x != T(0)) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != T(i == j ? 1 : 0)) return false;
    return true;
  }

  const std::vector<T>& data() const { return a_; }
  std::vector<T>& data() { return a_; }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

using QMat = Mat<Rat>;
using ZMat = Mat<Int>;
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

// --- vector helpers -------------------------------------------------------

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const QVec& a, const Rat& c);
QVec row_times(const QVec& v, const QMat& m);
ZVec row_times(const ZVec& v, const ZMat& m);
Rat dot(const QVec& a, const QVec& b);
// v * G * w^T
Rat pair_with(const QMat& gram, const QVec& v, const QVec& w);
QVec to_qvec(const ZVec& v);
ZVec to_zvec(const QVec& v);  // throws if non-integral
bool is_integral(const QVec& v);
QMat to_qmat(const ZMat& m);
ZMat to_zmat(const QMat& m);  // throws if non-integral
bool is_integral(const QMat& m);
ZVec primitive_part(const ZVec& v);  // divide by gcd; first nonzero entry made positive? (kept sign)

// --- rational linear algebra ---------------------------------------------

Rat det(const QMat& m);
Int det(const ZMat& m);  // fraction-free Bareiss
QMat inverse(const QMat& m);
// Solve x * m = rhs for a single row vector; nullopt if inconsistent.
std::optional<QVec> solve_left(const QMat& m, const QVec& rhs);
// Basis (rows) of { x : x * m = 0 } over Q.
QMat left_kernel(const QMat& m);
int rank(const QMat& m);

// --- integer lattice algorithms -------------------------------------------

// Row-style Hermite normal form: returns H with the same row span over Z,
// zero rows removed, pivots positive, entries above pivots reduced into [0, pivot).
ZMat hnf(const ZMat& m);
// Also returns U with U * m = H (U unimodular when no zero rows dropped... U is r x rows).
struct HnfResult {
  ZMat h;
  ZMat u;  // u * m == h (full square unimodular; h keeps zero rows at the bottom)
};
HnfResult hnf_with_transform(const ZMat& m);

// Smith normal form: u * m * v = d, u and v unimodular, d diagonal with d1 | d2 | ...
struct SnfResult {
  ZMat d, u, v;
};
SnfResult snf(const ZMat& m);

// Saturation of the row span: basis of (row span over Q) cap Z^n, rows in HNF.
ZMat saturate_rows(const ZMat& m);

// Integer left kernel: basis of { x in Z^r : x * m = 0 }, saturated, rows in HNF.
ZMat integer_left_kernel(const ZMat& m);

// Solve x * m = rhs over Z; nullopt if no integral solution.
std::optional<ZVec> solve_left_integer(const ZMat& m, const ZVec& rhs);

// LLL on a positive definite rational Gram matrix: returns unimodular U (rows =
// reduced basis in old coordinates) with U*G*U^T reduced, delta = 99/100.
ZMat lll_gram(const QMat& gram);

}  // namespace enrq
