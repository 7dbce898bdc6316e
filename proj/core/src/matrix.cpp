#include "enrq/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace enrq {

QVec operator+(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
QVec operator-(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
QVec operator*(const QVec& a, const Rat& c) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

QVec row_times(const QVec& v, const QMat& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw DomainError("row_times shape mismatch");
  QVec r(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

ZVec row_times(const ZVec& v, const ZMat& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw DomainError("row_times shape mismatch");
  ZVec r(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat pair_with(const QMat& gram, const QVec& v, const QVec& w) {
  return dot(row_times(v, gram), w);
}

QVec to_qvec(const ZVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

ZVec to_zvec(const QVec& v) {
  ZVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = to_int(v[i]);
  return r;
}

bool is_integral(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return is_integer(q); });
}

QMat to_qmat(const ZMat& m) {
  QMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

ZMat to_zmat(const QMat& m) {
  ZMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = to_int(m(i, j));
  return r;
}

bool is_integral(const QMat& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rat& q) { return is_integer(q); });
}

ZVec primitive_part(const ZVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  ZVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

Rat det(const QMat& m) {
  if (m.rows() != m.cols()) throw DomainError("det of non-square matrix");
  int n = m.rows();
  QMat a = m;
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) != 0) { p = r; break; }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    Rat inv = 1 / a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rat f = a(r, c) * inv;
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return d;
}

Int det(const ZMat& m) {
  if (m.rows() != m.cols()) throw DomainError("det of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  ZMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) != 0) { p = r; break; }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int j = c + 1; j < n; ++j) {
        a(r, j) = (a(c, c) * a(r, j) - a(r, c) * a(c, j)) / prev;
      }
      a(r, c) = 0;
    }
    prev = a(c, c);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  int n = m.rows();
  QMat a = m;
  QMat inv = QMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) != 0) { p = r; break; }
    if (p < 0) throw DomainError("singular matrix");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rat piv = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rat f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Gauss on the transposed system: x * m = rhs  <=>  m^T x^T = rhs^T.
std::optional<QVec> solve_left(const QMat& m, const QVec& rhs) {
  int n = m.rows(), c = m.cols();
  if (static_cast<int>(rhs.size()) != c) throw DomainError("solve_left shape mismatch");
  // augmented: columns of m^T are rows of m
  QMat a(c, n + 1);
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = m(j, i);
    a(i, n) = rhs[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < c; ++col) {
    int p = -1;
    for (int r = row; r < c; ++r)
      if (a(r, col) != 0) { p = r; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j <= n; ++j) std::swap(a(p, j), a(row, j));
    Rat piv = a(row, col);
    for (int j = 0; j <= n; ++j) a(row, j) /= piv;
    for (int r = 0; r < c; ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rat f = a(r, col);
      for (int j = 0; j <= n; ++j) a(r, j) -= f * a(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < c; ++r)
    if (a(r, n) != 0) return std::nullopt;
  QVec x(n, Rat(0));
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = a(r, n);
  return x;
}

QMat left_kernel(const QMat& m) {
  // Row-reduce augmented [m | I] tracking row operations; kernel rows are the
  // transform rows whose reduced m-part is zero.
  int n = m.rows(), c = m.cols();
  QMat a = m;
  QMat u = QMat::identity(n);
  int row = 0;
  for (int col = 0; col < c && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (a(r, col) != 0) { p = r; break; }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < c; ++j) std::swap(a(p, j), a(row, j));
      for (int j = 0; j < n; ++j) std::swap(u(p, j), u(row, j));
    }
    Rat piv = a(row, col);
    for (int r = row + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rat f = a(r, col) / piv;
      for (int j = 0; j < c; ++j) a(r, j) -= f * a(row, j);
      for (int j = 0; j < n; ++j) u(r, j) -= f * u(row, j);
    }
    ++row;
  }
  QMat k(n - row, n);
  for (int r = row; r < n; ++r)
    for (int j = 0; j < n; ++j) k(r - row, j) = u(r, j);
  return k;
}

int rank(const QMat& m) {
  return m.rows() - left_kernel(m).rows();
}

namespace {

// In-place row HNF with optional transform accumulation.
void hnf_inplace(ZMat& a, ZMat* u) {
  int n = a.rows(), c = a.cols();
  int row = 0;
  for (int col = 0; col < c && row < n; ++col) {
    // gcd elimination below (row, col)
    while (true) {
      int p = -1;
      Int best;
      for (int r = row; r < n; ++r) {
        if (a(r, col) == 0) continue;
        Int v = abs(a(r, col));
        if (p < 0 || v < best) { p = r; best = v; }
      }
      if (p < 0) break;
      if (p != row) {
        for (int j = 0; j < c; ++j) std::swap(a(p, j), a(row, j));
        if (u)
          for (int j = 0; j < u->cols(); ++j) std::swap((*u)(p, j), (*u)(row, j));
      }
      bool done = true;
      for (int r = row + 1; r < n; ++r) {
        if (a(r, col) == 0) continue;
        Int q = floor_div(a(r, col), a(row, col));
        if (q != 0) {
          for (int j = 0; j < c; ++j) a(r, j) -= q * a(row, j);
          if (u)
            for (int j = 0; j < u->cols(); ++j) (*u)(r, j) -= q * (*u)(row, j);
        }
        if (a(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) {
      for (int j = 0; j < c; ++j) a(row, j) = -a(row, j);
      if (u)
        for (int j = 0; j < u->cols(); ++j) (*u)(row, j) = -(*u)(row, j);
    }
    // reduce entries above the pivot
    for (int r = 0; r < row; ++r) {
      Int q = floor_div(a(r, col), a(row, col));
      if (q != 0) {
        for (int j = 0; j < c; ++j) a(r, j) -= q * a(row, j);
        if (u)
          for (int j = 0; j < u->cols(); ++j) (*u)(r, j) -= q * (*u)(row, j);
      }
    }
    ++row;
  }
}

}  // namespace

ZMat hnf(const ZMat& m) {
  ZMat a = m;
  hnf_inplace(a, nullptr);
  // drop zero rows
  int nz = 0;
  for (int r = 0; r < a.rows(); ++r) {
    bool zero = true;
    for (int j = 0; j < a.cols(); ++j)
      if (a(r, j) != 0) { zero = false; break; }
    if (!zero) ++nz;
  }
  ZMat h(nz, a.cols());
  int k = 0;
  for (int r = 0; r < a.rows(); ++r) {
    bool zero = true;
    for (int j = 0; j < a.cols(); ++j)
      if (a(r, j) != 0) { zero = false; break; }
    if (!zero) {
      for (int j = 0; j < a.cols(); ++j) h(k, j) = a(r, j);
      ++k;
    }
  }
  return h;
}

HnfResult hnf_with_transform(const ZMat& m) {
  ZMat a = m;
  ZMat u = ZMat::identity(m.rows());
  hnf_inplace(a, &u);
  return {a, u};
}

SnfResult snf(const ZMat& m) {
  int n = m.rows(), c = m.cols();
  int lim = std::min(n, c);
  ZMat d = m;
  ZMat u = ZMat::identity(n);
  ZMat v = ZMat::identity(c);
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c; ++k) std::swap(d(i, k), d(j, k));
    for (int k = 0; k < n; ++k) std::swap(u(i, k), u(j, k));
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(d(k, i), d(k, j));
    for (int k = 0; k < c; ++k) std::swap(v(k, i), v(k, j));
  };
  auto row_sub = [&](int i, int j, const Int& q) {  // row_i -= q * row_j
    if (q == 0) return;
    for (int k = 0; k < c; ++k) d(i, k) -= q * d(j, k);
    for (int k = 0; k < n; ++k) u(i, k) -= q * u(j, k);
  };
  auto col_sub = [&](int i, int j, const Int& q) {  // col_i -= q * col_j
    if (q == 0) return;
    for (int k = 0; k < n; ++k) d(k, i) -= q * d(k, j);
    for (int k = 0; k < c; ++k) v(k, i) -= q * v(k, j);
  };
  auto row_neg = [&](int i) {
    for (int k = 0; k < c; ++k) d(i, k) = -d(i, k);
    for (int k = 0; k < n; ++k) u(i, k) = -u(i, k);
  };

  for (int t = 0; t < lim; ++t) {
    // locate smallest nonzero entry
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < n; ++i)
      for (int j = t; j < c; ++j) {
        if (d(i, j) == 0) continue;
        Int a_ = abs(d(i, j));
        if (pi < 0 || a_ < best) { pi = i; pj = j; best = a_; }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        row_sub(i, t, q);
        if (d(i, t) != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        col_sub(j, t, q);
        if (d(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (d(t, t) < 0) row_neg(t);
    // divisibility pass: d(t,t) must divide every later entry
    bool restart = false;
    for (int i = t + 1; i < n && !restart; ++i)
      for (int j = t + 1; j < c && !restart; ++j) {
        if (d(i, j) % d(t, t) != 0) {
          // add row i to row t, then redo elimination at t
          row_sub(t, i, Int(-1));
          restart = true;
        }
      }
    if (restart) { --t; continue; }
  }
  return {d, u, v};
}

ZMat saturate_rows(const ZMat& m) {
  // rows of V^-1 spanning: saturation = preimage basis of the projection.
  // Simpler: saturation = integer left kernel of the integer left kernel... use SNF:
  // m = U^-1 D V^-1; row span over Q = span of first r rows of V^-1 scaled by d_i.
  // Saturation basis = first r rows of V^-1.
  SnfResult s = snf(m);
  int r = 0;
  int lim = std::min(s.d.rows(), s.d.cols());
  for (int i = 0; i < lim; ++i)
    if (s.d(i, i) != 0) ++r;
  QMat vq = to_qmat(s.v);
  QMat vinv = inverse(vq);
  ZMat out(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = to_int(vinv(i, j));
  return hnf(out);
}

ZMat integer_left_kernel(const ZMat& m) {
  SnfResult s = snf(m);  // u*m*v = d
  int lim = std::min(s.d.rows(), s.d.cols());
  int r = 0;
  for (int i = 0; i < lim; ++i)
    if (s.d(i, i) != 0) ++r;
  // rows of u beyond r satisfy row * m = 0 (since (u*m) has those rows zero: u*m = d*v^-1)
  int k = s.u.rows() - r;
  ZMat out(k, m.rows());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m.rows(); ++j) out(i, j) = s.u(r + i, j);
  return hnf(out);
}

std::optional<ZVec> solve_left_integer(const ZMat& m, const ZVec& rhs) {
  // x * m = rhs. With u*m*v = d: x*m = rhs <=> (x*u^-1) d v^-1 = rhs <=> y d = rhs*v.
  SnfResult s = snf(m);
  ZVec rv = row_times(rhs, s.v);
  int n = m.rows();
  ZVec y(n, Int(0));
  int lim = std::min(s.d.rows(), s.d.cols());
  for (int j = 0; j < static_cast<int>(rv.size()); ++j) {
    if (j < lim && s.d(j, j) != 0) {
      if (rv[j] % s.d(j, j) != 0) return std::nullopt;
      y[j] = rv[j] / s.d(j, j);
    } else if (rv[j] != 0) {
      return std::nullopt;
    }
  }
  return row_times(y, s.u);
}

ZMat lll_gram(const QMat& gram) {
  int n = gram.rows();
  if (n == 0) return ZMat::identity(0);
  ZMat u = ZMat::identity(n);
  // current Gram of the working basis
  QMat g = gram;
  // exact Gram-Schmidt data: B[i] = squared length of b_i^*, mu(i,j) for j<i
  QMat mu(n, n);
  QVec B(n, Rat(0));
  auto recompute_gs = [&]() {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        Rat s = g(i, j);
        for (int k = 0; k < j; ++k) s -= mu(i, k) * mu(j, k) * B[k];
        mu(i, j) = (B[j] == 0) ? Rat(0) : s / B[j];
      }
      Rat s = g(i, i);
      for (int k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * B[k];
      B[i] = s;
      if (B[i] <= 0) throw DomainError("lll_gram: Gram not positive definite");
    }
  };
  auto row_op = [&](int i, int j, const Int& q) {  // b_i -= q b_j
    if (q == 0) return;
    for (int k = 0; k < n; ++k) u(i, k) -= q * u(j, k);
  };
  auto full_gram = [&]() {
    QMat uq = to_qmat(u);
    g = uq * gram * uq.transpose();
  };
  const Rat delta(99, 100);
  full_gram();
  recompute_gs();
  int k = 1;
  while (k < n) {
    // size reduction against k-1..0
    for (int j = k - 1; j >= 0; --j) {
      Rat m_ = mu(k, j);
      Int q = floor_rat(m_ + Rat(1, 2));
      if (q != 0) {
        row_op(k, j, q);
        full_gram();
        recompute_gs();
      }
    }
    if (B[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * B[k - 1]) {
      ++k;
    } else {
      for (int j = 0; j < n; ++j) std::swap(u(k, j), u(k - 1, j));
      full_gram();
      recompute_gs();
      k = std::max(k - 1, 1);
    }
  }
  return u;
}

}  // namespace enrq
