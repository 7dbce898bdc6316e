#include "enrq/lattice.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace enrq {

using nlohmann::json;

Lattice::Lattice(QMat gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  if (gram_.rows() != gram_.cols()) throw DomainError("Gram matrix must be square");
  if (!gram_.is_symmetric()) throw DomainError("Gram matrix must be symmetric");
  if (gram_.rows() > 0 && det(gram_) == 0) throw DomainError("Gram matrix must be nondegenerate");
}

Lattice::Lattice(const ZMat& gram, std::string name) : Lattice(to_qmat(gram), std::move(name)) {}

bool Lattice::is_integral() const { return enrq::is_integral(gram_); }

bool Lattice::is_even() const {
  if (!is_integral()) return false;
  for (int i = 0; i < rank(); ++i)
    if (gram_(i, i).get_num() % 2 != 0) return false;
  return true;
}

bool Lattice::is_definite() const {
  auto [p, m] = signature(*this);
  return p == 0 || m == 0;
}

Sublattice::Sublattice(Lattice amb, ZMat b, bool canonicalize) : ambient(std::move(amb)), basis(std::move(b)) {
  if (basis.cols() != ambient.rank()) throw DomainError("sublattice basis shape mismatch");
  if (canonicalize) basis = hnf(basis);
  if (basis.rows() == 0) return;
  QMat bq = to_qmat(basis);
  QMat g = bq * ambient.gram() * bq.transpose();
  if (det(g) == 0) throw DomainError("sublattice basis degenerate or dependent");
}

Lattice Sublattice::induced() const {
  QMat bq = to_qmat(basis);
  return Lattice(bq * ambient.gram() * bq.transpose());
}

Rat determinant(const Lattice& l) {
  if (l.rank() == 0) return Rat(1);
  return det(l.gram());
}

std::pair<int, int> signature(const Lattice& l) {
  // symmetric congruence diagonalization over Q
  int n = l.rank();
  QMat a = l.gram();
  int plus = 0, minus = 0;
  std::vector<bool> used(n, false);
  for (int step = 0; step < n; ++step) {
    // choose an unused index with nonzero diagonal, creating one if needed
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i] && a(i, i) != 0) { p = i; break; }
    if (p < 0) {
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i) {
        if (used[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (used[j] || j == i) continue;
          if (a(i, j) != 0) { bi = i; bj = j; break; }
        }
      }
      if (bi < 0) throw DomainError("signature: degenerate Gram matrix");
      // row/col i += row/col j makes a(i,i) = 2 a(i,j) != 0
      for (int k = 0; k < n; ++k) a(bi, k) += a(bj, k);
      for (int k = 0; k < n; ++k) a(k, bi) += a(k, bj);
      p = bi;
    }
    Rat piv = a(p, p);
    (piv > 0 ? plus : minus) += 1;
    used[p] = true;
    for (int i = 0; i < n; ++i) {
      if (used[i] || a(i, p) == 0) continue;
      Rat f = a(i, p) / piv;
      for (int k = 0; k < n; ++k) a(i, k) -= f * a(p, k);
      for (int k = 0; k < n; ++k) a(k, i) -= f * a(k, p);
    }
  }
  if (plus + minus != n) throw DomainError("signature: degenerate Gram matrix");
  return {plus, minus};
}

Lattice rescale(const Lattice& l, const Rat& r) {
  if (r == 0) throw DomainError("rescale by zero");
  return Lattice(l.gram() * r);
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  int n = a.rank(), m = b.rank();
  QMat g(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  return Lattice(std::move(g));
}

Lattice dual(const Lattice& l) { return Lattice(inverse(l.gram())); }

TorsionQuadraticForm::TorsionQuadraticForm(std::vector<Int> orders, std::vector<QVec> gens, QMat ambient_gram,
                                           ZMat coord_v)
    : orders_(std::move(orders)), gens_(std::move(gens)), ambient_gram_(std::move(ambient_gram)),
      coord_v_(std::move(coord_v)) {}

Int TorsionQuadraticForm::group_order() const {
  Int o = 1;
  for (const auto& d : orders_) o *= d;
  return o;
}

QVec TorsionQuadraticForm::element(const std::vector<Int>& coords) const {
  QVec x(ambient_gram_.rows(), Rat(0));
  for (size_t i = 0; i < coords.size(); ++i)
    x = x + gens_[i] * Rat(coords[i]);
  return x;
}

Rat TorsionQuadraticForm::q_value(const QVec& x) const {
  Rat q = pair_with(ambient_gram_, x, x);
  // reduce mod 2Z into [0,2)
  Rat two(2);
  Rat r = q - two * Rat(floor_rat(q / two));
  return r;
}

Rat TorsionQuadraticForm::b_value(const QVec& x, const QVec& y) const {
  Rat b = pair_with(ambient_gram_, x, y);
  Rat r = b - Rat(floor_rat(b));
  return r;
}

std::vector<Int> TorsionQuadraticForm::coordinates(const QVec& x) const {
  // y = x * G must be integral for x in L^vee; class of x <-> (y * V) mod D.
  QVec yq = row_times(x, ambient_gram_);
  ZVec y = to_zvec(yq);
  ZVec yv = row_times(y, coord_v_);
  std::vector<Int> coords;
  // columns of interest recorded alongside orders in discriminant_form()
  // (coord_v_ columns are aligned so that entry i corresponds to orders_[i])
  for (size_t i = 0; i < orders_.size(); ++i) {
    Int c = mod_int(yv[i], orders_[i]);
    coords.push_back(c);
  }
  return coords;
}

bool TorsionQuadraticForm::is_isotropic_subgroup(const std::vector<QVec>& subgroup_gens) const {
  for (size_t i = 0; i < subgroup_gens.size(); ++i) {
    if (q_value(subgroup_gens[i]) != 0) return false;
    for (size_t j = i + 1; j < subgroup_gens.size(); ++j)
      if (b_value(subgroup_gens[i], subgroup_gens[j]) != 0) return false;
  }
  return true;
}

TorsionQuadraticForm discriminant_form(const Lattice& l) {
  if (!l.is_even()) throw DomainError("discriminant_form requires an even integral lattice");
  ZMat g = to_zmat(l.gram());
  SnfResult s = snf(g);  // u g v = d
  int n = l.rank();
  // L^vee / L = Z^n / Z^n g; class of y in Z^n corresponds to dual vector y g^-1.
  // With y' = y v: quotient is direct sum of Z/d_i with generator images e_i v^-1 ... e_i.
  // Generator i (order d_i > 1): dual vector (e_i v^T-free): x_i = (row i of v^T?) --
  // class of x under y -> y*v coordinates: generator with coordinate e_i is y with y*v = e_i,
  // i.e. y = e_i * v^-1; dual vector x = y * g^-1.
  QMat ginv = inverse(l.gram());
  QMat vq = to_qmat(s.v);
  QMat vinv = inverse(vq);
  std::vector<Int> orders;
  std::vector<QVec> gens;
  std::vector<int> idx;
  for (int i = 0; i < n; ++i) {
    Int d = s.d(i, i);
    if (d < 0) d = -d;
    if (d > 1) {
      orders.push_back(d);
      idx.push_back(i);
    }
  }
  // reorder coord_v columns so that column k corresponds to orders[k]
  ZMat coord_v(n, static_cast<int>(idx.size()));
  for (int r = 0; r < n; ++r)
    for (size_t k = 0; k < idx.size(); ++k) coord_v(r, static_cast<int>(k)) = s.v(r, idx[k]);
  for (size_t k = 0; k < idx.size(); ++k) {
    QVec y(n, Rat(0));
    for (int j = 0; j < n; ++j) y[j] = vinv(idx[k], j);
    QVec x = row_times(y, ginv);
    gens.push_back(x);
  }
  return TorsionQuadraticForm(std::move(orders), std::move(gens), l.gram(), std::move(coord_v));
}

Sublattice orthogonal_complement(const Sublattice& s) {
  // { x in Z^n : x * (G * basis^T) = 0 }
  QMat gbT = s.ambient.gram() * to_qmat(s.basis).transpose();
  // clear denominators columnwise to make an integer matrix with same kernel
  Int scale = 1;
  for (const auto& q : gbT.data()) scale = lcm(scale, q.get_den());
  ZMat m(gbT.rows(), gbT.cols());
  for (int i = 0; i < gbT.rows(); ++i)
    for (int j = 0; j < gbT.cols(); ++j) m(i, j) = to_int(gbT(i, j) * Rat(scale));
  ZMat k = integer_left_kernel(m);
  return Sublattice(s.ambient, k);
}

Sublattice primitive_closure(const Sublattice& s) {
  return Sublattice(s.ambient, saturate_rows(s.basis));
}

bool is_primitive(const Sublattice& s) {
  return primitive_closure(s).basis == s.basis;
}

Overlattice overlattice_from_glue(const Lattice& a, const Lattice& b,
                                  const std::vector<std::pair<QVec, QVec>>& glue) {
  if (!a.is_even() || !b.is_even()) throw DomainError("overlattice_from_glue requires even lattices");
  Lattice ab = direct_sum(a, b);
  int n = ab.rank();
  // isotropy of the generated subgroup: q = 0 mod 2Z and b = 0 mod Z on generators
  std::vector<QVec> joint;
  for (const auto& [x, y] : glue) {
    QVec v(n, Rat(0));
    for (int i = 0; i < a.rank(); ++i) v[i] = x[i];
    for (int i = 0; i < b.rank(); ++i) v[a.rank() + i] = y[i];
    joint.push_back(v);
  }
  for (size_t i = 0; i < joint.size(); ++i) {
    Rat q = pair_with(ab.gram(), joint[i], joint[i]);
    Rat fr = q / 2 - Rat(floor_rat(q / 2));
    if (fr != 0) throw DomainError("glue subgroup not isotropic: q(g) = " + q.get_str() + " not in 2Z");
    for (size_t j = 0; j < joint.size(); ++j) {
      if (i == j) continue;
      Rat bb = pair_with(ab.gram(), joint[i], joint[j]);
      if (!is_integer(bb)) throw DomainError("glue subgroup not isotropic: b(g_i,g_j) not integral");
    }
  }
  // lattice generated by Z^n and the glue vectors
  Int den = 1;
  for (const auto& v : joint)
    for (const auto& q : v) den = lcm(den, q.get_den());
  ZMat gen(n + static_cast<int>(joint.size()), n);
  for (int i = 0; i < n; ++i) gen(i, i) = den;
  for (size_t r = 0; r < joint.size(); ++r)
    for (int j = 0; j < n; ++j) gen(n + static_cast<int>(r), j) = to_int(joint[r][j] * Rat(den));
  ZMat h = hnf(gen);  // n rows, basis of den * C
  if (h.rows() != n) throw DomainError("overlattice basis rank defect");
  QMat c_in_ab(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c_in_ab(i, j) = Rat(h(i, j)) / Rat(den);
  QMat gc = c_in_ab * ab.gram() * c_in_ab.transpose();
  Lattice c(gc);
  if (!c.is_even()) throw DomainError("glue produced a non-even overlattice");
  // embeddings: rows of A (resp B) basis in C coordinates
  QMat cinv = inverse(c_in_ab);
  ZMat a_in_c(a.rank(), n), b_in_c(b.rank(), n);
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < n; ++j) a_in_c(i, j) = to_int(cinv(i, j));
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < n; ++j) b_in_c(i, j) = to_int(cinv(a.rank() + i, j));
  return {std::move(c), std::move(a_in_c), std::move(b_in_c), std::move(c_in_ab)};
}

// --- named lattices ---------------------------------------------------------

Lattice hyperbolic_U() {
  return Lattice(ZMat{{Int(0), Int(1)}, {Int(1), Int(0)}}, "U");
}

Lattice root_A(int n) {
  if (n < 1) throw DomainError("A_n needs n >= 1");
  ZMat g(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) {
      g(i, i + 1) = -1;
      g(i + 1, i) = -1;
    }
  }
  return Lattice(g, "A" + std::to_string(n));
}

Lattice root_D(int n) {
  if (n < 4) throw DomainError("D_n needs n >= 4");
  // simple roots: e1-e2, ..., e_{n-1}-e_n, e_{n-1}+e_n
  ZMat g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  for (int i = 0; i + 1 < n - 1; ++i) {
    g(i, i + 1) = -1;
    g(i + 1, i) = -1;
  }
  g(n - 3, n - 1) = -1;
  g(n - 1, n - 3) = -1;
  return Lattice(g, "D" + std::to_string(n));
}

Lattice root_E(int n) {
  if (n < 6 || n > 8) throw DomainError("E_n needs n in {6,7,8}");
  // Bourbaki-style Dynkin diagram: chain 1-3-4-5-..., node 2 attached to 4.
  ZMat g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  auto link = [&](int i, int j) {
    g(i, j) = -1;
    g(j, i) = -1;
  };
  link(0, 2);
  link(1, 3);
  link(2, 3);
  for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
  return Lattice(g, "E" + std::to_string(n));
}

Lattice L10() {
  Lattice l = direct_sum(hyperbolic_U(), rescale(root_E(8), Rat(-1)));
  l.set_name("L10");
  return l;
}

Lattice lattice_N() {
  Lattice l = direct_sum(direct_sum(hyperbolic_U(), rescale(hyperbolic_U(), Rat(2))),
                         rescale(root_E(8), Rat(-2)));
  l.set_name("N");
  return l;
}

Lattice gamma16() {
  // index-2 overlattice of D16(-1) generated by a half-spinor vector
  Lattice d16 = rescale(root_D(16), Rat(-1));
  // coordinates of e_i in the simple-root basis: solve; instead glue with the
  // dual element of order 2 and q = 0: the half-spin class s with 2s in D16.
  TorsionQuadraticForm t = discriminant_form(d16);
  // find an order-2 ... D16 disc group is Z/2 x Z/2 (n even): pick the isotropic nonzero class
  std::vector<QVec> classes;
  int k = t.ngens();
  std::vector<std::vector<Int>> all;
  std::vector<Int> cur(k, Int(0));
  while (true) {
    all.push_back(cur);
    int i = 0;
    while (i < k) {
      cur[i] += 1;
      if (cur[i] < t.orders()[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  for (const auto& co : all) {
    bool zero = std::all_of(co.begin(), co.end(), [](const Int& x) { return x == 0; });
    if (zero) continue;
    QVec x = t.element(co);
    if (t.q_value(x) == 0) classes.push_back(x);
  }
  if (classes.empty()) throw Error("gamma16: no isotropic glue class found");
  QVec g = classes.front();
  int n = d16.rank();
  Int den = 1;
  for (const auto& q : g) den = lcm(den, q.get_den());
  ZMat gen(n + 1, n);
  for (int i = 0; i < n; ++i) gen(i, i) = den;
  for (int j = 0; j < n; ++j) gen(n, j) = to_int(g[j] * Rat(den));
  ZMat h = hnf(gen);
  QMat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = Rat(h(i, j)) / Rat(den);
  Lattice out(c * d16.gram() * c.transpose());
  out.set_name("Gamma16");
  if (!out.is_even() || determinant(out) != 1) throw Error("gamma16 construction failed");
  return out;
}

// --- serialization ----------------------------------------------------------

namespace {
json rat_to_json(const Rat& q) {
  if (is_integer(q) && mpz_fits_slong_p(q.get_num().get_mpz_t()))
    return json(q.get_num().get_si());
  return json(q.get_str());
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw DomainError("bad rational in JSON");
}
}  // namespace

std::string lattice_to_json(const Lattice& l) {
  json j;
  json rows = json::array();
  for (int i = 0; i < l.rank(); ++i) {
    json row = json::array();
    for (int k = 0; k < l.rank(); ++k) row.push_back(rat_to_json(l.gram()(i, k)));
    rows.push_back(row);
  }
  j["gram"] = rows;
  if (!l.name().empty()) j["name"] = l.name();
  return j.dump(2);
}

Lattice lattice_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("gram") || !j["gram"].is_array()) throw DomainError("lattice JSON: missing gram");
  auto rows = j["gram"];
  int n = static_cast<int>(rows.size());
  QMat g(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw DomainError("lattice JSON: gram not square");
    for (int k = 0; k < n; ++k) g(i, k) = rat_from_json(rows[i][k]);
  }
  std::string name = j.value("name", "");
  return Lattice(std::move(g), name);
}

}  // namespace enrq
