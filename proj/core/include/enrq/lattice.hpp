#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enrq/matrix.hpp"

namespace enrq {

// Finite-rank free Z-module with a nondegenerate symmetric rational Gram matrix.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(QMat gram, std::string name = "");
  explicit Lattice(const ZMat& gram, std::string name = "");

  int rank() const { return gram_.rows(); }
  const QMat& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool is_integral() const;
  bool is_even() const;
  bool is_definite() const;

  Rat pair(const QVec& v, const QVec& w) const { return pair_with(gram_, v, w); }
  Rat norm_of(const QVec& v) const { return pair(v, v); }

 private:
  QMat gram_;
  std::string name_;
};

// Sublattice of an ambient lattice; rows of basis are coordinates in the
// ambient basis. Kept in HNF so equal sublattices compare equal.
struct Sublattice {
  Lattice ambient;
  ZMat basis;

  Sublattice(Lattice amb, ZMat b, bool canonicalize = true);
  int rank() const { return basis.rows(); }
  Lattice induced() const;  // lattice with Gram basis * G * basis^T
};

// Discriminant group L^vee / L of an even integral lattice, with its
// Q/2Z-valued quadratic form and Q/Z-valued pairing.
class TorsionQuadraticForm {
 public:
  TorsionQuadraticForm() = default;
  TorsionQuadraticForm(std::vector<Int> orders, std::vector<QVec> gens, QMat ambient_gram,
                       ZMat coord_v = ZMat());

  int ngens() const { return static_cast<int>(orders_.size()); }
  const std::vector<Int>& orders() const { return orders_; }
  Int group_order() const;
  const std::vector<QVec>& generators() const { return gens_; }  // rows in L-coordinates
  const QMat& ambient_gram() const { return ambient_gram_; }

  // element from generator exponents
  QVec element(const std::vector<Int>& coords) const;
  // q(x) in Q reduced into [0, 2)
  Rat q_value(const QVec& x) const;
  // b(x, y) in Q reduced into [0, 1)
  Rat b_value(const QVec& x, const QVec& y) const;
  // coordinates of an arbitrary element of L^vee with respect to the generators
  std::vector<Int> coordinates(const QVec& x) const;

  bool is_isotropic_subgroup(const std::vector<QVec>& subgroup_gens) const;

 private:
  std::vector<Int> orders_;   // d1 | d2 | ... , all > 1
  std::vector<QVec> gens_;    // generator representatives in L^vee (L-coordinates)
  QMat ambient_gram_;
  // data for coordinates(): see implementation
  ZMat coord_v_;  // V from SNF of the Gram matrix
};

// --- operations ------------------------------------------------------------

Rat determinant(const Lattice& l);
std::pair<int, int> signature(const Lattice& l);  // (s_plus, s_minus); degenerate -> error
Lattice rescale(const Lattice& l, const Rat& r);
Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice dual(const Lattice& l);
TorsionQuadraticForm discriminant_form(const Lattice& l);

Sublattice orthogonal_complement(const Sublattice& s);
Sublattice primitive_closure(const Sublattice& s);
bool is_primitive(const Sublattice& s);

// Even integral overlattice of a + b generated by the glue vectors, which are
// pairs (x in A^vee, y in B^vee) generating an isotropic subgroup of the sum
// of the discriminant forms.
struct Overlattice {
  Lattice lattice;
  ZMat a_in_c;  // rows: basis of A in C-coordinates
  ZMat b_in_c;
  QMat c_in_ab;  // rows: basis of C in (A + B)-coordinates
};
Overlattice overlattice_from_glue(const Lattice& a, const Lattice& b,
                                  const std::vector<std::pair<QVec, QVec>>& glue);

// --- named lattices ---------------------------------------------------------

Lattice hyperbolic_U();
Lattice root_A(int n);  // positive definite
Lattice root_D(int n);
Lattice root_E(int n);  // n in {6,7,8}
Lattice L10();          // U + E8(-1)
Lattice lattice_N();    // U + U(2) + E8(-2)
Lattice gamma16();      // even negative-definite unimodular with root system D16(-1)

// --- serialization ----------------------------------------------------------

std::string lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const std::string& text);

}  // namespace enrq
