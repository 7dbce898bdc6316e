#include <doctest.h>

#include "enrq/lattice.hpp"
#include "enrq/matrix.hpp"

using namespace enrq;

TEST_CASE("hnf and snf basics") {
  ZMat m{{Int(2), Int(4), Int(4)}, {Int(-6), Int(6), Int(12)}, {Int(10), Int(4), Int(16)}};
  SnfResult s = snf(m);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 6);
  CHECK(s.d(2, 2) == 12);
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(det(s.u)) == 1);
  CHECK(abs(det(s.v)) == 1);

  ZMat h = hnf(m);
  CHECK(h.rows() == 3);
  // row span preserved: h rows solve over Z in m rows and vice versa
  for (int i = 0; i < 3; ++i) {
    ZVec r = h.row(i);
    CHECK(solve_left_integer(m, r).has_value());
  }
}

TEST_CASE("saturation and integer kernel") {
  ZMat m{{Int(2), Int(0), Int(0)}, {Int(0), Int(3), Int(0)}};
  ZMat sat = saturate_rows(m);
  CHECK(sat.rows() == 2);
  CHECK(sat(0, 0) == 1);
  CHECK(sat(1, 1) == 1);

  ZMat k = integer_left_kernel(ZMat{{Int(1)}, {Int(1)}, {Int(2)}});
  CHECK(k.rows() == 2);
  for (int i = 0; i < k.rows(); ++i) {
    Int s = k(i, 0) + k(i, 1) + 2 * k(i, 2);
    CHECK(s == 0);
  }
}

TEST_CASE("rational det and inverse") {
  QMat m{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
  CHECK(det(m) == 3);
  QMat inv = inverse(m);
  CHECK((m * inv).is_identity());
  CHECK(det(to_zmat(m)) == 3);
}

TEST_CASE("lll reduces a stretched basis") {
  // Gram of basis (1,0),(100,1) of Z^2
  QMat g{{Rat(1), Rat(100)}, {Rat(100), Rat(10001)}};
  ZMat u = lll_gram(g);
  QMat red = to_qmat(u) * g * to_qmat(u).transpose();
  CHECK(red(0, 0) == 1);
  CHECK(red(1, 1) == 1);
  CHECK(abs(det(u)) == 1);
}

TEST_CASE("lattice determinant and signature") {
  CHECK(determinant(hyperbolic_U()) == -1);
  CHECK(signature(hyperbolic_U()) == std::pair<int, int>(1, 1));

  Lattice e8m2 = rescale(root_E(8), Rat(-2));
  CHECK(determinant(e8m2) == 256);
  CHECK(signature(e8m2) == std::pair<int, int>(0, 8));

  CHECK(determinant(root_A(2)) == 3);
  CHECK(signature(lattice_N()) == std::pair<int, int>(2, 10));
  CHECK(signature(rescale(root_A(6), Rat(-2))) == std::pair<int, int>(0, 6));
}

TEST_CASE("rescale and dual identities") {
  Lattice a2 = root_A(2);
  Lattice t = rescale(rescale(a2, Rat(-2)), Rat(-1, 2));
  CHECK(t.gram() == a2.gram());
  CHECK(dual(hyperbolic_U()).gram() == hyperbolic_U().gram());
  Lattice d = dual(a2);
  CHECK(d.gram()(0, 0) == Rat(2, 3));
  CHECK(dual(d).gram() == a2.gram());
}

TEST_CASE("direct sum dets multiply and signatures add") {
  Lattice s = direct_sum(hyperbolic_U(), rescale(hyperbolic_U(), Rat(2)));
  CHECK(determinant(s) == 4);
  CHECK(signature(s) == std::pair<int, int>(2, 2));
  Lattice n = lattice_N();
  CHECK(determinant(n) == -1024);
}

TEST_CASE("discriminant group orders") {
  auto t = discriminant_form(hyperbolic_U());
  CHECK(t.group_order() == 1);

  auto t2 = discriminant_form(rescale(hyperbolic_U(), Rat(2)));
  CHECK(t2.group_order() == 4);
  REQUIRE(t2.ngens() == 2);
  CHECK(t2.orders()[0] == 2);
  CHECK(t2.orders()[1] == 2);
  // q = 0 on generators, b(g1,g2) = 1/2
  CHECK(t2.q_value(t2.generators()[0]) == 0);
  CHECK(t2.q_value(t2.generators()[1]) == 0);
  CHECK(t2.b_value(t2.generators()[0], t2.generators()[1]) == Rat(1, 2));

  auto t3 = discriminant_form(root_A(2));
  CHECK(t3.group_order() == 3);
  CHECK(t3.q_value(t3.generators()[0]) == Rat(4, 3));
}

TEST_CASE("orthogonal complement and primitive closure") {
  Lattice amb = direct_sum(hyperbolic_U(), root_A(2));
  ZMat u_basis(2, 4);
  u_basis(0, 0) = 1;
  u_basis(1, 1) = 1;
  Sublattice u_sub(amb, u_basis);
  Sublattice comp = orthogonal_complement(u_sub);
  CHECK(comp.rank() == 2);
  CHECK(comp.induced().gram() == root_A(2).gram());
  // double complement returns the original primitive sublattice
  Sublattice cc = orthogonal_complement(comp);
  CHECK(cc.basis == u_sub.basis);

  // closure of 2U inside U
  ZMat two(2, 4);
  two(0, 0) = 2;
  two(1, 1) = 2;
  Sublattice sc(amb, two);
  CHECK(!is_primitive(sc));
  Sublattice cl = primitive_closure(sc);
  CHECK(cl.basis == u_sub.basis);
  CHECK(is_primitive(cl));
}

TEST_CASE("overlattice from glue") {
  Lattice a1a1 = direct_sum(Lattice(ZMat{{Int(2)}}), Lattice(ZMat{{Int(2)}}));
  // glue ((1/2),(1/2)) has q = 1/2 + 1/2 = 1, not 0 mod 2Z: rejected
  QVec h{Rat(1, 2)};
  CHECK_THROWS_AS(overlattice_from_glue(Lattice(ZMat{{Int(2)}}), Lattice(ZMat{{Int(2)}}),
                                        {{h, h}}),
                  DomainError);
  (void)a1a1;

  // empty glue reproduces the direct sum
  auto ov = overlattice_from_glue(hyperbolic_U(), root_A(2), {});
  CHECK(ov.lattice.gram() == direct_sum(hyperbolic_U(), root_A(2)).gram());

  // E8(-2)+E8(-2)-style toy: glue two A2's into the hexagonal overlattice? A2+A2 with
  // diagonal 3-torsion glue gives an even overlattice of index 3 and det 1? det 9/9=1
  Lattice a2 = root_A(2);
  auto t = discriminant_form(a2);
  QVec g1 = t.generators()[0];
  // q(g1) = 4/3; on the negated copy q = -4/3: diagonal class is isotropic
  auto ov2 = overlattice_from_glue(a2, rescale(a2, Rat(-1)), {{g1, g1}});
  CHECK(determinant(ov2.lattice) == -1);
  CHECK(ov2.lattice.is_even());
}

TEST_CASE("gamma16 is even unimodular") {
  Lattice g = gamma16();
  CHECK(g.rank() == 16);
  CHECK(determinant(g) == 1);
  CHECK(g.is_even());
  CHECK(signature(g) == std::pair<int, int>(0, 16));
}

TEST_CASE("lattice json round trip") {
  Lattice a2 = root_A(2);
  std::string s = lattice_to_json(a2);
  Lattice back = lattice_from_json(s);
  CHECK(back.gram() == a2.gram());
  CHECK(back.name() == "A2");

  Lattice d = dual(a2);
  Lattice back2 = lattice_from_json(lattice_to_json(d));
  CHECK(back2.gram() == d.gram());
}
