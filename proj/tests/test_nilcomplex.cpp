#include "doctest.h"
#include "nildga/nilcomplex.hpp"
#include "nildga/presentation.hpp"

using namespace nildga;

namespace {
GaussianRational gqi(long p, long q = 1) { return GaussianRational(Rational(0), Rational(p, q)); }
}  // namespace

TEST_CASE("build_kodaira structure constants") {
  NilComplexSpec k1 = build_kodaira(1);
  CHECK(k1.E(0, 0) == gqi(-1, 2));
  CHECK(k1.F(0, 0) == gqi(-1, 2));

  NilComplexSpec k2 = build_kodaira(2);
  CHECK(k2.E(0, 0) == gqi(-1, 2));
  CHECK(k2.E(1, 1) == gqi(-1, 2));
  CHECK(k2.E(0, 1).is_zero());
  CHECK_THROWS_AS(build_kodaira(0), std::invalid_argument);
}

TEST_CASE("spec validation rejects oversized centers") {
  // E = 0 would make every T_j central.
  std::vector<std::vector<GaussianRational>> zero;
  zero.resize(2);
  for (auto& row : zero) row.resize(2);
  CHECK_THROWS_AS(NilComplexSpec(std::move(zero)), std::invalid_argument);
}

TEST_CASE("check_abelian") {
  CHECK(check_abelian(kodaira_real_algebra(1)));
  CHECK(check_abelian(kodaira_real_algebra(2)));

  // Reversed center rotation: still abelian by direct evaluation.
  RealNilAlgebra alg = kodaira_real_algebra(1);
  alg.J[2][3] = Rational(1);   // J V = U
  alg.J[3][2] = Rational(-1);  // J U = -V
  CHECK(check_abelian(alg));

  // A J that maps X into the center violates the condition:
  // [JX, JY] = [U, -X] = 0 but [X, Y] = U.
  RealNilAlgebra bad = kodaira_real_algebra(1);
  bad.J = {{Rational(0), Rational(0), Rational(-1), Rational(0)},
           {Rational(0), Rational(0), Rational(0), Rational(-1)},
           {Rational(1), Rational(0), Rational(0), Rational(0)},
           {Rational(0), Rational(1), Rational(0), Rational(0)}};
  CHECK(!check_abelian(bad));

  // J^2 != -1 is a precondition violation.
  RealNilAlgebra notj = kodaira_real_algebra(1);
  notj.J[0][1] = Rational(1);  // breaks J^2 = -1
  CHECK_THROWS_AS(check_abelian(notj), std::invalid_argument);

  // fully abelian algebra: any J with J^2 = -1 is abelian
  RealNilAlgebra ab = kodaira_real_algebra(1);
  for (auto& bi : ab.c)
    for (auto& bj : bi)
      for (auto& bk : bj) bk = Rational(0);
  CHECK(check_abelian(ab));
}

TEST_CASE("complex_dga matches the generating lemmas for any n") {
  for (int n = 1; n <= 3; ++n) {
    DGAPresentation pres = complex_dga(build_kodaira(n));
    CHECK(pres.generator_count() == 2 * n + 2);
    for (int j = 1; j <= n; ++j) {
      std::string T = n == 1 ? "T" : "T" + std::to_string(j);
      std::string ow = n == 1 ? "ow" : "ow" + std::to_string(j);
      CHECK(differential(pres, pres.basis_element({T.c_str()})) ==
            gqi(-1, 2) * pres.basis_element({ow.c_str(), "W"}));
    }
  }

  // n = 2 named examples
  DGAPresentation p2 = complex_dga(build_kodaira(2));
  SchoutenEngine eng(p2);
  CHECK(differential(p2, p2.basis_element({"T1"})) == gqi(-1, 2) * p2.basis_element({"ow1", "W"}));
  CHECK(eng.bracket(p2.basis_element({"T2"}), p2.basis_element({"or"})) ==
        gqi(-1, 2) * p2.basis_element({"ow2"}));
}

TEST_CASE("dbar squares to zero on every basis monomial") {
  for (int n = 1; n <= 3; ++n) {
    DGAPresentation pres = complex_dga(build_kodaira(n));
    for (Monomial m : pres.basis()) CHECK(differential(pres, differential(pres, m)).is_zero());
  }
}

TEST_CASE("symplectic_dga generating data") {
  SymplecticSpec one{Rational(1), Rational(0), Rational(0), Rational(0)};
  CHECK(one.delta() == Rational(1));
  DGAPresentation p = symplectic_dga(one);
  CHECK(differential(p, p.basis_element({"gam"})) ==
        GaussianRational(Rational(-1)) * p.basis_element({"ap", "bp"}));
  CHECK(differential(p, p.basis_element({"ap"})).is_zero());
  SchoutenEngine eng(p);
  CHECK(eng.bracket(p.basis_element({"gam"}), p.basis_element({"del"})) == p.basis_element({"ap"}));

  SymplecticSpec three{Rational(2), Rational(0), Rational(1), Rational(0)};
  CHECK(three.delta() == Rational(3));
  DGAPresentation p3 = symplectic_dga(three);
  CHECK(differential(p3, p3.basis_element({"gam"})) ==
        GaussianRational(Rational(-3)) * p3.basis_element({"ap", "bp"}));

  SymplecticSpec degenerate{Rational(1), Rational(0), Rational(1), Rational(0)};
  CHECK_THROWS_AS(symplectic_dga(degenerate), std::invalid_argument);
}

TEST_CASE("contraction with the symplectic form") {
  SymplecticSpec s{Rational(2), Rational(3), Rational(5), Rational(7)};
  RealOneForm ix = contract(FrameVector::X, s);
  CHECK(ix[2] == Rational(7));   // (u1+u2) gamma
  CHECK(ix[3] == Rational(10));  // (v1+v2) delta
  RealOneForm iu = contract(FrameVector::U, s);
  CHECK(iu[0] == Rational(-7));
  CHECK(iu[1] == Rational(4));  // -(v1-v2)

  SymplecticSpec unit{Rational(1), Rational(0), Rational(0), Rational(0)};
  RealOneForm ix1 = contract(FrameVector::X, unit);
  CHECK(ix1[2] == Rational(1));
  CHECK(ix1[3] == Rational(0));

  // alpha' = -(1/delta) i(U), beta' = (1/delta) i(V) satisfy
  // d gam = -alpha^beta = -delta alpha'^beta': the alpha^beta coefficient of
  // alpha'^beta' is 1/delta.
  Rational d = s.delta();
  RealOneForm a = contract(FrameVector::U, s), b = contract(FrameVector::V, s);
  for (auto& x : a) x = -x / d;
  for (auto& x : b) x = x / d;
  Rational coeff = a[0] * b[1] - a[1] * b[0];
  CHECK(coeff == 1 / d);
}

TEST_CASE("symplectic axioms across delta signs") {
  std::vector<SymplecticSpec> samples = {
      {Rational(1), Rational(0), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0), Rational(0)},
      {Rational(2), Rational(1), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1), Rational(0)},  // delta = -1
  };
  for (const auto& s : samples) {
    CAPTURE(to_string(s.delta()));
    CHECK(verify_axioms(symplectic_dga(s)).all_pass());
  }
}
