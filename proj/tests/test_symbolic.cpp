#include "doctest.h"
#include "nildga/symbolic.hpp"

using namespace nildga;
using namespace nildga::symbolic;

namespace {

GaussianRational gqi(long p, long q = 1) { return GaussianRational(Rational(0), Rational(p, q)); }

std::array<GaussianRational, kNumVars> point(GaussianRational s0, GaussianRational s3, GaussianRational t4,
                                             GaussianRational t2) {
  std::array<GaussianRational, kNumVars> pt{};
  pt[std::size_t(var_index("s0"))] = s0;
  pt[std::size_t(var_index("s3"))] = s3;
  pt[std::size_t(var_index("t4"))] = t4;
  pt[std::size_t(var_index("t2"))] = t2;
  return pt;
}

RationalExpr expr_of(const std::map<std::string, RationalExpr>& m, const std::string& k) {
  auto it = m.find(k);
  REQUIRE(it != m.end());
  return it->second;
}

}  // namespace

TEST_CASE("commuting surrogate polynomials") {
  Poly s0 = Poly::variable(var_index("s0"));
  Poly t4 = Poly::variable(var_index("t4"));
  CHECK(s0 * t4 == t4 * s0);
  CHECK(!(s0 * s0).is_zero());  // squares retained in this mode
  CHECK((s0 * s0).derivative(var_index("s0")) == GaussianRational(2) * s0);
  CHECK((s0 * s0).substitute_zero(var_index("s0")).is_zero());
}

TEST_CASE("rational expressions over powers of 1 - t2") {
  RationalExpr a{Poly::variable(var_index("t4")), 1};
  RationalExpr b{Poly::variable(var_index("t4")), 1};
  CHECK(a == b);
  RationalExpr two = a + b;
  CHECK(two == RationalExpr{GaussianRational(2) * Poly::variable(var_index("t4")), 1});
  // (t4/(1-t2)) * (t4/(1-t2)) has denominator power 2
  CHECK((a * b).denom_pow == 2);
  auto pt = point(GaussianRational(0), GaussianRational(0), GaussianRational(3), GaussianRational(Rational(1, 2)));
  CHECK(a.eval(pt) == GaussianRational(6));
}

TEST_CASE("chen coefficients in the literal commuting reading") {
  auto chen = chen_symbolic();
  REQUIRE(chen.size() == 4);

  // mu_2 t4 - mu_1 s3 = 0 as rational expressions
  RationalExpr mu1{-(Poly::variable(var_index("s0")) * Poly::variable(var_index("t4"))), 1};
  RationalExpr mu2{-(Poly::variable(var_index("s0")) * Poly::variable(var_index("s3"))), 1};
  RationalExpr t4{Poly::variable(var_index("t4")), 0};
  RationalExpr s3{Poly::variable(var_index("s3")), 0};
  RationalExpr diff = mu2 * t4 + (-(mu1 * s3));
  CHECK(diff.is_zero());

  // all four vanish identically on each component
  for (const auto& [name, c] : chen) {
    CHECK(c.substitute_zero(var_index("s0")).is_zero());
    CHECK(c.substitute_zero(var_index("t4")).substitute_zero(var_index("s3")).is_zero());
  }

  // and are nonzero at the surrogate point (s0,s3,t4,t2) = (1,1,1,0)
  auto pt = point(GaussianRational(1), GaussianRational(1), GaussianRational(1), GaussianRational(0));
  CHECK(expr_of(chen, "s1").eval(pt) == gqi(-1, 2));
  CHECK(expr_of(chen, "t1").eval(pt) == gqi(-1, 2));
  CHECK(expr_of(chen, "t3").eval(pt) == gqi(1, 2));
  CHECK(expr_of(chen, "t5").eval(pt) == gqi(-1));
}

TEST_CASE("gauge brackets on the component s0 = 0") {
  // only the s0-direction acts nontrivially
  auto br_s0 = gauge_bracket(Component::K0, "s0");
  REQUIRE(br_s0.size() == 1);
  RationalExpr expected{gqi(-1) * (Poly::variable(var_index("s3")) * Poly::variable(var_index("s3"))), 1};
  CHECK(expr_of(br_s0, "t5") == expected);

  for (const char* beta : {"t1", "t2", "t3", "t4", "t5", "s1", "s2", "s3", "s4", "s5", "t0"}) {
    CAPTURE(beta);
    CHECK(gauge_bracket(Component::K0, beta).empty());
  }
}

TEST_CASE("gauge brackets on the component t4 = s3 = 0") {
  Poly s0sq = Poly::variable(var_index("s0")) * Poly::variable(var_index("s0"));

  auto br_s3 = gauge_bracket(Component::K1, "s3");
  REQUIRE(br_s3.size() == 1);
  // 2i [d/ds3, chen] = -(s0^2/(1-t2)) d/dt1
  RationalExpr lhs = RationalExpr{Poly::constant(gqi(2)), 0} * expr_of(br_s3, "t1");
  CHECK(lhs == RationalExpr{-s0sq, 1});

  auto br_t4 = gauge_bracket(Component::K1, "t4");
  REQUIRE(br_t4.size() == 1);
  // 2i [d/dt4, chen] = (s0^2/(1-t2)) d/ds1
  RationalExpr lhs2 = RationalExpr{Poly::constant(gqi(2)), 0} * expr_of(br_t4, "s1");
  CHECK(lhs2 == RationalExpr{s0sq, 1});

  for (const char* beta : {"t0", "t1", "t2", "t3", "t5", "s0", "s1", "s2", "s4", "s5"}) {
    CAPTURE(beta);
    CHECK(gauge_bracket(Component::K1, beta).empty());
  }
}
