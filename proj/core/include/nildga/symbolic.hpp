#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nildga/rational.hpp"

namespace nildga::symbolic {

// Surrogate variables for the surface coordinate space: t0..t5 even,
// s0..s5 odd.  In this mode the variables commute and odd squares are kept;
// parity enters only through sign rules of the word calculus below.
inline constexpr int kNumVars = 12;
int var_index(const std::string& name);
const std::string& var_name(int idx);
bool var_odd(int idx);

using Exps = std::array<std::uint8_t, kNumVars>;

/// Plain commuting polynomial over Q(i) in the 12 surrogate variables.
class Poly {
 public:
  Poly() = default;
  static Poly constant(GaussianRational c);
  static Poly variable(int idx);

  const std::map<Exps, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exps& e, const GaussianRational& c);

  Poly& operator+=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(const Poly& p);
  friend Poly operator-(Poly a, const Poly& b) { return a += -b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussianRational& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly substitute_zero(int idx) const;
  Poly derivative(int idx) const;  // commuting power rule
  GaussianRational eval(const std::array<GaussianRational, kNumVars>& point) const;
  std::string str() const;

 private:
  std::map<Exps, GaussianRational> terms_;
};

/// num / (1 - t2)^denom_pow.  No cancellation is attempted; equality is
/// checked after cross-multiplication.
struct RationalExpr {
  Poly num;
  int denom_pow = 0;

  bool is_zero() const { return num.is_zero(); }
  RationalExpr substitute_zero(int idx) const;
  GaussianRational eval(const std::array<GaussianRational, kNumVars>& point) const;
  std::string str() const;

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend bool operator==(const RationalExpr& a, const RationalExpr& b);
};

RationalExpr one_minus_t2_inverse(int power);  // 1/(1-t2)^power

/// The Chen vector field coefficients read literally, with commuting
/// surrogates (repeated odd symbols kept, not annihilated):
///   c_{s1} = -(i/2) s0^2 t4 / (1-t2)        c_{t1} = -(i/2) s0^2 s3 / (1-t2)
///   c_{t3} = (i/2) s0^2 s3 t4 / (1-t2)^2    c_{t5} = -i s0 s3^2 / (1-t2)
std::map<std::string, RationalExpr> chen_symbolic();

enum class Component { K0, K1 };  // K0: s0 = 0;  K1: t4 = 0, s3 = 0

/// Super-commutator of the coordinate field d/dx_beta with the Chen field,
/// reduced modulo the component's defining equations.  The derivative acts
/// on the factored form of the coefficients (products of mu_1, mu_2 and odd
/// symbols) with the left-derivative sign rule, so repeated odd symbols
/// cancel pairwise exactly where they should.  Keys are target coordinate
/// names; only nonzero entries are present.
std::map<std::string, RationalExpr> gauge_bracket(Component comp, const std::string& beta);

}  // namespace nildga::symbolic
