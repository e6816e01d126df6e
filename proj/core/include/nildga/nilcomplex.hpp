#pragma once

#include <array>
#include <vector>

#include "nildga/presentation.hpp"

namespace nildga {

/// A 2-step nilpotent Lie algebra with abelian complex structure and
/// two-real-dimensional center, in the complex frame T_1..T_n, W:
/// [Tbar_j, T_k] = E_{jk} W + F_{jk} Wbar with Fbar_{kj} = -E_{jk}.
class NilComplexSpec {
 public:
  /// F is derived from E via the constraint.  Throws when the induced
  /// center would exceed complex dimension one.
  explicit NilComplexSpec(std::vector<std::vector<GaussianRational>> E);

  int n() const { return n_; }
  const GaussianRational& E(int j, int k) const { return E_[std::size_t(j)][std::size_t(k)]; }
  const GaussianRational& F(int j, int k) const { return F_[std::size_t(j)][std::size_t(k)]; }

 private:
  int n_;
  std::vector<std::vector<GaussianRational>> E_, F_;
};

/// Kodaira family: E = diag(-i/2, ..., -i/2).
NilComplexSpec build_kodaira(int n);

/// Real 2-step nilpotent algebra on a chosen basis, with bracket structure
/// constants c[i][j] = [e_i, e_j] and an endomorphism J in the same basis.
struct RealNilAlgebra {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<Rational>>> c;  // c[i][j][k] e_k
  std::vector<std::vector<Rational>> J;

  int dim() const { return int(names.size()); }
  std::vector<Rational> bracket(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  std::vector<Rational> applyJ(const std::vector<Rational>& v) const;
};

/// Heisenberg x R real frame X_1..X_n, Y_1..Y_n, U, V with [X_j,Y_j] = U
/// and J X_j = Y_j, J U = V.
RealNilAlgebra kodaira_real_algebra(int n);

/// J^2 = -1 is a precondition (throws otherwise); returns whether
/// [JA, JB] = [A, B] for all basis pairs.
bool check_abelian(const RealNilAlgebra& alg);

/// Generators {ow1..own, or, T1..Tn, W} (forms first), differential
/// dbar T_j = sum_k E_{kj} owk^W, bracket [T_j, or] = sum_k F_{kj} owk.
DGAPresentation complex_dga(const NilComplexSpec& spec);

/// Invariant symplectic form on the n=1 real frame:
/// u1(a^g - b^d) + v1(a^d + b^g) + u2(a^g + b^d) + v2(a^d - b^g).
struct SymplecticSpec {
  Rational u1, v1, u2, v2;

  Rational delta() const { return u1 * u1 + v1 * v1 - u2 * u2 - v2 * v2; }
  void validate() const;  // throws when delta == 0
};

/// Coefficients of a 1-form in the basis (alpha, beta, gamma, delta).
using RealOneForm = std::array<Rational, 4>;

/// Index into the n=1 real frame: X, Y, U, V.
enum class FrameVector { X, Y, U, V };

/// Contraction of a frame vector with the symplectic form.
RealOneForm contract(FrameVector v, const SymplecticSpec& s);

/// Generators {ap, bp, gam, del}; sole bracket [gam, del] = ap; differential
/// d gam = -delta * ap^bp.
DGAPresentation symplectic_dga(const SymplecticSpec& s);

}  // namespace nildga
