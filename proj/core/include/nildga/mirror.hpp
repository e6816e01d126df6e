#pragma once

#include <array>
#include <optional>
#include <string>

#include "nildga/hodge.hpp"
#include "nildga/matrix.hpp"
#include "nildga/nilcomplex.hpp"

namespace nildga {

/// Frame of the deformed distribution over the ordered basis
/// {Tbar, Wbar, omega, rho, T, W, owbar, rhobar}; the left 4x4 block is the
/// identity (graph property).
struct GraphFrame {
  Matrix rows;  // 4x8
};

GraphFrame graph_frame(const GaussianRational& t1, const GaussianRational& t2, const GaussianRational& t3,
                       const GaussianRational& t4);

/// One-parameter family t != 0: the graph with t1 = t/2, t4 = -2/conj(t),
/// t2 = t3 = 0 against the symplectic form built from omega_t (defaults to
/// t).  True iff the complex span of {X + i_X Omega, ...} equals the row
/// space of the graph.
bool special_family_check(const GaussianRational& t,
                          std::optional<GaussianRational> omega_t = std::nullopt);

/// For the special family the conjugate distribution coincides with the
/// graph as a subspace.
bool conjugate_distribution_matches(const GaussianRational& t);

/// Multiplicative extension of T -> gam, W -> -delta bp, or -> del,
/// ow -> 2i ap between the surface presentation and a symplectic one.
class MirrorMap {
 public:
  MirrorMap(const DGAPresentation& cx, const DGAPresentation& sp, const Rational& delta);

  Multivector apply(Monomial m) const;
  Multivector apply(const Multivector& v) const;

 private:
  const DGAPresentation* cx_;
  const DGAPresentation* sp_;
  std::vector<Multivector> gen_image_;
};

struct MirrorReport {
  bool multiplicative = true;
  bool chain_rule = true;
  bool bracket_morphism = true;
  bool bijective = true;
  std::string counterexample;

  bool pass() const { return multiplicative && chain_rule && bracket_morphism && bijective; }
};

MirrorReport verify_mirror(const DGAPresentation& cx, const DGAPresentation& sp, const Rational& delta);

/// Invariant de Rham dimensions b_0..b_4 of the symplectic presentation.
std::array<int, 5> derham_dims(const DGAPresentation& sp);

struct CohomologyMatch {
  bool ok = false;
  std::array<int, 5> betti{};
  std::array<int, 3> complex_dims{};  // sum_{p+q=k} h^{p,q}, k = 0,1,2
  std::string detail;
};

/// Degree <= 2 comparison: dimensions agree and the mirror images of the
/// harmonic classes are closed and span de Rham cohomology modulo exact.
CohomologyMatch cohomology_match(const Hodge& hodge_cx, const SymplecticSpec& spec);

}  // namespace nildga
