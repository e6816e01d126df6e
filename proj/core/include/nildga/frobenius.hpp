#pragma once

#include <optional>

#include "nildga/kuranishi.hpp"

namespace nildga {

/// Structure constants mu^{ab}_g of the product d/dx_a o d/dx_b
/// = sum_g mu^{ab}_g d/dx_g on the tangent sheaf of the deformation space.
struct FrobeniusTable {
  std::map<std::pair<int, int>, std::map<int, SuperScalar>> entries;

  SuperScalar mu(int a, int b, int g, const RingPtr& ring) const {
    auto it = entries.find({a, b});
    if (it == entries.end()) return SuperScalar(ring);
    auto jt = it->second.find(g);
    return jt == it->second.end() ? SuperScalar(ring) : jt->second;
  }
};

/// Expands dGamma/dx_a ^ dGamma/dx_b in the basis {dGamma/dx_g} modulo
/// image(dbar_Gamma) and modulo the listed quotient directions, by
/// degree-by-degree exact reduction over the truncated ring.  Throws when a
/// non-harmonic remainder fails to be exact at some order (the expression
/// leaves the spanned submodule at this truncation).
FrobeniusTable frobenius_products(const DGAPresentation& pres, const SchoutenEngine& eng, const Hodge& hodge,
                                  const CoordinateSystem& coords, const SuperField& gamma,
                                  const std::vector<std::string>& quotient_names);

/// Attempted recognition of a truncated series as num/(1-t)^k for the
/// given even coordinate, k <= 3.  Multiplication in the truncated ring
/// telescopes geometric tails, so a successful k leaves only low t-degree.
struct SeriesClosedForm {
  SuperScalar numerator;
  int denom_pow = 0;
};
std::optional<SeriesClosedForm> recognize_geometric(const SuperScalar& s, int t_index);

}  // namespace nildga
