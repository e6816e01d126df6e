#pragma once

#include "nildga/supercoord.hpp"

namespace nildga {

struct MCSolution {
  SuperField gamma;
  ChenField chen;
};

/// dbar Gamma + sum_a c_a dGamma/dx_a + (1/2)[Gamma, Gamma], evaluated in
/// the truncated ring.
SuperField mc_residual(const DGAPresentation& pres, const SchoutenEngine& eng, const SuperField& gamma,
                       const ChenField& chen);

/// Order-by-order recursion in the harmonic gauge: corrections are taken in
/// the image of dbar^* through the Green operator, obstructions go into the
/// Chen field.  The returned pair satisfies mc_residual == 0 up to the ring
/// truncation (checked; throws on internal failure).
MCSolution kuranishi_solve(const DGAPresentation& pres, const SchoutenEngine& eng, const Hodge& hodge,
                           const CoordinateSystem& coords);

/// The closed-form surface solution: Gamma_1 - s0 t4/(1-t2) T
/// - s0 s3/(1-t2) or^T as truncated series, Chen field strictly zero
/// (its coefficients all carry squares of odd coordinates).
MCSolution closed_form_kodaira(const DGAPresentation& pres, const CoordinateSystem& coords);

/// The unobstructed degree-two solution for a Kodaira manifold:
/// Gamma_1 - 1/(1-a) sum_{j,k} a_j a^k s^j_k with s^j_k
/// = (ow^j ^ T_k - ow^k ^ T_j)/2, Chen field zero.
MCSolution closed_form_degree2(const DGAPresentation& pres, const CoordinateSystem& coords);

/// dbar_Gamma v = dbar v + [Gamma, v].
SuperField dbar_gamma(const DGAPresentation& pres, const SchoutenEngine& eng, const SuperField& gamma,
                      const SuperField& v);

}  // namespace nildga
