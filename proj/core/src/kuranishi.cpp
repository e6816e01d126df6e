#include "nildga/kuranishi.hpp"

#include <stdexcept>

namespace nildga {

SuperField mc_residual(const DGAPresentation& pres, const SchoutenEngine& eng, const SuperField& gamma,
                       const ChenField& chen) {
  SuperField r = sf_dbar(pres, gamma);
  r += chen.apply(gamma);
  SuperField br = sf_bracket(eng, gamma, gamma);
  for (const auto& [m, c] : br.terms()) r.add_term(m, GaussianRational(Rational(1, 2)) * c);
  return r;
}

MCSolution kuranishi_solve(const DGAPresentation& pres, const SchoutenEngine& eng, const Hodge& hodge,
                           const CoordinateSystem& coords) {
  const int D = coords.ring()->truncation;
  if (D < 2) throw std::invalid_argument("kuranishi_solve: truncation must be >= 2");

  MCSolution sol;
  sol.gamma = coords.gamma1();

  for (int k = 2; k <= D; ++k) {
    SuperField br = sf_bracket(eng, sol.gamma, sol.gamma);
    SuperField acc(coords.ring());
    for (const auto& [m, c] : br.terms()) acc.add_term(m, GaussianRational(Rational(1, 2)) * c);
    acc += sol.chen.apply(sol.gamma);
    SuperField qk = (SuperField(coords.ring()) - acc).degree_part(k);
    if (qk.is_zero()) continue;

    SuperField h = sf_hproj(hodge, qk);
    if (!h.is_zero()) {
      auto add = expand_in_classes(coords, h);
      for (auto& [a, c] : add) {
        auto par = c.parity();
        bool coord_odd = coords.ring()->odd[std::size_t(a)];
        if (par && ((*par + (coord_odd ? 1 : 0)) & 1) == 0)
          throw std::logic_error("kuranishi_solve: Chen coefficient parity violated");
        auto [it, fresh] = sol.chen.coeffs.try_emplace(a, SuperScalar(coords.ring()));
        it->second += c;
      }
    }

    SuperField exact = qk - h;
    SuperField corr = sf_adjoint_green(hodge, exact);
    if (!(sf_dbar(pres, corr) == exact))
      throw std::runtime_error("kuranishi: non-harmonic residual is not exact");
    sol.gamma += corr;
  }

  if (!mc_residual(pres, eng, sol.gamma, sol.chen).is_zero())
    throw std::logic_error("kuranishi_solve: residual nonzero at truncation");
  return sol;
}

MCSolution closed_form_kodaira(const DGAPresentation& pres, const CoordinateSystem& coords) {
  MCSolution sol;
  sol.gamma = coords.gamma1();
  SuperScalar geo = geometric_series(coords.ring(), coords.index_of("t2"));
  SuperScalar s0 = coords.coordinate("s0");
  SuperScalar mu1 = -(s0 * coords.coordinate("t4") * geo);
  SuperScalar mu2 = -(s0 * coords.coordinate("s3") * geo);
  sol.gamma.add_term(pres.monomial({"T"}), mu1);
  sol.gamma.add_term(pres.monomial({"or", "T"}), mu2);
  return sol;
}

MCSolution closed_form_degree2(const DGAPresentation& pres, const CoordinateSystem& coords) {
  const int n = (pres.generator_count() - 2) / 2;
  MCSolution sol;
  sol.gamma = coords.gamma1();
  SuperScalar geo = geometric_series(coords.ring(), coords.index_of("a"));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      SuperScalar coef = coords.coordinate("b" + std::to_string(j + 1)) *
                         coords.coordinate("B" + std::to_string(k + 1)) * geo;
      // s^j_k = (ow^j ^ T_k - ow^k ^ T_j)/2
      Monomial m1{(std::uint32_t(1) << j) | (std::uint32_t(1) << (n + 1 + k))};
      Monomial m2{(std::uint32_t(1) << k) | (std::uint32_t(1) << (n + 1 + j))};
      Multivector s = GaussianRational(Rational(1, 2)) * Multivector(m1) -
                      GaussianRational(Rational(1, 2)) * Multivector(m2);
      for (const auto& [m, c] : s.terms()) sol.gamma.add_term(m, (-c) * coef);
    }
  return sol;
}

SuperField dbar_gamma(const DGAPresentation& pres, const SchoutenEngine& eng, const SuperField& gamma,
                      const SuperField& v) {
  return sf_dbar(pres, v) + sf_bracket(eng, gamma, v);
}

}  // namespace nildga
