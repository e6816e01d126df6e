#include "nildga/frobenius.hpp"

#include <stdexcept>

namespace nildga {

FrobeniusTable frobenius_products(const DGAPresentation& pres, const SchoutenEngine& eng, const Hodge& hodge,
                                  const CoordinateSystem& coords, const SuperField& gamma,
                                  const std::vector<std::string>& quotient_names) {
  std::vector<int> quotient;
  for (const auto& name : quotient_names) quotient.push_back(coords.index_of(name));

  FrobeniusTable table;
  const int D = coords.ring()->truncation;

  for (int a = 0; a < coords.size(); ++a) {
    SuperField da = sf_partial(gamma, a);
    for (int b = 0; b < coords.size(); ++b) {
      SuperField v = sf_wedge(da, sf_partial(gamma, b));
      std::map<int, SuperScalar> mu;
      for (int round = 0; round <= 2 * (D + 1) && !v.is_zero(); ++round) {
        SuperField h = sf_hproj(hodge, v);
        for (auto& [g, c] : expand_in_classes(coords, h)) {
          auto [it, fresh] = mu.try_emplace(g, SuperScalar(coords.ring()));
          it->second += c;
        }
        v -= h;
        if (v.is_zero()) break;
        SuperField xi = sf_adjoint_green(hodge, v);
        if (!(sf_dbar(pres, xi) == v))
          throw std::runtime_error("frobenius_products: remainder not exact at this truncation");
        v = SuperField(coords.ring()) - sf_bracket(eng, gamma, xi);
      }
      if (!v.is_zero())
        throw std::runtime_error("frobenius_products: reduction did not terminate");
      for (int g : quotient) mu.erase(g);
      for (auto it = mu.begin(); it != mu.end();) {
        if (it->second.is_zero())
          it = mu.erase(it);
        else
          ++it;
      }
      if (!mu.empty()) table.entries[{a, b}] = std::move(mu);
    }
  }
  return table;
}

std::optional<SeriesClosedForm> recognize_geometric(const SuperScalar& s, int t_index) {
  if (s.is_zero()) return SeriesClosedForm{s, 0};
  const auto& ring = s.ring();
  const int D = ring->truncation;
  auto t_degree = [&](const SuperScalar& x) {
    int d = 0;
    for (const auto& [e, c] : x.terms()) d = std::max(d, int(e[std::size_t(t_index)]));
    return d;
  };
  SuperScalar one_minus_t = SuperScalar::constant(ring, GaussianRational(1)) -
                            SuperScalar::coordinate(ring, t_index);
  SuperScalar p = s;
  for (int k = 0; k <= 3; ++k) {
    if (t_degree(p) <= std::max(0, D - k - 2)) return SeriesClosedForm{p, k};
    p = p * one_minus_t;
  }
  return std::nullopt;
}

}  // namespace nildga
