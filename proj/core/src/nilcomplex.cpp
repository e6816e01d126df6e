#include "nildga/nilcomplex.hpp"

#include <stdexcept>

#include "nildga/matrix.hpp"

namespace nildga {

NilComplexSpec::NilComplexSpec(std::vector<std::vector<GaussianRational>> E) : E_(std::move(E)) {
  n_ = int(E_.size());
  if (n_ < 1) throw std::invalid_argument("NilComplexSpec: n must be positive");
  for (const auto& row : E_)
    if (int(row.size()) != n_) throw std::invalid_argument("NilComplexSpec: E must be square");
  // Fbar_{kj} = -E_{jk}  =>  F_{kj} = -conj(E_{jk}).
  F_.assign(std::size_t(n_), std::vector<GaussianRational>(std::size_t(n_)));
  for (int k = 0; k < n_; ++k)
    for (int j = 0; j < n_; ++j) F_[std::size_t(k)][std::size_t(j)] = -E_[std::size_t(j)][std::size_t(k)].conj();

  // The center must be exactly the span of W, Wbar: no direction of t^{1,0}
  // may bracket trivially with everything, i.e. [E; F] has full column rank.
  Matrix stacked(std::size_t(2 * n_), std::size_t(n_));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      stacked.at(std::size_t(r), std::size_t(c)) = E_[std::size_t(r)][std::size_t(c)];
      stacked.at(std::size_t(n_ + r), std::size_t(c)) = F_[std::size_t(r)][std::size_t(c)];
    }
  if (stacked.rank() != std::size_t(n_))
    throw std::invalid_argument("NilComplexSpec: center has complex dimension > 1");
}

NilComplexSpec build_kodaira(int n) {
  if (n < 1) throw std::invalid_argument("build_kodaira: n must be positive");
  std::vector<std::vector<GaussianRational>> E;
  E.resize(std::size_t(n));
  for (auto& row : E) row.resize(std::size_t(n));
  for (int j = 0; j < n; ++j) E[std::size_t(j)][std::size_t(j)] = GaussianRational(Rational(0), Rational(-1, 2));
  return NilComplexSpec(std::move(E));
}

std::vector<Rational> RealNilAlgebra::bracket(const std::vector<Rational>& a,
                                              const std::vector<Rational>& b) const {
  std::vector<Rational> out(std::size_t(dim()), Rational(0));
  for (int i = 0; i < dim(); ++i) {
    if (a[std::size_t(i)] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[std::size_t(j)] == 0) continue;
      for (int k = 0; k < dim(); ++k)
        out[std::size_t(k)] += a[std::size_t(i)] * b[std::size_t(j)] * c[std::size_t(i)][std::size_t(j)][std::size_t(k)];
    }
  }
  return out;
}

std::vector<Rational> RealNilAlgebra::applyJ(const std::vector<Rational>& v) const {
  std::vector<Rational> out(std::size_t(dim()), Rational(0));
  for (int r = 0; r < dim(); ++r)
    for (int c2 = 0; c2 < dim(); ++c2) out[std::size_t(r)] += J[std::size_t(r)][std::size_t(c2)] * v[std::size_t(c2)];
  return out;
}

RealNilAlgebra kodaira_real_algebra(int n) {
  RealNilAlgebra alg;
  const int d = 2 * n + 2;
  for (int j = 1; j <= n; ++j) alg.names.push_back("X" + std::to_string(j));
  for (int j = 1; j <= n; ++j) alg.names.push_back("Y" + std::to_string(j));
  alg.names.push_back("U");
  alg.names.push_back("V");
  alg.c.assign(std::size_t(d), std::vector<std::vector<Rational>>(std::size_t(d), std::vector<Rational>(std::size_t(d), Rational(0))));
  const int U = 2 * n;
  for (int j = 0; j < n; ++j) {
    alg.c[std::size_t(j)][std::size_t(n + j)][std::size_t(U)] = 1;
    alg.c[std::size_t(n + j)][std::size_t(j)][std::size_t(U)] = -1;
  }
  alg.J.assign(std::size_t(d), std::vector<Rational>(std::size_t(d), Rational(0)));
  for (int j = 0; j < n; ++j) {
    alg.J[std::size_t(n + j)][std::size_t(j)] = 1;   // J X_j = Y_j
    alg.J[std::size_t(j)][std::size_t(n + j)] = -1;  // J Y_j = -X_j
  }
  alg.J[std::size_t(U + 1)][std::size_t(U)] = 1;   // J U = V
  alg.J[std::size_t(U)][std::size_t(U + 1)] = -1;  // J V = -U
  return alg;
}

bool check_abelian(const RealNilAlgebra& alg) {
  const int d = alg.dim();
  auto e = [&](int k) {
    std::vector<Rational> v(std::size_t(d), Rational(0));
    v[std::size_t(k)] = 1;
    return v;
  };
  for (int k = 0; k < d; ++k) {
    auto jj = alg.applyJ(alg.applyJ(e(k)));
    for (int r = 0; r < d; ++r)
      if (jj[std::size_t(r)] != (r == k ? Rational(-1) : Rational(0)))
        throw std::invalid_argument("check_abelian: J^2 != -identity");
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto lhs = alg.bracket(alg.applyJ(e(i)), alg.applyJ(e(j)));
      auto rhs = alg.bracket(e(i), e(j));
      if (lhs != rhs) return false;
    }
  return true;
}

DGAPresentation complex_dga(const NilComplexSpec& spec) {
  const int n = spec.n();
  std::vector<Generator> gens;
  for (int j = 1; j <= n; ++j) gens.push_back({n == 1 ? "ow" : "ow" + std::to_string(j), 0, 1});
  gens.push_back({"or", 0, 1});
  for (int j = 1; j <= n; ++j) gens.push_back({n == 1 ? "T" : "T" + std::to_string(j), 1, 0});
  gens.push_back({"W", 1, 0});

  const int rho = n;                       // key of or
  auto owk = [&](int k) { return k; };     // keys of owj, 0-based
  auto Tk = [&](int k) { return n + 1 + k; };
  const int W = 2 * n + 1;

  std::vector<Multivector> dtab(std::size_t(2 * n + 2));
  for (int j = 0; j < n; ++j) {
    Multivector d;
    for (int k = 0; k < n; ++k) {
      if (spec.E(k, j).is_zero()) continue;
      Monomial m{(std::uint32_t(1) << owk(k)) | (std::uint32_t(1) << W)};
      d.add_term(m, spec.E(k, j));
    }
    dtab[std::size_t(Tk(j))] = std::move(d);
  }

  std::map<std::pair<int, int>, Multivector> btab;
  for (int j = 0; j < n; ++j) {
    Multivector b;
    for (int k = 0; k < n; ++k) {
      if (spec.F(k, j).is_zero()) continue;
      b.add_term(Monomial{std::uint32_t(1) << owk(k)}, spec.F(k, j));
    }
    if (!b.is_zero()) btab[{Tk(j), rho}] = std::move(b);
  }

  return DGAPresentation(std::move(gens), std::move(btab), std::move(dtab));
}

void SymplecticSpec::validate() const {
  if (delta() == 0) throw std::invalid_argument("symplectic form degenerate: delta = 0");
}

RealOneForm contract(FrameVector v, const SymplecticSpec& s) {
  switch (v) {
    case FrameVector::X:
      return {Rational(0), Rational(0), s.u1 + s.u2, s.v1 + s.v2};
    case FrameVector::Y:
      return {Rational(0), Rational(0), s.v1 - s.v2, -(s.u1 - s.u2)};
    case FrameVector::U:
      return {-(s.u1 + s.u2), -(s.v1 - s.v2), Rational(0), Rational(0)};
    case FrameVector::V:
      return {-(s.v1 + s.v2), s.u1 - s.u2, Rational(0), Rational(0)};
  }
  throw std::invalid_argument("contract: bad frame vector");
}

DGAPresentation symplectic_dga(const SymplecticSpec& s) {
  s.validate();
  std::vector<Generator> gens = {{"ap", 0, 1}, {"bp", 0, 1}, {"gam", 0, 1}, {"del", 0, 1}};
  std::vector<Multivector> dtab(4);
  Monomial apbp{0b0011};
  dtab[2].add_term(apbp, GaussianRational(-s.delta()));
  std::map<std::pair<int, int>, Multivector> btab;
  btab[{2, 3}] = Multivector(Monomial{0b0001});  // [gam, del] = ap
  return DGAPresentation(std::move(gens), std::move(btab), std::move(dtab));
}

}  // namespace nildga
