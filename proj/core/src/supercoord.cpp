#include "nildga/supercoord.hpp"

#include <algorithm>
#include <stdexcept>

namespace nildga {

int expvec_degree(const ExpVec& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

SuperScalar SuperScalar::constant(RingPtr ring, GaussianRational c) {
  SuperScalar s(std::move(ring));
  if (!c.is_zero()) s.terms_[ExpVec(std::size_t(s.ring_->ncoords()), 0)] = std::move(c);
  return s;
}

SuperScalar SuperScalar::coordinate(RingPtr ring, int idx) {
  SuperScalar s(std::move(ring));
  ExpVec e(std::size_t(s.ring_->ncoords()), 0);
  e[std::size_t(idx)] = 1;
  if (s.ring_->truncation >= 1) s.terms_[e] = GaussianRational(1);
  return s;
}

bool SuperScalar::is_unit() const {
  if (!ring_) return false;
  auto it = terms_.find(ExpVec(std::size_t(ring_->ncoords()), 0));
  return it != terms_.end() && !it->second.is_zero();
}

GaussianRational SuperScalar::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

int SuperScalar::max_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, expvec_degree(e));
  return d;
}

std::optional<int> SuperScalar::parity() const {
  std::optional<int> par;
  for (const auto& [e, c] : terms_) {
    int p = 0;
    for (int i = 0; i < ring_->ncoords(); ++i)
      if (ring_->odd[std::size_t(i)]) p += e[std::size_t(i)];
    p &= 1;
    if (par && *par != p) return std::nullopt;
    par = p;
  }
  return par;
}

void SuperScalar::add_term(const ExpVec& e, const GaussianRational& c) {
  if (c.is_zero() || expvec_degree(e) > ring_->truncation) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperScalar& SuperScalar::operator+=(const SuperScalar& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SuperScalar& SuperScalar::operator-=(const SuperScalar& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SuperScalar operator*(const GaussianRational& c, const SuperScalar& s) {
  SuperScalar out(s.ring_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : s.terms_) out.terms_[e] = c * x;
  return out;
}

SuperScalar operator*(const SuperScalar& a, const SuperScalar& b) {
  SuperScalar out(a.ring_ ? a.ring_ : b.ring_);
  if (!out.ring_) return out;
  const RingContext& ring = *out.ring_;
  const int n = ring.ncoords();
  for (const auto& [ea, ca] : a.terms_) {
    int dega = expvec_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (dega + expvec_degree(eb) > ring.truncation) continue;
      // Koszul sign: each odd symbol of eb passes the odd symbols of ea
      // with a larger index.  Odd squares vanish.
      int inversions = 0;
      bool dead = false;
      ExpVec e(std::size_t(n), 0);
      int odd_above = 0;  // odd symbols of ea with index > current, built backwards
      for (int i = n - 1; i >= 0; --i) {
        std::uint8_t xa = ea[std::size_t(i)], xb = eb[std::size_t(i)];
        if (ring.odd[std::size_t(i)]) {
          if (xa && xb) {
            dead = true;
            break;
          }
          if (xb) inversions += odd_above;
          odd_above += xa;
        }
        e[std::size_t(i)] = std::uint8_t(xa + xb);
      }
      if (dead) continue;
      GaussianRational c = ca * cb;
      if (inversions & 1) c = -c;
      out.add_term(e, c);
    }
  }
  return out;
}

SuperScalar SuperScalar::derivative(int idx) const {
  SuperScalar out(ring_);
  const bool odd = ring_->odd[std::size_t(idx)];
  for (const auto& [e, c] : terms_) {
    if (e[std::size_t(idx)] == 0) continue;
    ExpVec d = e;
    if (odd) {
      d[std::size_t(idx)] = 0;
      int before = 0;
      for (int i = 0; i < idx; ++i)
        if (ring_->odd[std::size_t(i)]) before += e[std::size_t(i)];
      out.add_term(d, (before & 1) ? -c : c);
    } else {
      d[std::size_t(idx)] -= 1;
      out.add_term(d, GaussianRational(long(e[std::size_t(idx)])) * c);
    }
  }
  return out;
}

SuperScalar SuperScalar::substitute_zero(int idx) const {
  SuperScalar out(ring_);
  for (const auto& [e, c] : terms_)
    if (e[std::size_t(idx)] == 0) out.add_term(e, c);
  return out;
}

SuperScalar SuperScalar::degree_part(int k) const {
  SuperScalar out(ring_);
  for (const auto& [e, c] : terms_)
    if (expvec_degree(e) == k) out.add_term(e, c);
  return out;
}

std::pair<SuperScalar, SuperScalar> SuperScalar::parity_split() const {
  SuperScalar ev(ring_), od(ring_);
  for (const auto& [e, c] : terms_) {
    int p = 0;
    for (int i = 0; i < ring_->ncoords(); ++i)
      if (ring_->odd[std::size_t(i)]) p += e[std::size_t(i)];
    ((p & 1) ? od : ev).add_term(e, c);
  }
  return {std::move(ev), std::move(od)};
}

std::string SuperScalar::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < ring_->ncoords(); ++i) {
      if (!e[std::size_t(i)]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->names[std::size_t(i)];
      if (e[std::size_t(i)] > 1) mono += "^" + std::to_string(int(e[std::size_t(i)]));
    }
    std::string cs = to_string(c);
    if (!s.empty()) {
      if (cs[0] == '-') {
        s += " - ";
        cs = cs.substr(1);
      } else {
        s += " + ";
      }
    }
    if (mono.empty())
      s += cs;
    else if (cs == "1")
      s += mono;
    else if (cs == "-1")
      s += "-" + mono;
    else
      s += cs + "*" + mono;
  }
  return s;
}

SuperScalar geometric_series(RingPtr ring, int idx) {
  SuperScalar out = SuperScalar::constant(ring, GaussianRational(1));
  SuperScalar x = SuperScalar::coordinate(ring, idx);
  SuperScalar pow = x;
  for (int k = 1; k <= ring->truncation && !pow.is_zero(); ++k) {
    out += pow;
    pow = pow * x;
  }
  return out;
}

SuperScalar SuperField::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? SuperScalar(ring_) : it->second;
}

void SuperField::add_term(Monomial m, const SuperScalar& c) {
  if (!ring_) ring_ = c.ring();
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperField& SuperField::operator+=(const SuperField& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperField& SuperField::operator-=(const SuperField& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

bool SuperField::is_even() const {
  for (const auto& [m, c] : terms_) {
    auto par = c.parity();
    if (!par) return false;
    if ((*par + m.degree()) & 1) return false;
  }
  return true;
}

SuperField SuperField::degree_part(int k) const {
  SuperField out(ring_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.degree_part(k));
  return out;
}

SuperField sf_scalar_mul(const SuperScalar& c, const SuperField& a) {
  SuperField out(a.ring());
  for (const auto& [m, x] : a.terms()) out.add_term(m, c * x);
  return out;
}

SuperField sf_wedge(const SuperField& a, const SuperField& b) {
  SuperField out(a.ring() ? a.ring() : b.ring());
  for (const auto& [mb, cb] : b.terms()) {
    auto [cb_even, cb_odd] = cb.parity_split();
    for (const auto& [ma, ca] : a.terms()) {
      if (ma.bits & mb.bits) continue;
      // Odd coefficient terms of b pass the monomial of a.
      SuperScalar c = (ma.degree() & 1) ? ca * (cb_even - cb_odd) : ca * cb;
      if (c.is_zero()) continue;
      Monomial m{ma.bits | mb.bits};
      GaussianRational sgn(merge_sign(ma, mb));
      out.add_term(m, sgn * c);
    }
  }
  return out;
}

SuperField sf_bracket(const SchoutenEngine& eng, const SuperField& a, const SuperField& b) {
  SuperField out(a.ring() ? a.ring() : b.ring());
  for (const auto& [mb, cb] : b.terms()) {
    auto [cb_even, cb_odd] = cb.parity_split();
    for (const auto& [ma, ca] : a.terms()) {
      const Multivector& br = eng.bracket(ma, mb);
      if (br.is_zero()) continue;
      // Shifted degree: an odd coefficient of b passes a and the odd
      // bracket slot, so the sign is (-1)^{(deg a + 1) * parity}.
      SuperScalar c = ((ma.degree() + 1) & 1) ? ca * (cb_even - cb_odd) : ca * cb;
      if (c.is_zero()) continue;
      for (const auto& [m, coef] : br.terms()) out.add_term(m, coef * c);
    }
  }
  return out;
}

namespace {

// Applies a linear algebra-level operator that is odd (degree +-1): the
// coefficient picks up (-1)^{parity}.
template <typename Op>
SuperField apply_odd_operator(const SuperField& a, Op&& op) {
  SuperField out(a.ring());
  for (const auto& [m, c] : a.terms()) {
    Multivector img = op(m);
    if (img.is_zero()) continue;
    auto [c_even, c_odd] = c.parity_split();
    SuperScalar signed_c = c_even - c_odd;
    for (const auto& [m2, coef] : img.terms()) out.add_term(m2, coef * signed_c);
  }
  return out;
}

}  // namespace

SuperField sf_dbar(const DGAPresentation& pres, const SuperField& a) {
  return apply_odd_operator(a, [&](Monomial m) { return differential(pres, m); });
}

SuperField sf_adjoint_green(const Hodge& hodge, const SuperField& a) {
  return apply_odd_operator(
      a, [&](Monomial m) { return hodge.adjoint_apply(hodge.green_apply(Multivector(m))); });
}

SuperField sf_hproj(const Hodge& hodge, const SuperField& a) {
  SuperField out(a.ring());
  for (const auto& [m, c] : a.terms()) {
    Multivector img = hodge.harmonic_projection(Multivector(m));
    for (const auto& [m2, coef] : img.terms()) out.add_term(m2, coef * c);
  }
  return out;
}

SuperField sf_partial(const SuperField& a, int idx) {
  SuperField out(a.ring());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c.derivative(idx));
  return out;
}

SuperField sf_substitute_zero(const SuperField& a, int idx) {
  SuperField out(a.ring());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c.substitute_zero(idx));
  return out;
}

CoordinateSystem::CoordinateSystem(std::vector<Coordinate> coords, int truncation) : coords_(std::move(coords)) {
  auto ctx = std::make_shared<RingContext>();
  for (const auto& c : coords_) {
    ctx->names.push_back(c.name);
    ctx->odd.push_back(c.odd);
  }
  ctx->truncation = truncation;
  ring_ = std::move(ctx);
}

CoordinateSystem CoordinateSystem::kodaira_surface(const DGAPresentation& pres, const Hodge& hodge,
                                                   int truncation) {
  auto cls = [&](std::initializer_list<const char*> names) { return pres.basis_element(names); };
  std::vector<Coordinate> coords = {
      {"t0", false, cls({})},
      {"t1", false, cls({"ow", "or"})},
      {"t2", false, cls({"or", "W"})},
      {"t3", false, cls({"ow", "T"})},
      {"t4", false, cls({"T", "W"})},
      {"t5", false, cls({"ow", "or", "T", "W"})},
      {"s0", true, cls({"or"})},
      {"s1", true, cls({"ow"})},
      {"s2", true, cls({"W"})},
      {"s3", true, cls({"or", "T", "W"})},
      {"s4", true, cls({"ow", "T", "W"})},
      {"s5", true, cls({"ow", "or", "T"})},
  };
  for (const auto& c : coords)
    if (!(hodge.harmonic_projection(c.cls) == c.cls))
      throw std::logic_error("kodaira_surface: class " + c.name + " is not harmonic");
  return CoordinateSystem(std::move(coords), truncation);
}

CoordinateSystem CoordinateSystem::kodaira_degree2(const DGAPresentation& pres, const Hodge& hodge,
                                                   int truncation) {
  const int n = (pres.generator_count() - 2) / 2;
  auto gen_mono = [&](std::initializer_list<int> keys) {
    Monomial m;
    for (int k : keys) m.bits |= std::uint32_t(1) << k;
    return m;
  };
  const int rho = n, W = 2 * n + 1;
  auto T = [&](int j) { return n + 1 + j; };

  // b_j <-> owj^or, b_ij <-> owi^owj, a <-> or^W, f_jk <-> the symmetrized
  // owj^Tk, B_j <-> Tj^W.
  std::vector<Coordinate> coords;
  for (int j = 0; j < n; ++j)
    coords.push_back({"b" + std::to_string(j + 1), false, Multivector(gen_mono({j, rho}))});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      coords.push_back(
          {"b" + std::to_string(i + 1) + std::to_string(j + 1), false, Multivector(gen_mono({i, j}))});
  coords.push_back({"a", false, Multivector(gen_mono({rho, W}))});
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      Multivector phi = GaussianRational(Rational(1, 2)) * Multivector(gen_mono({j, T(k)})) +
                        GaussianRational(Rational(1, 2)) * Multivector(gen_mono({k, T(j)}));
      coords.push_back({"f" + std::to_string(j + 1) + std::to_string(k + 1), false, phi});
    }
  for (int j = 0; j < n; ++j)
    coords.push_back({"B" + std::to_string(j + 1), false, Multivector(gen_mono({T(j), W}))});

  for (const auto& c : coords)
    if (!(hodge.harmonic_projection(c.cls) == c.cls))
      throw std::logic_error("kodaira_degree2: class " + c.name + " is not harmonic");
  return CoordinateSystem(std::move(coords), truncation);
}

CoordinateSystem CoordinateSystem::from_degree(const Hodge& hodge, int degree, int truncation) {
  std::vector<Coordinate> coords;
  int k = 0;
  for (const auto& [pq, classes] : hodge.cohomology_basis().classes) {
    if (pq.first + pq.second != degree) continue;
    for (const auto& cls : classes)
      coords.push_back({"x" + std::to_string(k++), (degree & 1) != 0, cls});
  }
  return CoordinateSystem(std::move(coords), truncation);
}

CoordinateSystem CoordinateSystem::subset(const std::vector<int>& keep) const {
  std::vector<Coordinate> coords;
  for (int k : keep) coords.push_back(coords_[std::size_t(k)]);
  return CoordinateSystem(std::move(coords), ring_->truncation);
}

CoordinateSystem CoordinateSystem::without(const std::string& name) const {
  std::vector<Coordinate> coords;
  for (const auto& c : coords_)
    if (c.name != name) coords.push_back(c);
  return CoordinateSystem(std::move(coords), ring_->truncation);
}

int CoordinateSystem::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (coords_[std::size_t(i)].name == name) return i;
  throw std::invalid_argument("unknown coordinate " + name);
}

SuperScalar CoordinateSystem::coordinate(const std::string& name) const {
  return SuperScalar::coordinate(ring_, index_of(name));
}

SuperField CoordinateSystem::gamma1() const {
  SuperField g(ring_);
  for (int i = 0; i < size(); ++i) {
    SuperScalar x = SuperScalar::coordinate(ring_, i);
    for (const auto& [m, c] : coords_[std::size_t(i)].cls.terms()) g.add_term(m, c * x);
  }
  return g;
}

std::map<int, SuperScalar> expand_in_classes(const CoordinateSystem& coords, const SuperField& v) {
  std::map<int, SuperScalar> out;
  if (v.is_zero()) return out;

  std::uint32_t maxbits = 0;
  for (const auto& c : coords.coords())
    for (const auto& [m, x] : c.cls.terms()) maxbits = std::max(maxbits, m.bits);
  for (const auto& [m, x] : v.terms()) maxbits = std::max(maxbits, m.bits);
  const std::size_t dim = std::size_t(maxbits) + 1;

  Matrix cols(dim, std::size_t(coords.size()));
  for (int a = 0; a < coords.size(); ++a)
    for (const auto& [m, c] : coords.coords()[std::size_t(a)].cls.terms())
      cols.at(m.bits, std::size_t(a)) = c;

  std::map<ExpVec, std::vector<GaussianRational>> by_mono;
  for (const auto& [mono, scal] : v.terms())
    for (const auto& [e, c] : scal.terms()) {
      auto [it, fresh] = by_mono.try_emplace(e, std::vector<GaussianRational>(dim));
      it->second[mono.bits] += c;
    }

  for (const auto& [e, vec] : by_mono) {
    auto lambda = cols.solve(vec);
    if (!lambda) throw std::runtime_error("expand_in_classes: value outside the coordinate span");
    for (int a = 0; a < coords.size(); ++a) {
      if ((*lambda)[std::size_t(a)].is_zero()) continue;
      auto [it, fresh] = out.try_emplace(a, SuperScalar(coords.ring()));
      it->second.add_term(e, (*lambda)[std::size_t(a)]);
    }
  }
  return out;
}

bool ChenField::is_zero() const {
  for (const auto& [i, c] : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

SuperField ChenField::apply(const SuperField& gamma) const {
  SuperField out(gamma.ring());
  for (const auto& [i, c] : coeffs) {
    if (c.is_zero()) continue;
    out += sf_scalar_mul(c, sf_partial(gamma, i));
  }
  return out;
}

bool operator==(const ChenField& a, const ChenField& b) {
  auto norm = [](const ChenField& f) {
    std::map<int, SuperScalar> m;
    for (const auto& [i, c] : f.coeffs)
      if (!c.is_zero()) m.emplace(i, c);
    return m;
  };
  auto ma = norm(a), mb = norm(b);
  if (ma.size() != mb.size()) return false;
  for (const auto& [i, c] : ma) {
    auto it = mb.find(i);
    if (it == mb.end() || !(it->second == c)) return false;
  }
  return true;
}

}  // namespace nildga
