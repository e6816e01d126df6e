#include "nildga/presentation.hpp"

#include <stdexcept>

#include "nildga/serialize.hpp"

namespace nildga {

DGAPresentation::DGAPresentation(std::vector<Generator> gens,
                                 std::map<std::pair<int, int>, Multivector> bracket_table,
                                 std::vector<Multivector> differential_table)
    : gens_(std::move(gens)), btab_(std::move(bracket_table)), dtab_(std::move(differential_table)) {
  if (gens_.size() > 30) throw std::invalid_argument("presentation too large");
  if (dtab_.size() != gens_.size())
    throw std::invalid_argument("differential table size mismatch");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.p + g.q != 1) throw std::invalid_argument("generator bidegree must have p+q=1");
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[j].name == g.name) throw std::invalid_argument("duplicate generator name " + g.name);
    if (auto d = dtab_[i].degree(); d && *d != 2)
      throw std::invalid_argument("differential image of " + g.name + " must have degree 2");
  }
  // Degree-one brackets are antisymmetric; store/check both orientations.
  for (auto& [key, val] : btab_) {
    if (auto d = val.degree(); d && *d != 1)
      throw std::invalid_argument("generator bracket must have degree 1");
    auto rev = std::make_pair(key.second, key.first);
    auto it = btab_.find(rev);
    if (it != btab_.end() && key < rev && !(it->second == -val))
      throw std::invalid_argument("generator bracket table not antisymmetric");
  }
}

Multivector DGAPresentation::gen_bracket(int i, int j) const {
  auto it = btab_.find({i, j});
  if (it != btab_.end()) return it->second;
  it = btab_.find({j, i});
  if (it != btab_.end()) return -it->second;
  return {};
}

std::pair<int, int> DGAPresentation::bidegree(Monomial m) const {
  int p = 0, q = 0;
  for (int k = 0; k < generator_count(); ++k)
    if (m.contains(k)) {
      p += gens_[std::size_t(k)].p;
      q += gens_[std::size_t(k)].q;
    }
  return {p, q};
}

int DGAPresentation::find_generator(const std::string& name) const {
  for (int k = 0; k < generator_count(); ++k)
    if (gens_[std::size_t(k)].name == name) return k;
  throw std::invalid_argument("unknown generator " + name);
}

Monomial DGAPresentation::monomial(std::initializer_list<const char*> names) const {
  Monomial m;
  for (const char* n : names) {
    int k = find_generator(n);
    if (m.contains(k)) throw std::invalid_argument("repeated generator in monomial");
    m.bits |= std::uint32_t(1) << k;
  }
  return m;
}

Multivector DGAPresentation::basis_element(std::initializer_list<const char*> names) const {
  return Multivector(monomial(names));
}

std::vector<Monomial> DGAPresentation::basis() const {
  std::vector<Monomial> out;
  out.reserve(dim());
  for (std::uint32_t m = 0; m < dim(); ++m) out.push_back(Monomial{m});
  return out;
}

std::vector<Monomial> DGAPresentation::basis(int p, int q) const {
  std::vector<Monomial> out;
  for (std::uint32_t m = 0; m < dim(); ++m)
    if (bidegree(Monomial{m}) == std::make_pair(p, q)) out.push_back(Monomial{m});
  return out;
}

Multivector differential(const DGAPresentation& pres, Monomial m) {
  Multivector out;
  int sign = 1;
  for (int k = 0; k < pres.generator_count(); ++k) {
    if (!m.contains(k)) continue;
    const Multivector dg = pres.gen_differential(k);
    if (!dg.is_zero()) {
      // d(gk) is even, so it moves to the front without a sign; the
      // (-1)^{j-1} from the anti-derivation is tracked in `sign`.
      Monomial rest{m.bits & ~(std::uint32_t(1) << k)};
      out += GaussianRational(sign) * wedge(dg, Multivector(rest));
    }
    sign = -sign;
  }
  return out;
}

Multivector differential(const DGAPresentation& pres, const Multivector& v) {
  Multivector out;
  for (const auto& [m, c] : v.terms()) out += c * differential(pres, m);
  return out;
}

SchoutenEngine::SchoutenEngine(const DGAPresentation& pres) : pres_(&pres), ngen_(pres.generator_count()) {
  const std::size_t dim = pres.dim();
  table_.assign(dim * dim, Multivector());
  auto idx = [&](std::uint32_t a, std::uint32_t b) { return (std::size_t(a) << ngen_) | b; };

  // Degree-one left argument first, by right degree.  For a generator g and
  // N = h ^ N' (h the lowest key): [g, h^N'] = [g,h]^N' + (-1)^{|N'|}[g,N']^h.
  std::vector<std::uint32_t> by_degree[32];
  for (std::uint32_t m = 0; m < dim; ++m) by_degree[std::popcount(m)].push_back(m);

  for (int gk = 0; gk < ngen_; ++gk) {
    std::uint32_t g = std::uint32_t(1) << gk;
    for (int deg = 1; deg <= ngen_; ++deg) {
      for (std::uint32_t n : by_degree[deg]) {
        if (deg == 1) {
          table_[idx(g, n)] = pres.gen_bracket(gk, std::countr_zero(n));
          continue;
        }
        int hk = std::countr_zero(n);
        std::uint32_t rest = n & (n - 1);
        Multivector acc = wedge(table_[idx(g, std::uint32_t(1) << hk)], Multivector(Monomial{rest}));
        int sign = ((deg - 1) & 1) ? -1 : 1;
        acc += GaussianRational(sign) *
               wedge(table_[idx(g, rest)], Multivector(Monomial{std::uint32_t(1) << hk}));
        table_[idx(g, n)] = std::move(acc);
      }
    }
  }

  // Higher left degree: M = g ^ M' (g the lowest key):
  // [g^M', N] = g^[M',N] + (-1)^{|M'|} M'^[g,N].
  for (int dm = 2; dm <= ngen_; ++dm) {
    for (std::uint32_t m : by_degree[dm]) {
      int gk = std::countr_zero(m);
      std::uint32_t g = std::uint32_t(1) << gk;
      std::uint32_t rest = m & (m - 1);
      int sign = ((dm - 1) & 1) ? -1 : 1;
      for (std::uint32_t n = 1; n < dim; ++n) {
        Multivector acc = wedge(Multivector(Monomial{g}), table_[idx(rest, n)]);
        acc += GaussianRational(sign) * wedge(Multivector(Monomial{rest}), table_[idx(g, n)]);
        if (!acc.is_zero()) table_[idx(m, n)] = std::move(acc);
      }
    }
  }
}

Multivector SchoutenEngine::bracket(const Multivector& a, const Multivector& b) const {
  Multivector out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const Multivector& t = bracket(ma, mb);
      if (!t.is_zero()) out += (ca * cb) * t;
    }
  return out;
}

Multivector schouten(const DGAPresentation& pres, const Multivector& a, const Multivector& b) {
  SchoutenEngine engine(pres);
  return engine.bracket(a, b);
}

namespace {

std::string pair_str(const DGAPresentation& p, Monomial a, Monomial b) {
  return "(" + monomial_name(p, a) + ", " + monomial_name(p, b) + ")";
}
std::string triple_str(const DGAPresentation& p, Monomial a, Monomial b, Monomial c) {
  return "(" + monomial_name(p, a) + ", " + monomial_name(p, b) + ", " + monomial_name(p, c) + ")";
}

}  // namespace

AxiomReport verify_axioms(const DGAPresentation& pres, const VerifyOptions& opts) {
  SchoutenEngine eng(pres);
  const auto basis = pres.basis();
  AxiomReport rep;

  auto run = [&](const std::string& name, auto&& body) {
    AxiomCheck chk;
    chk.axiom = name;
    body(chk);
    rep.checks.push_back(std::move(chk));
  };

  run("L1 bracket degree", [&](AxiomCheck& chk) {
    for (Monomial a : basis)
      for (Monomial b : basis) {
        ++chk.checked;
        const Multivector& v = eng.bracket(a, b);
        if (auto d = v.degree(); d && *d != a.degree() + b.degree() - 1) {
          chk.pass = false;
          chk.counterexample = pair_str(pres, a, b);
          return;
        }
      }
  });

  run("L2 graded antisymmetry", [&](AxiomCheck& chk) {
    for (Monomial a : basis)
      for (Monomial b : basis) {
        ++chk.checked;
        int s = (((a.degree() + 1) * (b.degree() + 1)) & 1) ? 1 : -1;
        if (!(eng.bracket(a, b) == GaussianRational(s) * eng.bracket(b, a))) {
          chk.pass = false;
          chk.counterexample = pair_str(pres, a, b);
          return;
        }
      }
  });

  run("L3 Jacobi", [&](AxiomCheck& chk) {
    auto sgn = [](int x) { return (x & 1) ? -1 : 1; };
    for (Monomial a : basis) {
      if (opts.jacobi_max_degree && a.degree() > opts.jacobi_max_degree) continue;
      for (Monomial b : basis) {
        if (opts.jacobi_max_degree && b.degree() > opts.jacobi_max_degree) continue;
        for (Monomial c : basis) {
          if (opts.jacobi_max_degree && c.degree() > opts.jacobi_max_degree) continue;
          ++chk.checked;
          int da = a.degree(), db = b.degree(), dc = c.degree();
          Multivector sum = GaussianRational(sgn((da + 1) * (dc + 1))) * eng.bracket(Multivector(a), eng.bracket(b, c));
          sum += GaussianRational(sgn((db + 1) * (da + 1))) * eng.bracket(Multivector(b), eng.bracket(c, a));
          sum += GaussianRational(sgn((dc + 1) * (db + 1))) * eng.bracket(Multivector(c), eng.bracket(a, b));
          if (!sum.is_zero()) {
            chk.pass = false;
            chk.counterexample = triple_str(pres, a, b, c);
            return;
          }
        }
      }
    }
  });

  run("C1 wedge degree", [&](AxiomCheck& chk) {
    for (Monomial a : basis)
      for (Monomial b : basis) {
        ++chk.checked;
        Multivector v = wedge(a, b);
        if (auto d = v.degree(); d && *d != a.degree() + b.degree()) {
          chk.pass = false;
          chk.counterexample = pair_str(pres, a, b);
          return;
        }
      }
  });

  run("C2 graded commutativity", [&](AxiomCheck& chk) {
    for (Monomial a : basis)
      for (Monomial b : basis) {
        ++chk.checked;
        int s = ((a.degree() * b.degree()) & 1) ? -1 : 1;
        if (!(wedge(a, b) == GaussianRational(s) * wedge(b, a))) {
          chk.pass = false;
          chk.counterexample = pair_str(pres, a, b);
          return;
        }
      }
  });

  run("C3 Leibniz / distributive", [&](AxiomCheck& chk) {
    auto sgn = [](int x) { return GaussianRational((x & 1) ? -1 : 1); };
    for (Monomial a : basis) {
      Multivector va{a};
      for (Monomial b : basis) {
        Multivector vb{b};
        Multivector ab = wedge(a, b);
        int da = a.degree(), db = b.degree();
        for (Monomial c : basis) {
          ++chk.checked;
          int dc = c.degree();
          const Multivector& bc = eng.bracket(b, c);
          const Multivector& ac = eng.bracket(a, c);
          // [a^b, c] = a^[b,c] + (-1)^{ab} b^[a,c]
          Multivector lhs = eng.bracket(ab, Multivector(c));
          Multivector rhs = wedge(va, bc) + sgn(da * db) * wedge(vb, ac);
          if (!(lhs == rhs)) {
            chk.pass = false;
            chk.counterexample = "C3 at " + triple_str(pres, a, b, c);
            return;
          }
          // expanded second form: ... = a^[b,c] + (-1)^{b+bc}[a,c]^b
          Multivector rhs2 = wedge(va, bc) + sgn(db + db * dc) * wedge(ac, vb);
          if (!(lhs == rhs2)) {
            chk.pass = false;
            chk.counterexample = "distributive2 at " + triple_str(pres, a, b, c);
            return;
          }
          // [a, b^c] = [a,b]^c + (-1)^{bc}[a,c]^b = [a,b]^c + (-1)^{b+ab} b^[a,c]
          const Multivector& ab_br = eng.bracket(a, b);
          Multivector lhs1 = eng.bracket(Multivector(a), wedge(b, c));
          Multivector r1 = wedge(ab_br, Multivector(c)) + sgn(db * dc) * wedge(ac, vb);
          if (!(lhs1 == r1)) {
            chk.pass = false;
            chk.counterexample = "distributive1 at " + triple_str(pres, a, b, c);
            return;
          }
          Multivector r2 = wedge(ab_br, Multivector(c)) + sgn(db + da * db) * wedge(vb, ac);
          if (!(lhs1 == r2)) {
            chk.pass = false;
            chk.counterexample = "distributive1' at " + triple_str(pres, a, b, c);
            return;
          }
        }
      }
    }
  });

  run("D1 differential degree", [&](AxiomCheck& chk) {
    for (Monomial a : basis) {
      ++chk.checked;
      Multivector v = differential(pres, a);
      if (auto d = v.degree(); d && *d != a.degree() + 1) {
        chk.pass = false;
        chk.counterexample = monomial_name(pres, a);
        return;
      }
    }
  });

  run("D2 d^2 = 0", [&](AxiomCheck& chk) {
    for (Monomial a : basis) {
      ++chk.checked;
      if (!differential(pres, differential(pres, a)).is_zero()) {
        chk.pass = false;
        chk.counterexample = monomial_name(pres, a);
        return;
      }
    }
  });

  run("D3 bracket compatibility", [&](AxiomCheck& chk) {
    for (Monomial a : basis) {
      Multivector da = differential(pres, a);
      for (Monomial b : basis) {
        ++chk.checked;
        Multivector lhs = differential(pres, eng.bracket(a, b));
        Multivector rhs = eng.bracket(da, Multivector(b));
        int s = (a.degree() & 1) ? -1 : 1;
        rhs += GaussianRational(-s) * eng.bracket(Multivector(a), differential(pres, b));
        if (!(lhs == rhs)) {
          chk.pass = false;
          chk.counterexample = pair_str(pres, a, b);
          return;
        }
      }
    }
  });

  run("D4 wedge Leibniz", [&](AxiomCheck& chk) {
    for (Monomial a : basis) {
      Multivector da = differential(pres, a);
      for (Monomial b : basis) {
        ++chk.checked;
        Multivector lhs = differential(pres, wedge(a, b));
        int s = (a.degree() & 1) ? -1 : 1;
        Multivector rhs = wedge(da, Multivector(b)) + GaussianRational(s) * wedge(Multivector(a), differential(pres, b));
        if (!(lhs == rhs)) {
          chk.pass = false;
          chk.counterexample = pair_str(pres, a, b);
          return;
        }
      }
    }
  });

  return rep;
}

}  // namespace nildga
