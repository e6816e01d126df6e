// Acceptance suite: one line per criterion, exact checks throughout.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "nildga/frobenius.hpp"
#include "nildga/hodge.hpp"
#include "nildga/kuranishi.hpp"
#include "nildga/matrix.hpp"
#include "nildga/mirror.hpp"
#include "nildga/nilcomplex.hpp"
#include "nildga/schouten_direct.hpp"
#include "nildga/serialize.hpp"
#include "nildga/symbolic.hpp"

using namespace nildga;

namespace {

GaussianRational gq(long p, long q = 1) { return GaussianRational(Rational(p, q)); }
GaussianRational gqi(long p, long q = 1) { return GaussianRational(Rational(0), Rational(p, q)); }

bool same_span(const DGAPresentation& pres, const std::vector<Multivector>& a,
               const std::vector<Multivector>& b) {
  const std::size_t dim = pres.dim();
  Matrix ma(dim, a.size()), mb(dim, b.size()), joint(dim, a.size() + b.size());
  for (std::size_t c = 0; c < a.size(); ++c)
    for (const auto& [m, x] : a[c].terms()) {
      ma.at(m.bits, c) = x;
      joint.at(m.bits, c) = x;
    }
  for (std::size_t c = 0; c < b.size(); ++c)
    for (const auto& [m, x] : b[c].terms()) {
      mb.at(m.bits, c) = x;
      joint.at(m.bits, a.size() + c) = x;
    }
  std::size_t ra = ma.rank();
  return ra == mb.rank() && joint.rank() == ra;
}

const std::vector<SymplecticSpec>& symplectic_samples() {
  static const std::vector<SymplecticSpec> samples = {
      {Rational(1), Rational(0), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0), Rational(0)},
      {Rational(2), Rational(1), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1), Rational(0)},  // delta = -1
  };
  return samples;
}

// 1. Surface cohomology table: dimensions and exact spans.
bool criterion_cohomology_table() {
  DGAPresentation pres = complex_dga(build_kodaira(1));
  Hodge hodge(pres);
  const auto& coh = hodge.cohomology_basis();
  for (int p = 0; p <= 2; ++p) {
    if (coh.dim(p, 0) != 1 || coh.dim(p, 1) != 2 || coh.dim(p, 2) != 1) return false;
  }
  auto el = [&](std::initializer_list<const char*> names) { return pres.basis_element(names); };
  return same_span(pres, coh.classes.at({0, 0}), {Multivector::scalar(gq(1))}) &&
         same_span(pres, coh.classes.at({0, 1}), {el({"ow"}), el({"or"})}) &&
         same_span(pres, coh.classes.at({0, 2}), {el({"ow", "or"})}) &&
         same_span(pres, coh.classes.at({1, 0}), {el({"W"})}) &&
         same_span(pres, coh.classes.at({1, 1}), {el({"ow", "T"}), el({"or", "W"})}) &&
         same_span(pres, coh.classes.at({1, 2}), {el({"ow", "or", "T"})}) &&
         same_span(pres, coh.classes.at({2, 0}), {el({"T", "W"})}) &&
         same_span(pres, coh.classes.at({2, 1}), {el({"ow", "T", "W"}), el({"or", "T", "W"})}) &&
         same_span(pres, coh.classes.at({2, 2}), {el({"ow", "or", "T", "W"})});
}

// 2. Full axiom suite for the complex family n = 1, 2, 3 and the
//    symplectic samples (Jacobi restricted to degree <= 4 at n = 3).
bool criterion_axioms() {
  for (int n = 1; n <= 3; ++n) {
    VerifyOptions opts;
    if (n == 3) opts.jacobi_max_degree = 4;
    AxiomReport rep = verify_axioms(complex_dga(build_kodaira(n)), opts);
    if (!rep.all_pass()) return false;
  }
  for (const auto& s : symplectic_samples())
    if (!verify_axioms(symplectic_dga(s)).all_pass()) return false;
  return true;
}

// 3. The biderivation extension equals the direct-formula oracle on every
//    basis pair for n = 1, 2.
bool criterion_oracle() {
  for (int n = 1; n <= 2; ++n) {
    NilComplexSpec spec = build_kodaira(n);
    DGAPresentation pres = complex_dga(spec);
    SchoutenEngine eng(pres);
    SchoutenDirect direct(spec, pres);
    for (Monomial a : pres.basis())
      for (Monomial b : pres.basis())
        if (!(eng.bracket(a, b) == direct.bracket(a, b))) return false;
  }
  return true;
}

// 4. Strict-mode recursion at D = 6 reproduces the closed-form solution
//    coefficient-for-coefficient and leaves no residual.
bool criterion_kuranishi_closed_form() {
  DGAPresentation pres = complex_dga(build_kodaira(1));
  SchoutenEngine eng(pres);
  Hodge hodge(pres);
  CoordinateSystem coords = CoordinateSystem::kodaira_surface(pres, hodge, 6);
  MCSolution sol = kuranishi_solve(pres, eng, hodge, coords);
  if (!sol.chen.is_zero()) return false;
  if (!mc_residual(pres, eng, sol.gamma, sol.chen).is_zero()) return false;

  MCSolution cf = closed_form_kodaira(pres, coords);
  if (!(sol.gamma == cf.gamma)) return false;

  auto exps = [&](std::initializer_list<std::pair<const char*, int>> spec) {
    ExpVec e(std::size_t(coords.size()), 0);
    for (const auto& [name, k] : spec) e[std::size_t(coords.index_of(name))] = std::uint8_t(k);
    return e;
  };
  SuperScalar cT = sol.gamma.coeff(pres.monomial({"T"}));
  SuperScalar cRT = sol.gamma.coeff(pres.monomial({"or", "T"}));
  for (int k = 0; k <= 4; ++k) {
    if (cT.coeff(exps({{"s0", 1}, {"t4", 1}, {"t2", k}})) != gq(-1)) return false;
    if (cRT.coeff(exps({{"s0", 1}, {"s3", 1}, {"t2", k}})) != gq(-1)) return false;
  }
  // the correction touches exactly the two directions
  SuperField corr = sol.gamma - coords.gamma1();
  return corr.terms().size() == 2;
}

// 5. The Chen coefficients vanish exactly on both components, are nonzero
//    at the surrogate point, and the gauge brackets match the displayed
//    generators.
bool criterion_chen_components() {
  auto chen = symbolic::chen_symbolic();
  if (chen.size() != 4) return false;
  const int s0 = symbolic::var_index("s0"), s3 = symbolic::var_index("s3"),
            t4 = symbolic::var_index("t4");
  for (const auto& [name, c] : chen) {
    if (!c.substitute_zero(s0).is_zero()) return false;
    if (!c.substitute_zero(t4).substitute_zero(s3).is_zero()) return false;
  }
  std::array<GaussianRational, symbolic::kNumVars> pt{};
  pt[std::size_t(s0)] = gq(1);
  pt[std::size_t(s3)] = gq(1);
  pt[std::size_t(t4)] = gq(1);
  if (chen.at("s1").eval(pt) != gqi(-1, 2)) return false;
  if (chen.at("t1").eval(pt) != gqi(-1, 2)) return false;
  if (chen.at("t3").eval(pt) != gqi(1, 2)) return false;
  if (chen.at("t5").eval(pt) != gqi(-1)) return false;

  using symbolic::Component;
  using symbolic::Poly;
  using symbolic::RationalExpr;
  Poly s0sq = Poly::variable(s0) * Poly::variable(s0);
  Poly s3sq = Poly::variable(s3) * Poly::variable(s3);

  auto br0 = symbolic::gauge_bracket(Component::K0, "s0");
  if (br0.size() != 1 || !(br0.at("t5") == RationalExpr{gqi(-1) * s3sq, 1})) return false;
  auto br1 = symbolic::gauge_bracket(Component::K1, "s3");
  RationalExpr two_i{Poly::constant(gqi(2)), 0};
  if (br1.size() != 1 || !(two_i * br1.at("t1") == RationalExpr{-s0sq, 1})) return false;
  auto br2 = symbolic::gauge_bracket(Component::K1, "t4");
  if (br2.size() != 1 || !(two_i * br2.at("s1") == RationalExpr{s0sq, 1})) return false;
  return true;
}

// 6. The product table on the generic stratum at D = 6: every displayed
//    entry, the unit law, trivial rows, supercommutativity, associativity.
bool criterion_frobenius() {
  DGAPresentation pres = complex_dga(build_kodaira(1));
  SchoutenEngine eng(pres);
  Hodge hodge(pres);
  CoordinateSystem coords = CoordinateSystem::kodaira_surface(pres, hodge, 6).without("s0");
  FrobeniusTable table = frobenius_products(pres, eng, hodge, coords, coords.gamma1(), {"t5"});

  auto idx = [&](const char* n) { return coords.index_of(n); };
  auto mu = [&](const char* a, const char* b, const char* g) {
    return table.mu(idx(a), idx(b), idx(g), coords.ring());
  };
  SuperScalar one = SuperScalar::constant(coords.ring(), gq(1));
  SuperScalar geo = geometric_series(coords.ring(), idx("t2"));
  SuperScalar t4geo = coords.coordinate("t4") * geo;
  SuperScalar s3geo = coords.coordinate("s3") * geo;

  if (!(mu("t1", "s2", "s4") == t4geo && mu("s2", "t1", "s4") == t4geo)) return false;
  if (!(mu("t2", "s1", "s4") == t4geo && mu("s1", "t2", "s4") == t4geo)) return false;
  if (!(mu("t3", "s2", "s4") == one && mu("s2", "t3", "s4") == one)) return false;
  if (!(mu("t4", "s1", "s4") == one && mu("s1", "t4", "s4") == one)) return false;
  if (!(mu("s1", "s2", "s4") == s3geo && mu("s2", "s1", "s4") == -s3geo)) return false;
  const char* six[] = {"t1", "t2", "t3", "t4", "s1", "s2"};
  auto is_displayed = [&](std::string a, std::string b) {
    return (a == "t1" && b == "s2") || (a == "s2" && b == "t1") || (a == "t2" && b == "s1") ||
           (a == "s1" && b == "t2") || (a == "t3" && b == "s2") || (a == "s2" && b == "t3") ||
           (a == "t4" && b == "s1") || (a == "s1" && b == "t4") || (a == "s1" && b == "s2") ||
           (a == "s2" && b == "s1");
  };
  for (const char* a : six)
    for (const char* b : six)
      if (!is_displayed(a, b) && table.entries.count({idx(a), idx(b)})) return false;

  for (const auto& c : coords.coords()) {
    if (c.name != "t5") {
      if (!(mu("t0", c.name.c_str(), c.name.c_str()) == one)) return false;
      if (!(mu(c.name.c_str(), "t0", c.name.c_str()) == one)) return false;
    }
    if (c.name == "t0") continue;
    for (const char* t : {"s3", "s4", "s5"})
      if (table.entries.count({idx(t), coords.index_of(c.name)}) ||
          table.entries.count({coords.index_of(c.name), idx(t)}))
        return false;
  }

  std::vector<int> qc;
  for (int i = 0; i < coords.size(); ++i)
    if (coords.coords()[std::size_t(i)].name != "t5") qc.push_back(i);
  auto odd = [&](int i) { return coords.ring()->odd[std::size_t(i)] ? 1 : 0; };
  for (int a : qc)
    for (int b : qc) {
      GaussianRational sgn((odd(a) && odd(b)) ? -1 : 1);
      for (int g : qc)
        if (!(table.mu(a, b, g, coords.ring()) == sgn * table.mu(b, a, g, coords.ring()))) return false;
    }
  for (int a : qc)
    for (int b : qc)
      for (int g : qc)
        for (int eps : qc) {
          SuperScalar lhs(coords.ring()), rhs(coords.ring());
          for (int d : qc) {
            lhs += table.mu(a, b, d, coords.ring()) * table.mu(d, g, eps, coords.ring());
            SuperScalar term = table.mu(b, g, d, coords.ring()) * table.mu(a, d, eps, coords.ring());
            rhs += ((odd(a) * (odd(b) + odd(g) + odd(d))) % 2) ? -term : term;
          }
          if (!(lhs == rhs)) return false;
        }
  return true;
}

// 7. The stated unobstructed degree-two solution for n = 2, 3 at D = 4,
//    with the generating bracket data.
bool criterion_generalized() {
  for (int n = 2; n <= 3; ++n) {
    DGAPresentation pres = complex_dga(build_kodaira(n));
    SchoutenEngine eng(pres);
    Hodge hodge(pres);
    CoordinateSystem coords = CoordinateSystem::kodaira_degree2(pres, hodge, 4);
    MCSolution stated = closed_form_degree2(pres, coords);
    if (!stated.chen.is_zero()) return false;
    if (!mc_residual(pres, eng, stated.gamma, stated.chen).is_zero()) return false;

    auto ow = [&](int j) { return Multivector(Monomial{1u << j}); };
    Multivector psi(Monomial{(1u << n) | (1u << (2 * n + 1))});
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Multivector calB(Monomial{(1u << j) | (1u << n)});
        Multivector B(Monomial{(1u << (n + 1 + k)) | (1u << (2 * n + 1))});
        Multivector s = gq(1, 2) * Multivector(Monomial{(1u << j) | (1u << (n + 1 + k))}) -
                        gq(1, 2) * Multivector(Monomial{(1u << k) | (1u << (n + 1 + j))});
        Multivector ds = differential(pres, s);
        if (!(eng.bracket(calB, B) == ds)) return false;
        if (!(ds == gqi(1, 2) * wedge(wedge(ow(j), ow(k)), pres.basis_element({"W"})))) return false;
        if (!(eng.bracket(s, psi) == gq(-1) * ds)) return false;
        for (int l = 0; l < n; ++l) {
          Multivector calBl(Monomial{(1u << l) | (1u << n)});
          if (!(eng.bracket(s, calBl) == gqi(1, 2) * wedge(wedge(ow(j), ow(k)), ow(l)))) return false;
        }
      }
  }
  return true;
}

// 8. Every Schouten bracket of harmonic classes on the surface is exact;
//    the two nonzero ones are the displayed differentials.
bool criterion_abelian_cohomology() {
  DGAPresentation pres = complex_dga(build_kodaira(1));
  SchoutenEngine eng(pres);
  Hodge hodge(pres);
  std::vector<Multivector> harmonic;
  for (const auto& [pq, classes] : hodge.cohomology_basis().classes)
    for (const auto& c : classes) harmonic.push_back(c);
  if (harmonic.size() != 12) return false;
  for (const auto& a : harmonic)
    for (const auto& b : harmonic) {
      Multivector br = eng.bracket(a, b);
      if (!hodge.harmonic_projection(br).is_zero()) return false;
      if (!hodge.exact_preimage(br)) return false;
    }
  auto el = [&](std::initializer_list<const char*> names) { return pres.basis_element(names); };
  if (!(eng.bracket(el({"or"}), el({"T", "W"})) == -differential(pres, el({"T"})))) return false;
  Multivector t_rho = wedge(el({"T"}), el({"or"}));
  return eng.bracket(el({"or"}), el({"or", "T", "W"})) == -differential(pres, t_rho);
}

// 9. Mirror isomorphism on all monomial pairs for every sample, and the
//    degree <= 2 cohomology comparison (1, 3, 4).
bool criterion_mirror() {
  DGAPresentation cx = complex_dga(build_kodaira(1));
  Hodge hodge(cx);
  for (const auto& s : symplectic_samples()) {
    DGAPresentation sp = symplectic_dga(s);
    if (!verify_mirror(cx, sp, s.delta()).pass()) return false;
    CohomologyMatch m = cohomology_match(hodge, s);
    if (!m.ok) return false;
    if (m.betti[0] != 1 || m.betti[1] != 3 || m.betti[2] != 4) return false;
    if (m.complex_dims[0] != 1 || m.complex_dims[1] != 3 || m.complex_dims[2] != 4) return false;
  }
  return true;
}

// 10. The special symplectic family, including a mismatched pair.
bool criterion_special_family() {
  for (GaussianRational t : {gq(1), gqi(1), GaussianRational(Rational(1), Rational(1)), gq(3, 2)}) {
    if (!special_family_check(t)) return false;
    if (!conjugate_distribution_matches(t)) return false;
  }
  return special_family_check(gq(2), gq(1)) == false;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  std::vector<Criterion> criteria = {
      {"cohomology table of the surface", criterion_cohomology_table},
      {"DGA axiom suite (complex n=1,2,3; symplectic samples)", criterion_axioms},
      {"bracket oracle agreement (n=1,2)", criterion_oracle},
      {"Kuranishi recursion equals the closed form (strict, D=6)", criterion_kuranishi_closed_form},
      {"Chen components, surrogate point, gauge brackets", criterion_chen_components},
      {"weak Frobenius product table (D=6)", criterion_frobenius},
      {"generalized degree-two deformations (n=2,3, D=4)", criterion_generalized},
      {"abelian cohomology brackets", criterion_abelian_cohomology},
      {"mirror isomorphism and cohomology match", criterion_mirror},
      {"special symplectic family", criterion_special_family},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << "CRITERION " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].name
              << "  (" << ms.count() << " ms)";
    if (!error.empty()) std::cout << "  [" << error << "]";
    std::cout << "\n";
    if (!ok) ++failures;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
