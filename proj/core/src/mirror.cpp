#include "nildga/mirror.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "nildga/serialize.hpp"

namespace nildga {

namespace {

// Basis indices of {Tbar, Wbar, omega, rho, T, W, owbar, rhobar}.
enum : std::size_t { bTbar, bWbar, bOmega, bRho, bT, bW, bOw, bOr };

const GaussianRational kI(Rational(0), Rational(1));
const GaussianRational kHalf(Rational(1, 2));

Matrix conjugate_rows(const Matrix& m) {
  // Conjugation swaps each basis vector with its conjugate partner four
  // positions away.
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, (c + 4) % 8) = m.at(r, c).conj();
  return out;
}

}  // namespace

GraphFrame graph_frame(const GaussianRational& t1, const GaussianRational& t2, const GaussianRational& t3,
                       const GaussianRational& t4) {
  Matrix m(4, 8);
  m.at(0, bTbar) = 1;
  m.at(0, bT) = t3;
  m.at(0, bOr) = t1;
  m.at(1, bWbar) = 1;
  m.at(1, bW) = t2;
  m.at(1, bOw) = -t1;
  m.at(2, bOmega) = 1;
  m.at(2, bW) = t4;
  m.at(2, bOw) = -t3;
  m.at(3, bRho) = 1;
  m.at(3, bT) = -t4;
  m.at(3, bOr) = -t2;
  return {m};
}

namespace {

Matrix special_family_rows(const GaussianRational& t) {
  if (t.is_zero()) throw std::invalid_argument("special family: t must be nonzero");
  GaussianRational tbar = t.conj();
  GaussianRational t1 = kHalf * t;
  GaussianRational t4 = GaussianRational(-2) / tbar;
  return graph_frame(t1, GaussianRational(), GaussianRational(), t4).rows;
}

// Rows X + i_X Omega, Y + ..., U + ..., V + ... in the complex basis, for
// Omega built from w = u + iv with u2 = v2 = 0.
Matrix symplectic_graph_rows(const GaussianRational& w) {
  GaussianRational wbar = w.conj();
  Matrix m(4, 8);
  m.at(0, bTbar) = 1;
  m.at(0, bT) = 1;
  m.at(0, bRho) = kHalf * wbar;
  m.at(0, bOr) = kHalf * w;
  m.at(1, bTbar) = -kI;
  m.at(1, bT) = kI;
  m.at(1, bRho) = kI * kHalf * wbar;
  m.at(1, bOr) = -kI * kHalf * w;
  m.at(2, bWbar) = 1;
  m.at(2, bW) = 1;
  m.at(2, bOmega) = -kHalf * wbar;
  m.at(2, bOw) = -kHalf * w;
  m.at(3, bWbar) = -kI;
  m.at(3, bW) = kI;
  m.at(3, bOmega) = -kI * kHalf * wbar;
  m.at(3, bOw) = kI * kHalf * w;
  return m;
}

}  // namespace

bool special_family_check(const GaussianRational& t, std::optional<GaussianRational> omega_t) {
  Matrix graph = special_family_rows(t);
  Matrix real_rows = symplectic_graph_rows(omega_t.value_or(t));
  if (graph.rank() != 4 || real_rows.rank() != 4) return false;
  return Matrix::vstack(graph, real_rows).rank() == 4;
}

bool conjugate_distribution_matches(const GaussianRational& t) {
  Matrix graph = special_family_rows(t);
  return Matrix::vstack(graph, conjugate_rows(graph)).rank() == 4;
}

MirrorMap::MirrorMap(const DGAPresentation& cx, const DGAPresentation& sp, const Rational& delta)
    : cx_(&cx), sp_(&sp) {
  if (delta == 0) throw std::invalid_argument("MirrorMap: delta must be nonzero");
  gen_image_.resize(std::size_t(cx.generator_count()));
  gen_image_[std::size_t(cx.find_generator("ow"))] =
      GaussianRational(Rational(0), Rational(2)) * sp.basis_element({"ap"});
  gen_image_[std::size_t(cx.find_generator("or"))] = sp.basis_element({"del"});
  gen_image_[std::size_t(cx.find_generator("T"))] = sp.basis_element({"gam"});
  gen_image_[std::size_t(cx.find_generator("W"))] = GaussianRational(-delta) * sp.basis_element({"bp"});
}

Multivector MirrorMap::apply(Monomial m) const {
  Multivector out = Multivector::scalar(GaussianRational(1));
  for (int k = 0; k < cx_->generator_count(); ++k)
    if (m.contains(k)) out = wedge(out, gen_image_[std::size_t(k)]);
  return out;
}

Multivector MirrorMap::apply(const Multivector& v) const {
  Multivector out;
  for (const auto& [m, c] : v.terms()) out += c * apply(m);
  return out;
}

MirrorReport verify_mirror(const DGAPresentation& cx, const DGAPresentation& sp, const Rational& delta) {
  MirrorMap ups(cx, sp, delta);
  SchoutenEngine ecx(cx), esp(sp);
  MirrorReport rep;
  auto basis = cx.basis();

  Matrix images(sp.dim(), cx.dim());
  for (Monomial m : basis) {
    Multivector img = ups.apply(m);
    for (const auto& [mm, c] : img.terms()) images.at(mm.bits, m.bits) = c;
    if (!(ups.apply(differential(cx, m)) == differential(sp, img))) {
      rep.chain_rule = false;
      if (rep.counterexample.empty()) rep.counterexample = "d-chain at " + monomial_name(cx, m);
    }
  }
  if (images.rank() != cx.dim()) rep.bijective = false;

  for (Monomial a : basis) {
    Multivector ia = ups.apply(a);
    for (Monomial b : basis) {
      Multivector ib = ups.apply(b);
      if (!(ups.apply(wedge(a, b)) == wedge(ia, ib))) {
        rep.multiplicative = false;
        if (rep.counterexample.empty())
          rep.counterexample = "wedge at (" + monomial_name(cx, a) + ", " + monomial_name(cx, b) + ")";
      }
      if (!(ups.apply(ecx.bracket(a, b)) == esp.bracket(ia, ib))) {
        rep.bracket_morphism = false;
        if (rep.counterexample.empty())
          rep.counterexample = "bracket at (" + monomial_name(cx, a) + ", " + monomial_name(cx, b) + ")";
      }
    }
  }
  return rep;
}

std::array<int, 5> derham_dims(const DGAPresentation& sp) {
  // d per total degree on the 4-generator exterior algebra.
  std::array<std::vector<Monomial>, 5> basis;
  for (std::uint32_t m = 0; m < sp.dim(); ++m) basis[std::size_t(std::popcount(m))].push_back(Monomial{m});
  std::array<Matrix, 5> d;
  for (int k = 0; k <= 4; ++k) {
    const auto& target = basis[std::size_t(std::min(k + 1, 4))];
    std::map<Monomial, std::size_t> tindex;
    for (std::size_t i = 0; i < target.size(); ++i) tindex[target[i]] = i;
    d[std::size_t(k)] = Matrix(k == 4 ? 0 : target.size(), basis[std::size_t(k)].size());
    for (std::size_t c = 0; c < basis[std::size_t(k)].size(); ++c) {
      Multivector img = differential(sp, basis[std::size_t(k)][c]);
      for (const auto& [m, coef] : img.terms()) d[std::size_t(k)].at(tindex.at(m), c) = coef;
    }
  }
  std::array<int, 5> b{};
  for (int k = 0; k <= 4; ++k) {
    int kernel = int(basis[std::size_t(k)].size() - d[std::size_t(k)].rank());
    int image = k == 0 ? 0 : int(d[std::size_t(k - 1)].rank());
    b[std::size_t(k)] = kernel - image;
  }
  return b;
}

CohomologyMatch cohomology_match(const Hodge& hodge_cx, const SymplecticSpec& spec) {
  spec.validate();
  const DGAPresentation& cx = hodge_cx.presentation();
  DGAPresentation sp = symplectic_dga(spec);
  MirrorMap ups(cx, sp, spec.delta());

  CohomologyMatch out;
  out.betti = derham_dims(sp);

  for (int k = 0; k <= 2; ++k) {
    std::vector<Multivector> classes;
    for (const auto& [pq, cls] : hodge_cx.cohomology_basis().classes)
      if (pq.first + pq.second == k)
        for (const auto& c : cls) classes.push_back(c);
    out.complex_dims[std::size_t(k)] = int(classes.size());
    if (int(classes.size()) != out.betti[std::size_t(k)]) {
      out.detail = "dimension mismatch at degree " + std::to_string(k);
      return out;
    }

    // Images must be d-closed and independent modulo exact forms.
    std::vector<Monomial> kbasis;
    for (std::uint32_t m = 0; m < sp.dim(); ++m)
      if (std::popcount(m) == k) kbasis.push_back(Monomial{m});
    std::map<Monomial, std::size_t> kindex;
    for (std::size_t i = 0; i < kbasis.size(); ++i) kindex[kbasis[i]] = i;

    std::vector<std::vector<GaussianRational>> cols;
    if (k > 0)
      for (std::uint32_t m = 0; m < sp.dim(); ++m) {
        if (std::popcount(m) != k - 1) continue;
        Multivector img = differential(sp, Monomial{m});
        std::vector<GaussianRational> col(kbasis.size());
        for (const auto& [mm, c] : img.terms()) col[kindex.at(mm)] = c;
        cols.push_back(std::move(col));
      }
    const std::size_t exact_cols = cols.size();
    Matrix exact(kbasis.size(), exact_cols);
    for (std::size_t c = 0; c < exact_cols; ++c)
      for (std::size_t r = 0; r < kbasis.size(); ++r) exact.at(r, c) = cols[c][r];
    std::size_t exact_rank = exact.rank();

    Matrix joint(kbasis.size(), exact_cols + classes.size());
    for (std::size_t c = 0; c < exact_cols; ++c)
      for (std::size_t r = 0; r < kbasis.size(); ++r) joint.at(r, c) = cols[c][r];
    for (std::size_t j = 0; j < classes.size(); ++j) {
      Multivector img = ups.apply(classes[j]);
      if (!differential(sp, img).is_zero()) {
        out.detail = "mirror image not closed at degree " + std::to_string(k);
        return out;
      }
      for (const auto& [mm, c] : img.terms()) joint.at(kindex.at(mm), exact_cols + j) = c;
    }
    if (joint.rank() != exact_rank + classes.size()) {
      out.detail = "mirror images dependent modulo exact forms at degree " + std::to_string(k);
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace nildga
