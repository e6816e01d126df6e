#include "nildga/schouten_direct.hpp"

#include <stdexcept>

namespace nildga {

SchoutenDirect::SchoutenDirect(const NilComplexSpec& spec, const DGAPresentation& pres)
    : spec_(&spec), pres_(&pres), n_(spec.n()) {
  if (pres.generator_count() != 2 * n_ + 2)
    throw std::invalid_argument("SchoutenDirect: presentation does not match a Lie-algebra spec");
  form_mask_ = 0;
  vector_mask_ = 0;
  for (int k = 0; k < pres.generator_count(); ++k) {
    const auto& g = pres.generators()[std::size_t(k)];
    if (g.q == 1)
      form_mask_ |= std::uint32_t(1) << k;
    else
      vector_mask_ |= std::uint32_t(1) << k;
  }
}

// L_V on an invariant (0,q)-form, extended as an even derivation from
// L_{T_k} or = sum_j F_{jk} owj, L_{T_k} owj = 0, L_W = 0.
Multivector SchoutenDirect::lie_derivative(int vector_key, Monomial form) const {
  const int rho_key = n_;
  const int vec_index = vector_key - (n_ + 1);  // T_1..T_n then W
  if (vec_index >= n_) return {};                // W is central
  if (!form.contains(rho_key)) return {};        // only or has a nonzero image
  Multivector l_rho;
  for (int j = 0; j < n_; ++j)
    if (!spec_->F(j, vec_index).is_zero())
      l_rho.add_term(Monomial{std::uint32_t(1) << j}, spec_->F(j, vec_index));
  // Replace the or factor in place; L_V is even, so the only sign is from
  // moving the odd replacement 1-form out of or's slot to the front.
  int before = std::popcount(form.bits & ((std::uint32_t(1) << rho_key) - 1));
  Monomial rest{form.bits & ~(std::uint32_t(1) << rho_key)};
  GaussianRational slot_sign((before & 1) ? -1 : 1);
  Multivector out;
  for (const auto& [m, c] : l_rho.terms()) out += (slot_sign * c) * wedge(m, rest);
  return out;
}

Multivector SchoutenDirect::bracket_vec_form(Monomial vec, Monomial form) const {
  const int k = vec.degree();
  if (k == 0 || form.bits == 0) return {};
  Multivector out;
  int pos = 0;
  for (int key = 0; key < pres_->generator_count(); ++key) {
    if (!vec.contains(key)) continue;
    ++pos;  // 1-based position j within the vector monomial
    Multivector lv = lie_derivative(key, form);
    if (!lv.is_zero()) {
      Monomial rest{vec.bits & ~(std::uint32_t(1) << key)};
      int sign = ((k - pos) & 1) ? -1 : 1;
      out += GaussianRational(sign) * wedge(Multivector(rest), lv);
    }
  }
  return out;
}

Multivector SchoutenDirect::bracket(Monomial a, Monomial b) const {
  Monomial phi{a.bits & form_mask_}, xi{a.bits & vector_mask_};
  Monomial psi{b.bits & form_mask_}, theta{b.bits & vector_mask_};
  // Canonical monomials factor as (form part) ^ (vector part) with no sign.
  const int da = a.degree(), db = b.degree();

  Multivector out;
  // phi ^ [xi, psi] ^ theta
  Multivector t1 = bracket_vec_form(xi, psi);
  if (!t1.is_zero()) out += wedge(wedge(Multivector(phi), t1), Multivector(theta));
  // (-1)^{da*db + da + db} psi ^ [theta, phi] ^ xi
  Multivector t2 = bracket_vec_form(theta, phi);
  if (!t2.is_zero()) {
    int s = ((da * db + da + db) & 1) ? -1 : 1;
    out += GaussianRational(s) * wedge(wedge(Multivector(psi), t2), Multivector(xi));
  }
  // Vector-vector brackets vanish: g^{1,0} is an abelian subalgebra for an
  // abelian complex structure, so the third term contributes nothing.
  return out;
}

Multivector SchoutenDirect::bracket(const Multivector& a, const Multivector& b) const {
  Multivector out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out += (ca * cb) * bracket(ma, mb);
  return out;
}

}  // namespace nildga
