#pragma once

#include "nildga/nilcomplex.hpp"
#include "nildga/presentation.hpp"

namespace nildga {

/// Evaluates the Schouten bracket from the defining formulas of the Lie
/// algebra spec (Lie-derivative expansion for vector-form pairs, zero for
/// form-form, the three-term formula for mixed monomials).  Independent of
/// the biderivation extension in SchoutenEngine; used as its oracle.
class SchoutenDirect {
 public:
  SchoutenDirect(const NilComplexSpec& spec, const DGAPresentation& pres);

  Multivector bracket(Monomial a, Monomial b) const;
  Multivector bracket(const Multivector& a, const Multivector& b) const;

 private:
  Multivector lie_derivative(int vector_key, Monomial form) const;
  Multivector bracket_vec_form(Monomial vec, Monomial form) const;

  const NilComplexSpec* spec_;
  const DGAPresentation* pres_;
  int n_;
  std::uint32_t form_mask_, vector_mask_;
};

}  // namespace nildga
