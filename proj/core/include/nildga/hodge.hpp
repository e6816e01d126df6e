#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nildga/matrix.hpp"
#include "nildga/presentation.hpp"

namespace nildga {

/// Harmonic representatives per bidegree plus the dimension table.
struct CohomologyBasis {
  std::map<std::pair<int, int>, std::vector<Multivector>> classes;
  int dim(int p, int q) const {
    auto it = classes.find({p, q});
    return it == classes.end() ? 0 : int(it->second.size());
  }
};

/// Finite-dimensional Hodge theory of the resolution: exact dbar matrices
/// per bigraded block, the adjoint for the inner product that declares the
/// monomial basis orthonormal, harmonic bases, projection and the Green
/// operator.  Everything is exact rational linear algebra.
class Hodge {
 public:
  explicit Hodge(const DGAPresentation& pres);

  const DGAPresentation& presentation() const { return *pres_; }
  int max_p() const { return max_p_; }
  int max_q() const { return max_q_; }

  const std::vector<Monomial>& block_basis(int p, int q) const;
  /// Matrix of dbar: (p,q) -> (p,q+1) in the canonical monomial bases.
  const Matrix& dbar_matrix(int p, int q) const;

  const CohomologyBasis& cohomology_basis() const { return coh_; }
  /// Orthogonal complement of the harmonic space inside the (p,q) block.
  const std::vector<Multivector>& complement_basis(int p, int q) const;

  Multivector adjoint_apply(const Multivector& v) const;
  Multivector green_apply(const Multivector& v) const;
  Multivector harmonic_projection(const Multivector& v) const;

  /// Coefficients of the harmonic part of v in the (p,q) harmonic basis.
  std::vector<GaussianRational> harmonic_coefficients(const Multivector& v, int p, int q) const;

  /// Some xi with dbar(xi) = v, or nullopt when v is not exact.
  std::optional<Multivector> exact_preimage(const Multivector& v) const;

  std::vector<GaussianRational> to_block_vector(const Multivector& v, int p, int q) const;
  Multivector from_block_vector(const std::vector<GaussianRational>& vec, int p, int q) const;

 private:
  struct Block {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;
    Matrix dbar;       // this block -> (p, q+1)
    Matrix laplacian;  // dbar^H dbar + prev dbar prev^H
    std::vector<Multivector> harmonic;
    std::vector<Multivector> complement;
    Matrix harmonic_cols;  // harmonic basis as columns
    Matrix gram;           // harmonic_cols^H harmonic_cols
  };

  const Block& block(int p, int q) const;
  Block& block(int p, int q);

  const DGAPresentation* pres_;
  int max_p_, max_q_;
  std::vector<Block> blocks_;
  CohomologyBasis coh_;
  std::vector<Multivector> empty_;
};

}  // namespace nildga
