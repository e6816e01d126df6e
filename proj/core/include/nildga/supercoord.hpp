#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nildga/hodge.hpp"
#include "nildga/presentation.hpp"

namespace nildga {

/// Shared shape of a truncated supercommutative polynomial ring: one
/// coordinate per cohomology class, with parities, cut at total degree D.
struct RingContext {
  std::vector<std::string> names;
  std::vector<bool> odd;
  int truncation;

  int ncoords() const { return int(names.size()); }
};

using RingPtr = std::shared_ptr<const RingContext>;

/// Exponent vector of a ring monomial; odd exponents stay in {0,1}.
using ExpVec = std::vector<std::uint8_t>;

int expvec_degree(const ExpVec& e);

/// Truncated supercommutative polynomial with Gaussian-rational
/// coefficients.  Odd coordinates anticommute and square to zero; terms
/// above the truncation degree are silently dropped.  A value is a unit of
/// the local ring iff its constant term is nonzero.
class SuperScalar {
 public:
  SuperScalar() = default;
  explicit SuperScalar(RingPtr ring) : ring_(std::move(ring)) {}

  static SuperScalar constant(RingPtr ring, GaussianRational c);
  static SuperScalar coordinate(RingPtr ring, int idx);

  const RingPtr& ring() const { return ring_; }
  const std::map<ExpVec, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  GaussianRational coeff(const ExpVec& e) const;
  int max_degree() const;

  /// 0, 1, or nullopt when terms of both parities are present.
  std::optional<int> parity() const;

  void add_term(const ExpVec& e, const GaussianRational& c);

  SuperScalar& operator+=(const SuperScalar& o);
  SuperScalar& operator-=(const SuperScalar& o);
  friend SuperScalar operator+(SuperScalar a, const SuperScalar& b) { return a += b; }
  friend SuperScalar operator-(SuperScalar a, const SuperScalar& b) { return a -= b; }
  friend SuperScalar operator*(const GaussianRational& c, const SuperScalar& s);
  friend SuperScalar operator*(const SuperScalar& a, const SuperScalar& b);
  friend SuperScalar operator-(const SuperScalar& s) { return GaussianRational(-1) * s; }
  friend bool operator==(const SuperScalar& a, const SuperScalar& b) { return a.terms_ == b.terms_; }

  /// Left partial derivative: for an odd coordinate, strike the occurrence
  /// with sign (-1)^{# odd symbols of smaller index in the monomial}.
  SuperScalar derivative(int idx) const;
  SuperScalar substitute_zero(int idx) const;
  SuperScalar degree_part(int k) const;
  /// Splits into (even part, odd part) by monomial parity.
  std::pair<SuperScalar, SuperScalar> parity_split() const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::map<ExpVec, GaussianRational> terms_;
};

/// Geometric series 1 + x_idx + x_idx^2 + ... up to the ring truncation;
/// the truncated inverse of (1 - x_idx).
SuperScalar geometric_series(RingPtr ring, int idx);

/// Element of the algebra tensored with the coordinate ring, coefficients
/// written on the left of the basis monomials.
class SuperField {
 public:
  SuperField() = default;
  explicit SuperField(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, SuperScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  SuperScalar coeff(Monomial m) const;

  void add_term(Monomial m, const SuperScalar& c);

  SuperField& operator+=(const SuperField& o);
  SuperField& operator-=(const SuperField& o);
  friend SuperField operator+(SuperField a, const SuperField& b) { return a += b; }
  friend SuperField operator-(SuperField a, const SuperField& b) { return a -= b; }
  friend bool operator==(const SuperField& a, const SuperField& b) { return a.terms_ == b.terms_; }

  /// True when every term has coefficient parity + monomial parity even.
  bool is_even() const;
  SuperField degree_part(int k) const;

 private:
  RingPtr ring_;
  std::map<Monomial, SuperScalar> terms_;
};

// Operations on superfields.  Koszul rule throughout: a ring term of parity
// s passing an algebra monomial of degree d (shifted by one for the odd
// bracket and nothing for the wedge) contributes (-1)^{s*d}.
SuperField sf_scalar_mul(const SuperScalar& c, const SuperField& a);
SuperField sf_wedge(const SuperField& a, const SuperField& b);
SuperField sf_bracket(const SchoutenEngine& eng, const SuperField& a, const SuperField& b);
SuperField sf_dbar(const DGAPresentation& pres, const SuperField& a);
SuperField sf_adjoint_green(const Hodge& hodge, const SuperField& a);
SuperField sf_hproj(const Hodge& hodge, const SuperField& a);
SuperField sf_partial(const SuperField& a, int idx);
SuperField sf_substitute_zero(const SuperField& a, int idx);

/// One coordinate per chosen cohomology class.  Parity of the coordinate
/// matches the parity of its class, so Gamma_1 = sum x_alpha theta^alpha is
/// even.
class CoordinateSystem {
 public:
  struct Coordinate {
    std::string name;
    bool odd;
    Multivector cls;
  };

  CoordinateSystem(std::vector<Coordinate> coords, int truncation);

  /// The surface coordinate system in paper order: even t0..t5 attached to
  /// 1, ow^or, or^W, ow^T, T^W, ow^or^T^W; odd s0..s5 attached to or, ow,
  /// W, or^T^W, ow^T^W, ow^or^T.
  static CoordinateSystem kodaira_surface(const DGAPresentation& pres, const Hodge& hodge, int truncation);

  /// Coordinates on the named degree-two classes B^j, B^{ij}, psi,
  /// phi^j_k, B_j of a Kodaira manifold.
  static CoordinateSystem kodaira_degree2(const DGAPresentation& pres, const Hodge& hodge, int truncation);

  /// All harmonic classes of the given total degree, canonical order.
  static CoordinateSystem from_degree(const Hodge& hodge, int degree, int truncation);

  CoordinateSystem subset(const std::vector<int>& keep) const;
  CoordinateSystem without(const std::string& name) const;

  const RingPtr& ring() const { return ring_; }
  const std::vector<Coordinate>& coords() const { return coords_; }
  int size() const { return int(coords_.size()); }
  int index_of(const std::string& name) const;

  SuperScalar coordinate(const std::string& name) const;
  /// Gamma_1 = sum_alpha x_alpha theta^alpha.
  SuperField gamma1() const;

 private:
  std::vector<Coordinate> coords_;
  RingPtr ring_;
};

/// Coefficients lambda_a with v = sum_a lambda_a theta^a over the
/// coordinate classes.  Throws when v leaves their span over the ring.
std::map<int, SuperScalar> expand_in_classes(const CoordinateSystem& coords, const SuperField& v);

/// Odd vector field sum_alpha c_alpha d/dx_alpha on the coordinate space.
struct ChenField {
  std::map<int, SuperScalar> coeffs;

  bool is_zero() const;
  SuperField apply(const SuperField& gamma) const;
  friend bool operator==(const ChenField& a, const ChenField& b);
};

}  // namespace nildga
