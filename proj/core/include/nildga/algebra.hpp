#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nildga/rational.hpp"

namespace nildga {

/// Degree-one generator of an exterior algebra, bidegree (1,0) or (0,1).
/// The sort key is the generator's position in the presentation order.
struct Generator {
  std::string name;
  int p = 0;
  int q = 0;
};

/// Basis monomial g_{i1} ^ ... ^ g_{ik} with i1 < i2 < ... encoded as a
/// bitmask over sort keys.  All generators are odd, so repeats vanish and
/// any input order normalizes with a tracked Koszul sign.
struct Monomial {
  std::uint32_t bits = 0;

  int degree() const { return std::popcount(bits); }
  bool contains(int key) const { return (bits >> key) & 1u; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline constexpr Monomial kUnitMonomial{0};

/// Sign of merging two disjoint sorted monomials into one sorted monomial:
/// (-1)^{#inversions}.  Caller must ensure a.bits & b.bits == 0.
int merge_sign(Monomial a, Monomial b);

/// Sorts a generator-key sequence.  Returns nullopt when a key repeats
/// (odd generators square to zero), otherwise the monomial and sign of the
/// sorting permutation.
std::optional<std::pair<Monomial, int>> normalize_monomial(const std::vector<int>& keys);

/// Sparse exact multivector: finite sum of monomials with Gaussian-rational
/// coefficients.  Zero coefficients are never stored.
class Multivector {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  Multivector() = default;
  explicit Multivector(Monomial m, GaussianRational c = GaussianRational(1)) {
    if (!c.is_zero()) terms_[m] = std::move(c);
  }
  static Multivector scalar(GaussianRational c) { return Multivector(kUnitMonomial, std::move(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  void add_term(Monomial m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const GaussianRational& c, const Multivector& v) {
    Multivector r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : v.terms_) r.terms_[m] = c * x;
    return r;
  }
  friend Multivector operator-(const Multivector& v) { return GaussianRational(-1) * v; }
  friend bool operator==(const Multivector& a, const Multivector& b) { return a.terms_ == b.terms_; }

  /// nullopt when terms of different total degree are mixed (or zero).
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      if (d && *d != m.degree()) return std::nullopt;
      d = m.degree();
    }
    return d;
  }

 private:
  Terms terms_;
};

Multivector wedge(const Multivector& a, const Multivector& b);
Multivector wedge(Monomial a, Monomial b);

}  // namespace nildga
