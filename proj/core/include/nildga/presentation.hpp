#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nildga/algebra.hpp"

namespace nildga {

/// Generator-level data of a differential Gerstenhaber algebra: the bracket
/// and differential on degree-one elements.  Everything else extends by
/// biderivation (bracket) and anti-derivation (differential).
class DGAPresentation {
 public:
  DGAPresentation(std::vector<Generator> gens,
                  std::map<std::pair<int, int>, Multivector> bracket_table,
                  std::vector<Multivector> differential_table);

  const std::vector<Generator>& generators() const { return gens_; }
  int generator_count() const { return int(gens_.size()); }
  std::size_t dim() const { return std::size_t(1) << gens_.size(); }

  /// Bracket of two generators, antisymmetry filled in.
  Multivector gen_bracket(int i, int j) const;
  Multivector gen_differential(int i) const { return dtab_[std::size_t(i)]; }

  std::pair<int, int> bidegree(Monomial m) const;
  int find_generator(const std::string& name) const;
  Monomial monomial(std::initializer_list<const char*> names) const;
  Multivector basis_element(std::initializer_list<const char*> names) const;

  /// All basis monomials in mask order, optionally filtered by bidegree.
  std::vector<Monomial> basis() const;
  std::vector<Monomial> basis(int p, int q) const;

 private:
  std::vector<Generator> gens_;
  std::map<std::pair<int, int>, Multivector> btab_;
  std::vector<Multivector> dtab_;
};

/// Anti-derivation extension of the generator differential:
/// d(g1^...^gk) = sum_j (-1)^{j-1} g1^...^(d gj)^...^gk.
Multivector differential(const DGAPresentation& pres, Monomial m);
Multivector differential(const DGAPresentation& pres, const Multivector& v);

/// Biderivation extension of the generator bracket.  The table over all
/// basis-monomial pairs is built once at construction; evaluation on
/// multivectors is bilinear expansion.  Immutable after construction.
class SchoutenEngine {
 public:
  explicit SchoutenEngine(const DGAPresentation& pres);

  const DGAPresentation& presentation() const { return *pres_; }
  const Multivector& bracket(Monomial a, Monomial b) const {
    return table_[(std::size_t(a.bits) << ngen_) | b.bits];
  }
  Multivector bracket(const Multivector& a, const Multivector& b) const;

 private:
  const DGAPresentation* pres_;
  int ngen_;
  std::vector<Multivector> table_;
};

Multivector schouten(const DGAPresentation& pres, const Multivector& a, const Multivector& b);

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  long checked = 0;
  std::string counterexample;  // first failing pair/triple, empty when passing
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  /// Restricts Jacobi triples to monomials of total degree <= this bound
  /// (large algebras); 0 means no restriction.
  int jacobi_max_degree = 0;
};

/// Exhaustively checks (L1)-(L3), (C1)-(C3), (D1)-(D4) and the expanded
/// commutative/distributive identities over all basis monomials of the
/// finite algebra.  Failures are reported, not thrown.
AxiomReport verify_axioms(const DGAPresentation& pres, const VerifyOptions& opts = {});

}  // namespace nildga
