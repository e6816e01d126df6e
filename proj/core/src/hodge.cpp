#include "nildga/hodge.hpp"

#include <stdexcept>

namespace nildga {

namespace {

Matrix columns_to_matrix(const std::vector<std::vector<GaussianRational>>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  return m;
}

}  // namespace

Hodge::Hodge(const DGAPresentation& pres) : pres_(&pres) {
  max_p_ = 0;
  max_q_ = 0;
  for (const auto& g : pres.generators()) {
    max_p_ += g.p;
    max_q_ += g.q;
  }
  blocks_.resize(std::size_t((max_p_ + 1) * (max_q_ + 1)));

  for (int p = 0; p <= max_p_; ++p)
    for (int q = 0; q <= max_q_; ++q) {
      Block& blk = block(p, q);
      blk.basis = pres.basis(p, q);
      for (std::size_t i = 0; i < blk.basis.size(); ++i) blk.index[blk.basis[i]] = i;
    }

  for (int p = 0; p <= max_p_; ++p)
    for (int q = 0; q <= max_q_; ++q) {
      Block& blk = block(p, q);
      const auto& target = (q < max_q_) ? block(p, q + 1).basis : std::vector<Monomial>{};
      const auto& tindex = (q < max_q_) ? block(p, q + 1).index : blk.index;
      blk.dbar = Matrix(target.size(), blk.basis.size());
      for (std::size_t c = 0; c < blk.basis.size(); ++c) {
        Multivector d = differential(pres, blk.basis[c]);
        for (const auto& [m, coef] : d.terms()) {
          auto it = tindex.find(m);
          if (it == tindex.end() || q >= max_q_)
            throw std::logic_error("Hodge: differential leaves the (p,q+1) block");
          blk.dbar.at(it->second, c) = coef;
        }
      }
    }

  for (int p = 0; p <= max_p_; ++p)
    for (int q = 0; q <= max_q_; ++q) {
      Block& blk = block(p, q);
      const std::size_t n = blk.basis.size();
      Matrix up = blk.dbar.conj_transpose() * blk.dbar;
      if (q > 0) {
        const Matrix& prev = block(p, q - 1).dbar;
        up = up + prev * prev.conj_transpose();
      }
      blk.laplacian = std::move(up);

      // Harmonic space: ker dbar intersect ker dbar^* as the null space of
      // the stacked matrix.
      Matrix stacked = blk.dbar;
      if (q > 0) stacked = Matrix::vstack(stacked, block(p, q - 1).dbar.conj_transpose());
      auto null_vecs = stacked.null_space();
      for (const auto& v : null_vecs) blk.harmonic.push_back(from_block_vector(v, p, q));
      blk.harmonic_cols = columns_to_matrix(null_vecs, n);
      blk.gram = blk.harmonic_cols.conj_transpose() * blk.harmonic_cols;

      // Orthogonal complement of the harmonic space inside the block.
      Matrix hT = blk.harmonic_cols.conj_transpose();
      for (const auto& v : hT.null_space()) blk.complement.push_back(from_block_vector(v, p, q));

      if (!blk.harmonic.empty()) coh_.classes[{p, q}] = blk.harmonic;
    }
}

const Hodge::Block& Hodge::block(int p, int q) const {
  if (p < 0 || p > max_p_ || q < 0 || q > max_q_) throw std::out_of_range("Hodge: bidegree out of range");
  return blocks_[std::size_t(p * (max_q_ + 1) + q)];
}
Hodge::Block& Hodge::block(int p, int q) {
  return const_cast<Block&>(static_cast<const Hodge*>(this)->block(p, q));
}

const std::vector<Monomial>& Hodge::block_basis(int p, int q) const { return block(p, q).basis; }
const Matrix& Hodge::dbar_matrix(int p, int q) const { return block(p, q).dbar; }
const std::vector<Multivector>& Hodge::complement_basis(int p, int q) const { return block(p, q).complement; }

std::vector<GaussianRational> Hodge::to_block_vector(const Multivector& v, int p, int q) const {
  const Block& blk = block(p, q);
  std::vector<GaussianRational> out(blk.basis.size());
  for (const auto& [m, c] : v.terms()) {
    auto it = blk.index.find(m);
    if (it == blk.index.end()) throw std::invalid_argument("Hodge: multivector not in the (p,q) block");
    out[it->second] = c;
  }
  return out;
}

Multivector Hodge::from_block_vector(const std::vector<GaussianRational>& vec, int p, int q) const {
  const Block& blk = block(p, q);
  Multivector out;
  for (std::size_t i = 0; i < vec.size(); ++i) out.add_term(blk.basis[i], vec[i]);
  return out;
}

Multivector Hodge::adjoint_apply(const Multivector& v) const {
  // Split into bigraded components; dbar^* maps (p,q) -> (p,q-1).
  std::map<std::pair<int, int>, Multivector> parts;
  for (const auto& [m, c] : v.terms()) parts[pres_->bidegree(m)].add_term(m, c);
  Multivector out;
  for (const auto& [pq, part] : parts) {
    auto [p, q] = pq;
    if (q == 0) continue;
    const Matrix adj = block(p, q - 1).dbar.conj_transpose();
    out += from_block_vector(adj.apply(to_block_vector(part, p, q)), p, q - 1);
  }
  return out;
}

Multivector Hodge::harmonic_projection(const Multivector& v) const {
  std::map<std::pair<int, int>, Multivector> parts;
  for (const auto& [m, c] : v.terms()) parts[pres_->bidegree(m)].add_term(m, c);
  Multivector out;
  for (const auto& [pq, part] : parts) {
    auto [p, q] = pq;
    const Block& blk = block(p, q);
    if (blk.harmonic.empty()) continue;
    auto rhs = blk.harmonic_cols.conj_transpose().apply(to_block_vector(part, p, q));
    auto coeffs = blk.gram.solve(rhs);
    if (!coeffs) throw std::logic_error("Hodge: Gram system inconsistent");
    out += from_block_vector(blk.harmonic_cols.apply(*coeffs), p, q);
  }
  return out;
}

std::vector<GaussianRational> Hodge::harmonic_coefficients(const Multivector& v, int p, int q) const {
  const Block& blk = block(p, q);
  if (blk.harmonic.empty()) return {};
  Multivector part;
  for (const auto& [m, c] : v.terms())
    if (pres_->bidegree(m) == std::make_pair(p, q)) part.add_term(m, c);
  auto rhs = blk.harmonic_cols.conj_transpose().apply(to_block_vector(part, p, q));
  auto coeffs = blk.gram.solve(rhs);
  if (!coeffs) throw std::logic_error("Hodge: Gram system inconsistent");
  return *coeffs;
}

Multivector Hodge::green_apply(const Multivector& v) const {
  Multivector r = v - harmonic_projection(v);
  std::map<std::pair<int, int>, Multivector> parts;
  for (const auto& [m, c] : r.terms()) parts[pres_->bidegree(m)].add_term(m, c);
  Multivector out;
  for (const auto& [pq, part] : parts) {
    auto [p, q] = pq;
    const Block& blk = block(p, q);
    auto x = blk.laplacian.solve(to_block_vector(part, p, q));
    if (!x) throw std::logic_error("Hodge: Laplacian system inconsistent off harmonics");
    Multivector xi = from_block_vector(*x, p, q);
    out += xi - harmonic_projection(xi);
  }
  return out;
}

std::optional<Multivector> Hodge::exact_preimage(const Multivector& v) const {
  if (v.is_zero()) return Multivector();
  std::map<std::pair<int, int>, Multivector> parts;
  for (const auto& [m, c] : v.terms()) parts[pres_->bidegree(m)].add_term(m, c);
  Multivector out;
  for (const auto& [pq, part] : parts) {
    auto [p, q] = pq;
    if (q == 0) return std::nullopt;
    auto x = block(p, q - 1).dbar.solve(to_block_vector(part, p, q));
    if (!x) return std::nullopt;
    out += from_block_vector(*x, p, q - 1);
  }
  return out;
}

}  // namespace nildga
