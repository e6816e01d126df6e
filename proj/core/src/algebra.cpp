#include "nildga/algebra.hpp"

#include <sstream>

namespace nildga {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  if (z.im == 0) return to_string(z.re);
  std::string im;
  if (z.im == 1)
    im = "i";
  else if (z.im == -1)
    im = "-i";
  else if (z.im.get_den() == 1)
    im = to_string(z.im) + "i";
  else
    im = (z.im < 0 ? "-i*" + to_string(Rational(-z.im)) : "i*" + to_string(z.im));
  if (z.re == 0) return im;
  std::string s = "(" + to_string(z.re);
  if (im[0] != '-') s += "+";
  return s + im + ")";
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

int merge_sign(Monomial a, Monomial b) {
  // Each generator of b passes every generator of a with a larger key.
  int inv = 0;
  std::uint32_t bb = b.bits;
  while (bb) {
    int key = std::countr_zero(bb);
    bb &= bb - 1;
    inv += std::popcount(a.bits & ~((std::uint32_t(2) << key) - 1));
  }
  return (inv & 1) ? -1 : 1;
}

std::optional<std::pair<Monomial, int>> normalize_monomial(const std::vector<int>& keys) {
  std::uint32_t bits = 0;
  int inv = 0;
  for (std::size_t j = 0; j < keys.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if (keys[i] > keys[j]) ++inv;
    std::uint32_t bit = std::uint32_t(1) << keys[j];
    if (bits & bit) return std::nullopt;
    bits |= bit;
  }
  return std::make_pair(Monomial{bits}, (inv & 1) ? -1 : 1);
}

Multivector wedge(Monomial a, Monomial b) {
  if (a.bits & b.bits) return {};
  return Multivector(Monomial{a.bits | b.bits}, GaussianRational(merge_sign(a, b)));
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.bits & mb.bits) continue;
      r.add_term(Monomial{ma.bits | mb.bits}, GaussianRational(merge_sign(ma, mb)) * ca * cb);
    }
  }
  return r;
}

}  // namespace nildga
