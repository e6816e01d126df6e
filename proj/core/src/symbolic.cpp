#include "nildga/symbolic.hpp"

#include <stdexcept>

namespace nildga::symbolic {

namespace {
const std::array<std::string, kNumVars> kNames = {"t0", "t1", "t2", "t3", "t4", "t5",
                                                  "s0", "s1", "s2", "s3", "s4", "s5"};
}

int var_index(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kNames[std::size_t(i)] == name) return i;
  throw std::invalid_argument("unknown surrogate variable " + name);
}
const std::string& var_name(int idx) { return kNames.at(std::size_t(idx)); }
bool var_odd(int idx) { return idx >= 6; }

Poly Poly::constant(GaussianRational c) {
  Poly p;
  p.add_term(Exps{}, c);
  return p;
}

Poly Poly::variable(int idx) {
  Exps e{};
  e[std::size_t(idx)] = 1;
  Poly p;
  p.add_term(e, GaussianRational(1));
  return p;
}

void Poly::add_term(const Exps& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly operator-(const Poly& p) { return GaussianRational(-1) * p; }

Poly operator*(const GaussianRational& c, const Poly& p) {
  Poly out;
  if (c.is_zero()) return out;
  for (const auto& [e, x] : p.terms_) out.terms_[e] = c * x;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exps e;
      for (int i = 0; i < kNumVars; ++i) e[std::size_t(i)] = std::uint8_t(ea[std::size_t(i)] + eb[std::size_t(i)]);
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::substitute_zero(int idx) const {
  Poly out;
  for (const auto& [e, c] : terms_)
    if (e[std::size_t(idx)] == 0) out.add_term(e, c);
  return out;
}

Poly Poly::derivative(int idx) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    if (e[std::size_t(idx)] == 0) continue;
    Exps d = e;
    d[std::size_t(idx)] -= 1;
    out.add_term(d, GaussianRational(long(e[std::size_t(idx)])) * c);
  }
  return out;
}

GaussianRational Poly::eval(const std::array<GaussianRational, kNumVars>& point) const {
  GaussianRational out;
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < e[std::size_t(i)]; ++k) t *= point[std::size_t(i)];
    out += t;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (!e[std::size_t(i)]) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[std::size_t(i)];
      if (e[std::size_t(i)] > 1) mono += "^" + std::to_string(int(e[std::size_t(i)]));
    }
    std::string cs = to_string(c);
    if (!s.empty()) {
      if (cs[0] == '-') {
        s += " - ";
        cs = cs.substr(1);
      } else {
        s += " + ";
      }
    }
    if (mono.empty())
      s += cs;
    else if (cs == "1")
      s += mono;
    else if (cs == "-1")
      s += "-" + mono;
    else
      s += cs + "*" + mono;
  }
  return s;
}

namespace {

Poly one_minus_t2_pow(int k) {
  Poly base = Poly::constant(GaussianRational(1)) - Poly::variable(var_index("t2"));
  Poly out = Poly::constant(GaussianRational(1));
  for (int i = 0; i < k; ++i) out = out * base;
  return out;
}

}  // namespace

RationalExpr RationalExpr::substitute_zero(int idx) const { return {num.substitute_zero(idx), denom_pow}; }

GaussianRational RationalExpr::eval(const std::array<GaussianRational, kNumVars>& point) const {
  GaussianRational d = one_minus_t2_pow(denom_pow).eval(point);
  if (d.is_zero()) throw std::domain_error("RationalExpr: pole at t2 = 1");
  return num.eval(point) / d;
}

std::string RationalExpr::str() const {
  if (num.is_zero()) return "0";
  if (denom_pow == 0) return num.str();
  std::string d = denom_pow == 1 ? "(1-t2)" : "(1-t2)^" + std::to_string(denom_pow);
  return "(" + num.str() + ") / " + d;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  int k = std::max(a.denom_pow, b.denom_pow);
  return {a.num * one_minus_t2_pow(k - a.denom_pow) + b.num * one_minus_t2_pow(k - b.denom_pow), k};
}

RationalExpr operator-(const RationalExpr& a) { return {-a.num, a.denom_pow}; }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  return {a.num * b.num, a.denom_pow + b.denom_pow};
}

bool operator==(const RationalExpr& a, const RationalExpr& b) {
  return a.num * one_minus_t2_pow(b.denom_pow) == b.num * one_minus_t2_pow(a.denom_pow);
}

RationalExpr one_minus_t2_inverse(int power) { return {Poly::constant(GaussianRational(1)), power}; }

namespace {

const GaussianRational kHalfI(Rational(0), Rational(1, 2));
const GaussianRational kI(Rational(0), Rational(1));

// A Chen coefficient in factored form: even rational-function prefactor
// times a written-order word of odd symbols.
struct OddWord {
  RationalExpr pref;
  std::vector<int> odd_seq;
};

// mu_1 = -(s0 t4)/(1-t2) = (-t4/(1-t2)) * [s0]
// mu_2 = -(s0 s3)/(1-t2) = (-1/(1-t2))  * [s0, s3]
// c_{s1} = (i/2) mu_1 s0, c_{t1} = (i/2) mu_2 s0,
// c_{t3} = (i/2) mu_1 mu_2, c_{t5} = i mu_2 s3.
std::map<std::string, OddWord> chen_words() {
  const int s0 = var_index("s0"), s3 = var_index("s3"), t4 = var_index("t4");
  Poly t4p = Poly::variable(t4);
  std::map<std::string, OddWord> w;
  w["s1"] = {RationalExpr{(-kHalfI) * t4p, 1}, {s0, s0}};
  w["t1"] = {RationalExpr{Poly::constant(-kHalfI), 1}, {s0, s3, s0}};
  w["t3"] = {RationalExpr{kHalfI * t4p, 2}, {s0, s0, s3}};
  w["t5"] = {RationalExpr{Poly::constant(-kI), 1}, {s0, s3, s3}};
  return w;
}

// Left derivative on the word: strike the k-th occurrence with sign
// (-1)^{k-1 odd symbols before it}.
std::vector<std::pair<int, std::vector<int>>> word_odd_derivative(const std::vector<int>& seq, int idx) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] != idx) continue;
    std::vector<int> rest = seq;
    rest.erase(rest.begin() + long(k));
    out.emplace_back((k & 1) ? -1 : 1, std::move(rest));
  }
  return out;
}

// Collapse a word to a commuting polynomial monomial with the Koszul sign
// of sorting the odd symbols.
RationalExpr collapse_koszul(const RationalExpr& pref, const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  Poly m = Poly::constant(GaussianRational((inv & 1) ? -1 : 1));
  for (int v : seq) m = m * Poly::variable(v);
  return {pref.num * m, pref.denom_pow};
}

RationalExpr reduce_mod(Component comp, const RationalExpr& e) {
  if (comp == Component::K0) return e.substitute_zero(var_index("s0"));
  return e.substitute_zero(var_index("t4")).substitute_zero(var_index("s3"));
}

}  // namespace

std::map<std::string, RationalExpr> chen_symbolic() {
  std::map<std::string, RationalExpr> out;
  for (const auto& [name, w] : chen_words()) {
    // Literal reading: plain commuting collapse, no reordering signs.
    Poly m = Poly::constant(GaussianRational(1));
    for (int v : w.odd_seq) m = m * Poly::variable(v);
    out[name] = RationalExpr{w.pref.num * m, w.pref.denom_pow};
  }
  return out;
}

std::map<std::string, RationalExpr> gauge_bracket(Component comp, const std::string& beta) {
  const int b = var_index(beta);
  std::map<std::string, RationalExpr> out;
  for (const auto& [target, w] : chen_words()) {
    RationalExpr total{Poly(), 0};
    if (var_odd(b)) {
      for (const auto& [sign, rest] : word_odd_derivative(w.odd_seq, b)) {
        RationalExpr pref = w.pref;
        pref.num = GaussianRational(sign) * pref.num;
        total = total + collapse_koszul(pref, rest);
      }
    } else {
      // Even variable: differentiate the prefactor (quotient rule for the
      // (1-t2) powers), keep the word.
      RationalExpr dpref;
      if (b == var_index("t2")) {
        dpref = RationalExpr{w.pref.num.derivative(b), w.pref.denom_pow} +
                RationalExpr{GaussianRational(long(w.pref.denom_pow)) * w.pref.num, w.pref.denom_pow + 1};
      } else {
        dpref = RationalExpr{w.pref.num.derivative(b), w.pref.denom_pow};
      }
      total = collapse_koszul(dpref, w.odd_seq);
    }
    RationalExpr reduced = reduce_mod(comp, total);
    if (!reduced.is_zero()) out[target] = reduced;
  }
  return out;
}

}  // namespace nildga::symbolic
