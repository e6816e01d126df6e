#include "nildga/serialize.hpp"

#include "nildga/presentation.hpp"

namespace nildga {

std::string monomial_name(const DGAPresentation& pres, Monomial m) {
  if (m.bits == 0) return "1";
  std::string s;
  for (int k = 0; k < pres.generator_count(); ++k) {
    if (!m.contains(k)) continue;
    if (!s.empty()) s += "^";
    s += pres.generators()[std::size_t(k)].name;
  }
  return s;
}

std::string multivector_str(const DGAPresentation& pres, const Multivector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : v.terms()) {
    std::string cs = to_string(c);
    if (!s.empty()) {
      if (cs[0] == '-') {
        s += " - ";
        cs = cs.substr(1);
      } else {
        s += " + ";
      }
    }
    if (m.bits == 0) {
      s += cs;
    } else if (cs == "1") {
      s += monomial_name(pres, m);
    } else if (cs == "-1") {
      s += "-" + monomial_name(pres, m);
    } else {
      s += cs + "*" + monomial_name(pres, m);
    }
  }
  return s;
}

}  // namespace nildga
