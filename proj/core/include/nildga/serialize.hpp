#pragma once

#include <string>

#include "nildga/algebra.hpp"

namespace nildga {

class DGAPresentation;

/// "1" for the unit, otherwise generator names joined by '^' in canonical
/// order, e.g. "ow^or^T^W".
std::string monomial_name(const DGAPresentation& pres, Monomial m);

/// Human form: signed sum of coefficient*monomial terms; "0" when empty.
std::string multivector_str(const DGAPresentation& pres, const Multivector& v);

}  // namespace nildga
