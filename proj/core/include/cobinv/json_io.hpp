#ifndef COBINV_JSON_IO_HPP
#define COBINV_JSON_IO_HPP

#include <string>

#include "cobinv/verdicts.hpp"

namespace cobinv {

// Canonical interchange form of a polynomial:
//   {"vars":[["b1",-1,false],...],"terms":[[[e1,...,ek],"coeff"],...]}
// with dense exponent rows over the listed vars and terms in the canonical
// term order.
std::string poly_to_json(const GradedPoly& p);
GradedPoly poly_from_json(const std::string& text);
// Same, but transported into a given alphabet by symbol name.
GradedPoly poly_from_json_into(const std::string& text, const AlphabetPtr& target);

std::string variety_to_json(const Variety& v);
VarietyPtr variety_from_json(const std::string& text, const FglContext& fgl);
// Dimension of a descriptor without building it (used to size the window).
int descriptor_dim(const std::string& text);

std::string fixture_to_json(const Fixture& f);
Fixture fixture_from_json(const std::string& text, const Equivariant& equ);
int fixture_ambient_dim(const std::string& text);

std::string invclass_to_json(const InvClass& c);
std::string reports_to_json(const std::vector<BoundReport>& reports);
std::string realize_verdict_to_json(const RealizeVerdict& v);

}  // namespace cobinv

#endif
