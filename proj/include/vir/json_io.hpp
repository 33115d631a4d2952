#ifndef VIR_JSON_IO_HPP
#define VIR_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "vir/casimir.hpp"
#include "vir/correlator.hpp"
#include "vir/numerology.hpp"
#include "vir/verma.hpp"

namespace vir {

using Json = nlohmann::json;

// BigRational <-> "p/q" (or "p" when q = 1).
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

// MultiPoly <-> {vars:[...], terms:[{coeff:"p/q", exponents:[...]}]}.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json ratfunc_to_json(const RatFunc& f);  // {num:poly, den:poly}
RatFunc ratfunc_from_json(const Json& j);

// {level, basis:[[parts]...], entries:[[poly]...], det:poly,
//  factors:[{poly, mult}...], constant:"p/q"}
Json gram_to_json(int level, const Matrix<MultiPoly>& gram,
                  const Factorization& det_factored);
Matrix<MultiPoly> gram_entries_from_json(const Json& j);

// {weight:"p/q", level, terms:[{parts:[...], coeff_num:poly,
//  coeff_den:poly}], poles:["p/q"...], assumptions:[...]}
Json casimir_to_json(const CasimirSolution& sol);

Json derived_to_json(const DerivedForm& form);  // {name, num:poly, den:poly}

// {weight, unknowns, equations:[{lhs:{unknown:ratfunc}, rhs, provenance}]}
Json constraint_system_to_json(const ConstraintSystem& sys);

// {table, cells:[{claim, computed, status}], pass}
Json audit_to_json(const AuditReport& report);

// {weight, solutions:[{C:"p/q", d:"n"}], flagged:[...], method_audit:{...}}
Json enumeration_to_json(const EnumerationResult& result);

// Canonical byte-deterministic rendering: sorted keys (nlohmann objects
// are key-sorted), 2-space indent, trailing newline.
std::string json_dump(const Json& j);

}  // namespace vir

#endif
