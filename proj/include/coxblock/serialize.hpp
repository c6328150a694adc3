#ifndef COXBLOCK_SERIALIZE_HPP
#define COXBLOCK_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "coxblock/arithmetic.hpp"
#include "coxblock/cohomology.hpp"
#include "coxblock/ext_spectral.hpp"
#include "coxblock/grothendieck.hpp"

/*
 * JSON encodings of the domain values.  Subsets are emitted as sorted index
 * arrays next to their bitmask; on input both forms are accepted.  All
 * emission orders follow the basis order (cardinality, bitmask), so output
 * is deterministic.
 */

namespace coxblock {

using json = nlohmann::ordered_json;

json to_json(const RootSubset& I);                       // sorted index array
// Accepts an unsigned bitmask, a sorted index array, or a string holding
// either a bare bitmask ("5") or a comma list ("1,3" / "[1,3]" / "3,").
RootSubset subset_from_json(int d, const json& j);
RootSubset parse_subset(int d, const std::string& text);

json to_json(const Partition& p);
json to_json(const WDObject& x);                          // {"d","direction","strings"}
WDObject wd_from_json(const json& j);
json to_json(const SSPair& s);                            // [[j, wd], ...]
json to_json(const BiGradedR& r);
json to_json(const DVirtualClass& v);
json to_json(const PiBasisClass& x);                      // basis-ordered [[indices, coeff]]
json to_json(const PoincarePolynomial& p);                // [[degree, coeff], ...]
json to_json(const E1Page& page);
json to_json(const DecompositionMatrix& m);
json to_json(const VerifyReport& r);
json to_json(const LadicEntry& e);
json to_json(const Params& p);

}  // namespace coxblock

#endif
