// JSON form of a Verdict:
//   {class, group, realizable, min_rank, reason,
//    witness{kind, moduli, blocks[{moduli, whole}], generators[{block, components}],
//            laurent_vars, fields, verified, notes}}
// min_rank, witness and verified are null when absent. Components are
// coefficient lists (lowest degree first) in the power basis of each factor.

#ifndef RINGUNITS_VERDICT_JSON_HPP
#define RINGUNITS_VERDICT_JSON_HPP

#include <string>
#include <string_view>

#include "ringunits/classify.hpp"

namespace ringunits {

/// indent < 0 gives a single line.
std::string verdict_to_json(const Verdict& v, int indent = -1);
/// Throws ParseError on malformed input.
Verdict verdict_from_json(std::string_view text);

}  // namespace ringunits

#endif
