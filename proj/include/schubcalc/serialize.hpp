#pragma once

#include <json.hpp>

#include "schubcalc/cauchy.hpp"
#include "schubcalc/chains.hpp"
#include "schubcalc/permutation.hpp"
#include "schubcalc/schubert.hpp"

namespace schubcalc {

// Key order is insertion order so output is stable byte for byte.
using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

Json to_json(const Permutation& w);
Json to_json(const CoverEdge& e);
Json to_json(const CompatibleSequence& c);
Json to_json(const Chain& c);
Json to_json(const LabeledChain& c);
Json to_json(const MonkMatching& m);
Json to_json(const InsertionResult& r);
Json to_json(const BoundedBiword& b);

Json to_json(const DualityReport& r);
Json to_json(const CauchyReport& r);
Json to_json(const ChainSymmetryReport& r);
Json to_json(const LabelPermutationReport& r);
Json to_json(const IncreasingReport& r);

/// Parsers for the same shapes; throw InputError on malformed input.
Permutation permutation_from_json(const Json& j);
CompatibleSequence compatible_sequence_from_json(const Json& j);
LabeledChain labeled_chain_from_json(const Json& j);
InsertionResult insertion_result_from_json(const Json& j);

}  // namespace schubcalc
