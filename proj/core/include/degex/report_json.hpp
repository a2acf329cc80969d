#pragma once

// JSON forms of the library's reports. Rationals are {"num": ..., "den": ...}
// with integers emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise. Irrational quantities are
// {"approx": <double>, "decimal": "<40 significant digits>"}.

#include <nlohmann/json.hpp>

#include "degex/extraction.hpp"
#include "degex/generators.hpp"
#include "degex/quasirandomness.hpp"

namespace degex {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const Rational& q);
Json to_json(const Real& x);
Json to_json(const VertexList& vertices);

Json to_json(const TheoremParams& params);
Json to_json(const DegreeThreshold& threshold);
Json to_json(const ExtractionReport& report);
/// `n` and `m` decode the ranks into vertex lists when `with_subsets` is set.
Json to_json(const ExhaustiveResult& result, std::uint32_t n, std::uint32_t m, bool with_subsets);
Json to_json(const AuditReport& report);
Json to_json(const DiscrepancyReport& report);
Json to_json(const ImplicationVerdict& verdict);
Json to_json(const PartitionDeletion& deletion);

}  // namespace degex
