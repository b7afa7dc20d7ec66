#pragma once

#include "fusionobs/fusion_ring.hpp"
#include "fusionobs/hochschild.hpp"
#include "fusionobs/obstruction.hpp"
#include "fusionobs/pentagon.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace fusionobs::io {

using Json = nlohmann::ordered_json;

/// Malformed document: bad JSON, wrong types, unknown element names.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json parse_document(const std::string& text);

/// Ring schema:
///   {"names": [..], "identity": name|null, "table": {"a,b": {"c": int, ..}, ..}}
/// Omitted entries are 0. The result is not validated.
RawRing raw_ring_from_json(const Json& doc);

/// Parses, validates (throws InvalidRing) and moves a declared identity to index 0.
FusionRing ring_from_json(const Json& doc);

/// Writes names in index order and only the non-zero entries, pairs in (a,b) order.
Json ring_to_json(const FusionRing& ring);
Json raw_ring_to_json(const RawRing& raw);

/// {"degree": n, "values": {"x1,..,xn": {"s": 0|1, ..}, ..}}; every tuple and component.
Json cochain_to_json(const hochschild::Cochain& c);
hochschild::Cochain cochain_from_json(const FusionRing& ring, const Json& doc);

/// {"x1,x2,x3,x4": {"x": 0|1, ..}, ..} for a degree-4 cochain.
Json alpha_to_json(const hochschild::Cochain& alpha);

Json cocycle_report(const FusionRing& ring, const obstruction::ObstructionCocycle& cocycle, bool cocycle_checked);

Json cohomology_report(const FusionRing& ring, std::size_t degree, std::size_t dim, bool alpha_trivial,
                       const std::optional<hochschild::Cochain>& witness);

/// Row-major array of "p/q" strings.
Json matrix_to_json(const pentagon::ExactMatrix& m);
pentagon::ExactMatrix matrix_from_json(const Json& doc);

/// {"order": g, "table": [[..], ..]}; throws ParseError on shape or group-axiom failures.
Json group_to_json(const pentagon::GroupTable& g);
pentagon::GroupTable group_from_json(const Json& doc);

} // namespace fusionobs::io
