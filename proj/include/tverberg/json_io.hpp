/**
 * JSON forms of the library's data. Rationals and big integers are always
 * strings ("p/q" or integer), so every value round-trips exactly.
 */
#ifndef TVERBERG_JSON_IO_HPP
#define TVERBERG_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "tverberg/complex.hpp"
#include "tverberg/constraint_map.hpp"
#include "tverberg/exact_geometry.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/orbit.hpp"
#include "tverberg/partitions.hpp"
#include "tverberg/pl_map.hpp"
#include "tverberg/search.hpp"
#include "tverberg/shellability.hpp"

namespace tverberg {

using Json = nlohmann::json;

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// Array of arrays of labels.
Json to_json(const IndexPartition& p);
IndexPartition partition_from_json(const Json& j, int ground_size);

/// {"r", "d", "dims"}.
Json to_json(const DimensionTuple& t);
DimensionTuple tuple_from_json(const Json& j);

/// {"dim", "points"}.
Json to_json(const PointConfiguration& c);
PointConfiguration configuration_from_json(const Json& j);

/// {"point", "coefficients": [{"label": "weight"}, ...]}.
Json to_json(const IntersectionWitness& w);
IntersectionWitness witness_from_json(const Json& j);

Json to_json(const SearchOutcome& o);
Json to_json(const PositionVerdict& v);

/// {"vertices": [labels], "facets": [[labels]]}.
Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

/// {"coefficients", "reduced", "dimensions", "betti", "torsion"}; entry i is dimension i-1.
Json to_json(const HomologyResult& h);
Json to_json(const ShellabilityResult& s, const SimplicialComplex& k);
Json to_json(const JoinFace& f);
Json to_json(const ConstraintVerification& v);

/// {"n", "target_dim", "values": [{"face", "value"}]} over all nonempty faces by mask order.
Json to_json(const PLMap& f);
PLMap pl_map_from_json(const Json& j);

Json to_json(const JoinPoint& x);
Json to_json(const AffineJoinMap& f);
AffineJoinMap join_map_from_json(const Json& j);
Json to_json(const OrbitCollapse& c);
Json to_json(const ColorfulSelection& s);

} // namespace tverberg

#endif
