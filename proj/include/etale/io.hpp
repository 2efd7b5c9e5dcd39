#ifndef ETALE_IO_HPP
#define ETALE_IO_HPP

#include <json.hpp>

#include "etale/enumerate.hpp"
#include "etale/plucker.hpp"

namespace etale {

// Deterministic key order everywhere: CLI output must be byte-stable.
using Json = nlohmann::ordered_json;

Json field_to_json(const FieldPtr& F);
FieldPtr field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldPtr& F);

Json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const Json& j, const FieldPtr& F);

Json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const Json& j, const FieldPtr& F);
Json subspace_to_json(const Subspace& V);
Subspace subspace_from_json(const Json& j, const FieldPtr& F, std::size_t ambient);

Json algebra_to_json(const AlgebraPtr& A);
AlgebraPtr algebra_from_json(const Json& j);

Json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const Json& j, const AlgebraPtr& A);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json etale_subalgebra_to_json(const EtaleSubalgebra& E);
EtaleSubalgebra etale_subalgebra_from_json(const Json& j, const AlgebraPtr& A);

Json ideal_system_to_json(const IdealSystem& sys);

Json plucker_to_json(const PluckerPoint& p);
PluckerPoint plucker_from_json(const Json& j, const FieldPtr& F);

Json quadratic_space_to_json(const QuadraticSpace& qs);
QuadraticSpace quadratic_space_from_json(const Json& j);

Json point_pair_to_json(const PointPairOnQuadric& pp);
PointPairOnQuadric point_pair_from_json(const Json& j, const FieldPtr& F);

Json report_to_json(const EnumerationReport& rep, const AlgebraPtr& A, bool with_seconds);

} // namespace etale

#endif
