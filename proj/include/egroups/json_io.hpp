#pragma once

#include <json.hpp>

#include "egroups/enumeration.hpp"

namespace egroups {

using Json = nlohmann::ordered_json;

/// Version of every JSON and CSV layout emitted by the tools.
inline constexpr int kSchemaVersion = 1;

Json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const Json& j);

/// Coefficient array [c0, ..., c_{e-1}]; a bare integer is read through Z -> GF(p).
Json element_to_json(const Field& f, Fq x);
Fq element_from_json(const Field& f, const Json& j);

/// Rows of elements; `plain` writes prime-field entries as integers.
Json matrix_to_json(const Matrix& m, bool plain = false);
Matrix matrix_from_json(const FieldPtr& f, const Json& j);

/// {"field", "n", "slices"}
Json to_json(const LinearFormMatrix& m);
LinearFormMatrix linear_form_matrix_from_json(const Json& j);

/// {"p", "dim_v", "dim_t", "forms"} with plain integer entries.
Json to_json(const TensorHandle& t);
TensorHandle tensor_from_json(const Json& j);
/// Accepts a tensor or a matrix of linear forms (flattened to the prime field).
TensorHandle tensor_from_any_json(const Json& j);

/// {"field", "a", "b"}; point is "O" or {"x", "y"}.
Json to_json(const EllipticCurve& e);
EllipticCurve curve_from_json(const Json& j);
Json point_to_json(const Field& f, const ECPoint& p);
ECPoint point_from_json(const Field& f, const Json& j);

Json to_json(const PseudoIsometry& m);
Json to_json(const RecognitionReport& r);
Json to_json(const IsoCoset& c);
Json to_json(const OrderFactors& o);
Json to_json(const ClassCount& c);
Json to_json(const SurveyRow& r);

}  // namespace egroups
