#include "egroups/json_io.hpp"

#include "egroups/errors.hpp"

namespace egroups {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadInput, what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_array() && j.size() == 1 && j[0].is_number_integer()) return j[0].get<std::int64_t>();
    bad(std::string(what) + " must be an integer");
}

std::size_t as_size(const Json& j, const char* what) {
    std::int64_t v = as_int(j, what);
    if (v < 0) bad(std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

FieldPtr prime_field(const Json& j) {
    std::int64_t p = as_int(member(j, "p"), "p");
    if (p < 2 || p > (1 << 24)) bad("p out of range");
    return field_make(static_cast<std::uint32_t>(p), 1);
}

Json key_to_json(const Field& f, const ClassKey& k) {
    return Json::array({element_to_json(f, Fq{k[0]}), element_to_json(f, Fq{k[1]}),
                        element_to_json(f, Fq{k[2]}), element_to_json(f, Fq{k[3]})});
}

}  // namespace

Json to_json(const FieldSpec& spec) {
    return Json{{"p", spec.p}, {"e", spec.e}, {"modulus", spec.modulus}};
}

FieldSpec field_spec_from_json(const Json& j) {
    FieldSpec s;
    std::int64_t p = as_int(member(j, "p"), "p");
    std::int64_t e = j.contains("e") ? as_int(j.at("e"), "e") : 1;
    if (p < 2 || e < 1 || e > 24) bad("field parameters out of range");
    s.p = static_cast<std::uint32_t>(p);
    s.e = static_cast<std::uint32_t>(e);
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
        for (const auto& c : j.at("modulus")) s.modulus.push_back(static_cast<std::uint32_t>(as_size(c, "modulus")));
    }
    return s;
}

Json element_to_json(const Field& f, Fq x) { return f.coeffs(x); }

Fq element_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (!j.is_array() || j.size() > f.e()) bad("element must be an integer or at most e coefficients");
    std::vector<std::uint32_t> c(f.e(), 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) bad("element coefficients must be integers");
        std::int64_t v = j[i].get<std::int64_t>() % std::int64_t(f.p());
        c[i] = static_cast<std::uint32_t>(v < 0 ? v + f.p() : v);
    }
    return f.from_coeffs(c);
}

Json matrix_to_json(const Matrix& m, bool plain) {
    const Field& f = *m.field();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (plain && f.e() == 1)
                row.push_back(m(i, k).v);
            else
                row.push_back(element_to_json(f, m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) bad("matrix must be a nonempty array of rows");
    std::size_t rows = j.size(), cols = j[0].size();
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) bad("matrix rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = element_from_json(*f, j[i][k]);
    }
    return m;
}

Json to_json(const LinearFormMatrix& m) {
    Json slices = Json::array();
    for (const auto& s : m.slices) slices.push_back(matrix_to_json(s));
    return Json{{"field", to_json(m.field->spec())}, {"n", m.rows()}, {"slices", slices}};
}

LinearFormMatrix linear_form_matrix_from_json(const Json& j) {
    FieldPtr f = field_make(field_spec_from_json(member(j, "field")));
    std::size_t n = as_size(member(j, "n"), "n");
    const Json& sl = member(j, "slices");
    if (!sl.is_array() || sl.size() != 3) bad("slices must hold three matrices");
    LinearFormMatrix m = LinearFormMatrix::zero(f, n, n);
    for (int k = 0; k < 3; ++k) {
        m.slices[k] = matrix_from_json(f, sl[k]);
        if (m.slices[k].rows() != n || m.slices[k].cols() != n) bad("slice shape does not match n");
    }
    return m;
}

Json to_json(const TensorHandle& t) {
    if (t.field->e() != 1) bad("tensor JSON is defined over prime fields");
    Json forms = Json::array();
    for (const auto& c : t.forms) forms.push_back(matrix_to_json(c, true));
    return Json{{"p", t.field->p()}, {"dim_v", t.dim_v}, {"dim_t", t.dim_t()}, {"forms", forms}};
}

TensorHandle tensor_from_json(const Json& j) {
    TensorHandle t;
    t.field = prime_field(j);
    t.dim_v = as_size(member(j, "dim_v"), "dim_v");
    std::size_t dim_t = as_size(member(j, "dim_t"), "dim_t");
    const Json& forms = member(j, "forms");
    if (!forms.is_array() || forms.size() != dim_t) bad("forms must hold dim_t matrices");
    for (const auto& c : forms) {
        Matrix m = matrix_from_json(t.field, c);
        if (m.rows() != t.dim_v || m.cols() != t.dim_v) bad("form shape does not match dim_v");
        t.forms.push_back(std::move(m));
    }
    return t;
}

TensorHandle tensor_from_any_json(const Json& j) {
    if (j.is_object() && j.contains("slices")) {
        LinearFormMatrix m = linear_form_matrix_from_json(j);
        if (!m.is_skew()) throw Error(ErrorKind::NotSkew, "matrix of linear forms is not skew");
        return flatten_to_prime(m);
    }
    return tensor_from_json(j);
}

Json to_json(const EllipticCurve& e) {
    const Field& f = *e.field;
    return Json{{"field", to_json(f.spec())}, {"a", element_to_json(f, e.a)}, {"b", element_to_json(f, e.b)}};
}

EllipticCurve curve_from_json(const Json& j) {
    FieldPtr f = field_make(field_spec_from_json(member(j, "field")));
    return curve_make(f, element_from_json(*f, member(j, "a")), element_from_json(*f, member(j, "b")));
}

Json point_to_json(const Field& f, const ECPoint& p) {
    if (!p.finite) return "O";
    return Json{{"x", element_to_json(f, p.x)}, {"y", element_to_json(f, p.y)}};
}

ECPoint point_from_json(const Field& f, const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "O") return ECPoint::identity();
        bad("point must be \"O\" or {\"x\", \"y\"}");
    }
    return ECPoint::affine(element_from_json(f, member(j, "x")), element_from_json(f, member(j, "y")));
}

Json to_json(const PseudoIsometry& m) {
    return Json{{"v", matrix_to_json(m.v, true)}, {"t", matrix_to_json(m.t, true)}, {"sigma_power", m.sigma_power}};
}

Json to_json(const RecognitionReport& r) {
    Json j{{"schema", kSchemaVersion}, {"status", to_string(r.status)}, {"reason", r.reason}};
    j["elliptic"] = r.status == RecognitionStatus::Elliptic;
    j["field"] = r.field ? to_json(r.field->spec()) : Json(nullptr);
    if (r.status != RecognitionStatus::Elliptic || !r.curve) return j;
    const Field& f = *r.field;
    j["curve"] = to_json(*r.curve);
    j["point"] = point_to_json(f, r.point);
    j["j_invariant"] = element_to_json(f, j_invariant(*r.curve));
    j["star_type"] = to_string(r.star);
    j["class_key"] = key_to_json(f, r.key);
    j["flex_count"] = r.flex_count;
    j["to_input"] = to_json(r.to_input);
    return j;
}

Json to_json(const IsoCoset& c) {
    Json j{{"schema", kSchemaVersion}, {"isomorphic", c.isomorphic}, {"reason", c.reason}};
    j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(to_json(g));
    j["generators"] = gens;
    j["galois"] = c.galois;
    if (c.first.status == RecognitionStatus::Elliptic) j["first_class_key"] = key_to_json(*c.first.field, c.first.key);
    if (c.second.status == RecognitionStatus::Elliptic)
        j["second_class_key"] = key_to_json(*c.second.field, c.second.key);
    return j;
}

Json to_json(const OrderFactors& o) {
    return Json{{"schema", kSchemaVersion}, {"q", o.q},           {"q_power", o.q_power},
                {"galois", o.galois},       {"torsion3", o.torsion3}, {"aut_ratio", o.aut_ratio},
                {"tail", o.tail},           {"tail_value", o.tail_value}, {"value", o.value}};
}

Json to_json(const ClassCount& c) {
    FieldPtr f = field_make(c.p, c.e);
    Json reps = Json::array();
    for (std::size_t i = 0; i < c.representatives.size(); ++i)
        reps.push_back(Json{{"key", key_to_json(*f, c.representatives[i])}, {"orbit_size", c.orbit_sizes[i]}});
    return Json{{"schema", kSchemaVersion},
                {"q", c.q},
                {"N", c.classes},
                {"key_classes", c.key_classes},
                {"valid_pairs", c.valid_pairs},
                {"partitions_agree", c.partitions_agree},
                {"representatives", reps}};
}

Json to_json(const SurveyRow& r) {
    Json counts = Json::object();
    for (std::size_t i = 0; i < r.counts.size(); ++i) counts[to_string(static_cast<StarType>(i))] = r.counts[i];
    return Json{{"schema", kSchemaVersion},
                {"p", r.p},
                {"samples", r.samples},
                {"seed", r.seed},
                {"counts", counts},
                {"rejected", r.rejected},
                {"without_decomposition", r.without_decomposition},
                {"unitary_without_decomposition", r.unitary_without_decomposition},
                {"fractions",
                 {{"exchange", r.fraction(StarType::Exchange)},
                  {"unitary", r.fraction(StarType::Unitary1)},
                  {"orthogonal", r.orthogonal_fraction()},
                  {"symplectic", r.fraction(StarType::Symplectic2)}}}};
}

}  // namespace egroups
