#include "etale/io.hpp"

namespace etale {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw invalid_input_error(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::string need_string(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_string()) throw invalid_input_error(std::string(key) + " must be a string");
    return v.get<std::string>();
}

} // namespace

// --------------------------------------------------------------- fields

Json field_to_json(const FieldPtr& F) {
    switch (F->kind()) {
    case Field::Kind::rationals:
        return Json{{"kind", "Q"}};
    case Field::Kind::prime:
        return Json{{"kind", "Fp"}, {"p", F->prime_p()}};
    case Field::Kind::extension: {
        Json mod = Json::array();
        for (const auto& c : F->modulus_coeffs()) mod.push_back(c.to_text());
        return Json{{"kind", "ext"},
                    {"base", field_to_json(F->base())},
                    {"modulus", mod},
                    {"generator", F->generator_name()}};
    }
    }
    throw invalid_input_error("bad field kind");
}

FieldPtr field_from_json(const Json& j) {
    std::string kind = need_string(j, "kind");
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") {
        const Json& p = need(j, "p");
        if (!p.is_number_unsigned() && !p.is_number_integer())
            throw invalid_input_error("p must be an integer");
        return Field::prime(p.get<std::uint64_t>());
    }
    if (kind == "ext") {
        FieldPtr base = field_from_json(need(j, "base"));
        const Json& mod = need(j, "modulus");
        if (!mod.is_array()) throw invalid_input_error("modulus must be an array");
        std::vector<Scalar> coeffs;
        for (const auto& c : mod) coeffs.push_back(scalar_from_json(c, base));
        std::string gen = j.contains("generator") ? j.at("generator").get<std::string>() : "";
        // Degree-2 moduli over Q are decided by the discriminant; accept
        // higher degrees over Q as explicitly trusted input.
        bool trust = base->is_rationals()
                         ? (j.contains("trusted") && j.at("trusted").get<bool>())
                         : false;
        return Field::extension(base, Polynomial(base, std::move(coeffs)), gen, trust);
    }
    throw invalid_input_error("unknown field kind: " + kind);
}

// -------------------------------------------------------------- scalars

Json scalar_to_json(const Scalar& s) { return Json(s.to_text()); }

Scalar scalar_from_json(const Json& j, const FieldPtr& F) {
    if (j.is_string()) return Scalar::from_text(j.get<std::string>(), F);
    if (j.is_number_integer()) return F->from_integer(j.get<long>());
    if (j.is_number_unsigned()) return F->from_integer(static_cast<long>(j.get<unsigned long>()));
    throw invalid_input_error("scalar must be a string or integer");
}

Json poly_to_json(const Polynomial& f) {
    Json out = Json::array();
    for (const auto& c : f.coeffs()) out.push_back(c.to_text());
    return out;
}

Polynomial poly_from_json(const Json& j, const FieldPtr& F) {
    if (!j.is_array()) throw invalid_input_error("polynomial must be an array");
    std::vector<Scalar> coeffs;
    for (const auto& c : j) coeffs.push_back(scalar_from_json(c, F));
    return Polynomial(F, std::move(coeffs));
}

// ------------------------------------------------------------- matrices

Json matrix_to_json(const Matrix& M) {
    Json out = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j).to_text());
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Json& j, const FieldPtr& F) {
    if (!j.is_array() || j.empty()) throw invalid_input_error("matrix must be a nonempty array");
    std::vector<std::vector<Scalar>> rows;
    std::size_t cols = 0;
    for (const auto& r : j) {
        if (!r.is_array()) throw invalid_input_error("matrix row must be an array");
        std::vector<Scalar> row;
        for (const auto& c : r) row.push_back(scalar_from_json(c, F));
        if (cols == 0) cols = row.size();
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(F, rows, cols);
}

Json subspace_to_json(const Subspace& V) { return matrix_to_json(V.basis()); }

Subspace subspace_from_json(const Json& j, const FieldPtr& F, std::size_t ambient) {
    if (!j.is_array()) throw invalid_input_error("subspace must be an array of rows");
    if (j.empty()) return Subspace(F, ambient);
    Matrix M = matrix_from_json(j, F);
    if (M.cols() != ambient) throw invalid_input_error("subspace rows have the wrong length");
    return Subspace::span(M);
}

// ------------------------------------------------------------- algebras

Json algebra_to_json(const AlgebraPtr& A) {
    if (auto n = A->matrix_form())
        return Json{{"kind", "matrix"}, {"n", *n}, {"field", field_to_json(A->field())}};
    Json table = Json::array();
    const std::size_t d = A->dim();
    for (std::size_t i = 0; i < d; ++i) {
        Json ti = Json::array();
        for (std::size_t j = 0; j < d; ++j) {
            Json tj = Json::array();
            for (std::size_t k = 0; k < d; ++k) tj.push_back(A->c(i, j, k).to_text());
            ti.push_back(std::move(tj));
        }
        table.push_back(std::move(ti));
    }
    Json one = Json::array();
    for (const auto& c : A->one_coords()) one.push_back(c.to_text());
    Json out{{"kind", "structure_constants"},
             {"dim", d},
             {"field", field_to_json(A->field())},
             {"table", table},
             {"one", one}};
    if (A->degree()) out["degree"] = *A->degree();
    return out;
}

AlgebraPtr algebra_from_json(const Json& j) {
    std::string kind = need_string(j, "kind");
    FieldPtr F = field_from_json(need(j, "field"));
    if (kind == "matrix") {
        const Json& n = need(j, "n");
        if (!n.is_number_unsigned() && !n.is_number_integer())
            throw invalid_input_error("n must be an integer");
        return make_matrix_algebra(n.get<unsigned>(), F);
    }
    if (kind == "quaternion") {
        Scalar a = scalar_from_json(need(j, "a"), F);
        Scalar b = scalar_from_json(need(j, "b"), F);
        return make_quaternion_algebra(a, b, F);
    }
    if (kind == "structure_constants") {
        const Json& dj = need(j, "dim");
        std::size_t d = dj.get<std::size_t>();
        const Json& t = need(j, "table");
        if (!t.is_array() || t.size() != d)
            throw invalid_input_error("table must be a d x d x d array");
        std::vector<Scalar> table;
        table.reserve(d * d * d);
        for (const auto& ti : t) {
            if (!ti.is_array() || ti.size() != d)
                throw invalid_input_error("table must be a d x d x d array");
            for (const auto& tj : ti) {
                if (!tj.is_array() || tj.size() != d)
                    throw invalid_input_error("table must be a d x d x d array");
                for (const auto& c : tj) table.push_back(scalar_from_json(c, F));
            }
        }
        const Json& o = need(j, "one");
        std::vector<Scalar> one;
        for (const auto& c : o) one.push_back(scalar_from_json(c, F));
        std::optional<unsigned> degree;
        if (j.contains("degree") && !j.at("degree").is_null())
            degree = j.at("degree").get<unsigned>();
        return Algebra::create(F, d, std::move(table), std::move(one), degree);
    }
    throw invalid_input_error("unknown algebra kind: " + kind);
}

// ------------------------------------------------------------- elements

Json element_to_json(const AlgebraElement& a) {
    Json out = Json::array();
    for (const auto& c : a.coords()) out.push_back(c.to_text());
    return out;
}

AlgebraElement element_from_json(const Json& j, const AlgebraPtr& A) {
    if (!j.is_array()) throw invalid_input_error("element must be a coordinate array");
    std::vector<Scalar> coords;
    for (const auto& c : j) coords.push_back(scalar_from_json(c, A->field()));
    return AlgebraElement(A, std::move(coords));
}

Json partition_to_json(const Partition& p) {
    Json out = Json::array();
    for (unsigned v : p.parts()) out.push_back(v);
    return out;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw invalid_input_error("partition must be an array");
    std::vector<unsigned> parts;
    for (const auto& v : j) parts.push_back(v.get<unsigned>());
    return Partition(std::move(parts));
}

Json etale_subalgebra_to_json(const EtaleSubalgebra& E) {
    return subspace_to_json(E.subspace());
}

EtaleSubalgebra etale_subalgebra_from_json(const Json& j, const AlgebraPtr& A) {
    return EtaleSubalgebra(A, subspace_from_json(j, A->field(), A->dim()));
}

Json ideal_system_to_json(const IdealSystem& sys) {
    Json ideals = Json::array();
    for (const auto& I : sys.ideals()) ideals.push_back(subspace_to_json(I.subspace()));
    Json idems = Json::array();
    for (const auto& e : sys.idempotents()) idems.push_back(element_to_json(e));
    return Json{{"field", field_to_json(sys.algebra()->field())},
                {"ideals", ideals},
                {"idempotents", idems}};
}

// -------------------------------------------------------------- plucker

Json plucker_to_json(const PluckerPoint& p) {
    Json out = Json::array();
    for (const auto& c : p.coords()) out.push_back(c.to_text());
    return out;
}

PluckerPoint plucker_from_json(const Json& j, const FieldPtr& F) {
    if (!j.is_array() || j.size() != 6)
        throw invalid_input_error("Plucker point must be a 6-element array");
    std::array<Scalar, 6> c = {F->zero(), F->zero(), F->zero(),
                               F->zero(), F->zero(), F->zero()};
    for (std::size_t i = 0; i < 6; ++i) c[i] = scalar_from_json(j[i], F);
    return PluckerPoint(F, std::move(c));
}

Json quadratic_space_to_json(const QuadraticSpace& qs) {
    return Json{{"field", field_to_json(qs.field())}, {"gram", matrix_to_json(qs.gram())}};
}

QuadraticSpace quadratic_space_from_json(const Json& j) {
    FieldPtr F = field_from_json(need(j, "field"));
    return QuadraticSpace(F, matrix_from_json(need(j, "gram"), F));
}

namespace {

std::string kind_name(IntersectionKind k) {
    switch (k) {
    case IntersectionKind::transverse: return "transverse";
    case IntersectionKind::tangent: return "tangent";
    case IntersectionKind::contained: return "contained";
    }
    return "?";
}

IntersectionKind kind_from_name(const std::string& s) {
    if (s == "transverse") return IntersectionKind::transverse;
    if (s == "tangent") return IntersectionKind::tangent;
    if (s == "contained") return IntersectionKind::contained;
    throw invalid_input_error("unknown intersection kind: " + s);
}

} // namespace

Json point_pair_to_json(const PointPairOnQuadric& pp) {
    Json form = Json::array();
    for (const auto& c : pp.form()) form.push_back(c.to_text());
    return Json{{"plane", subspace_to_json(pp.plane())},
                {"form", form},
                {"kind", kind_name(pp.kind())}};
}

PointPairOnQuadric point_pair_from_json(const Json& j, const FieldPtr& F) {
    const Json& plane = need(j, "plane");
    if (!plane.is_array() || plane.empty())
        throw invalid_input_error("point pair needs a plane basis");
    std::size_t ambient = plane[0].size();
    Subspace W = subspace_from_json(plane, F, ambient);
    const Json& form = need(j, "form");
    if (!form.is_array() || form.size() != 3)
        throw invalid_input_error("binary form must have 3 coefficients");
    std::array<Scalar, 3> c = {F->zero(), F->zero(), F->zero()};
    for (std::size_t i = 0; i < 3; ++i) c[i] = scalar_from_json(form[i], F);
    return PointPairOnQuadric(W, std::move(c), kind_from_name(need_string(j, "kind")));
}

Json report_to_json(const EnumerationReport& rep, const AlgebraPtr& A, bool with_seconds) {
    Json out{{"algebra", algebra_to_json(A)},
             {"rho", partition_to_json(rep.rho)},
             {"count_subalgebras", rep.count_subalgebras},
             {"count_systems", rep.count_systems},
             {"match", rep.match}};
    if (with_seconds) out["seconds"] = rep.seconds;
    return out;
}

} // namespace etale
