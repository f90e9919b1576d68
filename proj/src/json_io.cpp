#include "grskit/json_io.hpp"

namespace grskit {

json field_to_json(const Field& f) {
    json j;
    j["p"] = f.characteristic();
    j["m"] = f.degree();
    j["modulus"] = f.modulus();
    return j;
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("m"))
        raise(ErrorCode::spec_validation, "field spec needs p and m");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null())
        modulus = j["modulus"].get<std::vector<std::uint32_t>>();
    return Field::make(j["p"].get<std::uint64_t>(), j["m"].get<unsigned>(), modulus);
}

json element_to_json(const FieldElement& x) { return json(x.coeffs()); }

FieldElement element_from_json(const FieldPtr& f, const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        // bare integers are accepted as residues in the prime subfield
        std::int64_t v = j.get<std::int64_t>();
        std::int64_t p = std::int64_t(f->characteristic());
        std::int64_t r = v % p;
        if (r < 0) r += p;
        return f->element_from_coeffs({std::uint32_t(r)});
    }
    if (!j.is_array()) raise(ErrorCode::spec_validation, "element must be a coefficient list");
    return f->element_from_coeffs(j.get<std::vector<std::uint32_t>>());
}

json element_list_to_json(const std::vector<FieldElement>& xs) {
    json j = json::array();
    for (const auto& x : xs) j.push_back(element_to_json(x));
    return j;
}

std::vector<FieldElement> element_list_from_json(const FieldPtr& f, const json& j) {
    if (!j.is_array()) raise(ErrorCode::spec_validation, "expected a list of elements");
    std::vector<FieldElement> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(element_from_json(f, e));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const FieldPtr& f, const json& j) {
    if (!j.is_array() || j.empty())
        raise(ErrorCode::spec_validation, "matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) raise(ErrorCode::spec_validation, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(i, c, element_from_json(f, j[i][c]));
    }
    return m;
}

json code_to_json(const LinearCode& c) {
    json j;
    j["n"] = c.length();
    j["k"] = c.dimension();
    j["field"] = field_to_json(c.field());
    j["generator"] = matrix_to_json(c.generator());
    return j;
}

json profile_to_json(const DistanceProfile& p) {
    json j;
    j["d"] = p.d;
    j["d_dual"] = p.d_dual;
    j["category"] = category_name(p.category);
    return j;
}

json verdict_to_json(const SelfDualVerdict& v) {
    json j;
    j["exists"] = v.exists;
    j["outside_hypothesis"] = v.outside_hypothesis;
    j["symmetric_condition"] = v.symmetric_condition;
    j["square_condition"] = v.square_condition;
    j["reason"] = v.reason;
    if (v.exists) j["witness"] = element_list_to_json(v.witness_factors);
    return j;
}

json mds_result_to_json(const MdsResult& r) {
    json j;
    j["mds"] = r.mds;
    if (!r.mds) {
        j["witness_subset"] = r.witness_subset;
        j["witness_kind"] = r.witness_kind;
    }
    return j;
}

json nmds_certificate_to_json(const NmdsCertificate& c) {
    json j;
    j["dual_distance_ge_k"] = c.dual_distance_ge_k;
    if (!c.dual_distance_ge_k) {
        j["violating_subset"] = c.violating_subset;
        j["subset_kind"] = c.subset_kind;
    }
    return j;
}

LinearCode code_from_descriptor(const FieldPtr& f, const json& descriptor) {
    if (!descriptor.is_object() || !descriptor.contains("family") || !descriptor.contains("points"))
        raise(ErrorCode::spec_validation, "descriptor needs family and points");
    const std::string family = descriptor["family"].get<std::string>();
    auto points = element_list_from_json(f, descriptor["points"]);

    std::vector<FieldElement> factors;
    if (descriptor.contains("factors") && !descriptor["factors"].is_null())
        factors = element_list_from_json(f, descriptor["factors"]);
    else
        factors.assign(points.size(), f->one());
    EvalConfig cfg(std::move(points), std::move(factors));

    auto need = [&](const char* key) {
        if (!descriptor.contains(key))
            raise(ErrorCode::spec_validation, std::string("descriptor needs ") + key);
        return descriptor.at(key);
    };

    if (family == "grs") return grs_code(cfg, need("k").get<std::size_t>());
    if (family == "egrs") return egrs_code(cfg, need("k").get<std::size_t>());
    if (family == "sub_grs")
        return sub_grs_code(cfg, need("k").get<std::size_t>(), need("r").get<std::size_t>());
    if (family == "sub_egrs")
        return sub_egrs_code(cfg, need("k").get<std::size_t>(), need("r").get<std::size_t>());
    if (family == "plus_tgrs")
        return plus_tgrs_code(cfg, need("k").get<std::size_t>(),
                              element_from_json(f, need("eta")));
    if (family == "tgrs") return tgrs_code(cfg, matrix_from_json(f, need("eta")));
    raise(ErrorCode::spec_validation, "unknown family: " + family);
}

} // namespace grskit
