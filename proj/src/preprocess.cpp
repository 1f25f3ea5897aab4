#include "ssmlp/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssmlp {

NominalMapping fit_nominal_mapping(const ExampleSet& set) {
    if (set.size() == 0)
        throw std::invalid_argument("fit_nominal_mapping: empty example set");
    NominalMapping m;
    const auto& schema = set.schema();
    for (std::size_t c = 0; c < schema.size(); ++c) {
        const Attribute& attr = schema[c];
        if (attr.role != AttrRole::regular || !attr.is_nominal()) continue;
        std::vector<std::string> table;
        for (const Row& row : set.rows()) {
            const std::string& tok = as_token(row[c]);
            if (std::find(table.begin(), table.end(), tok) == table.end())
                table.push_back(tok);
        }
        m.tables[attr.name] = std::move(table);
    }
    return m;
}

ExampleSet apply_nominal_mapping(const ExampleSet& set, const NominalMapping& m) {
    std::vector<Attribute> schema = set.schema();
    std::vector<Row> rows = set.rows();

    for (std::size_t c = 0; c < schema.size(); ++c) {
        Attribute& attr = schema[c];
        if (attr.role != AttrRole::regular || !attr.is_nominal()) continue;
        auto it = m.tables.find(attr.name);
        if (it == m.tables.end())
            throw std::invalid_argument("apply_nominal_mapping: attribute '" + attr.name +
                                        "' is nominal but the mapping has no table for it");
        const auto& table = it->second;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string& tok = as_token(rows[r][c]);
            auto pos = std::find(table.begin(), table.end(), tok);
            if (pos == table.end())
                throw std::invalid_argument("apply_nominal_mapping: unseen token '" + tok +
                                            "' in attribute '" + attr.name + "'");
            rows[r][c] = static_cast<double>(pos - table.begin());
        }
        attr.kind = AttrKind::numeric;
        attr.vocabulary.clear();
    }
    return ExampleSet(std::move(schema), std::move(rows));
}

ScalingParams fit_scaler(const ExampleSet& set) {
    if (set.size() == 0)
        throw std::invalid_argument("fit_scaler: empty example set");
    ScalingParams p;
    const auto& schema = set.schema();
    for (std::size_t c : set.regular_indices()) {
        if (schema[c].is_nominal())
            throw std::invalid_argument("fit_scaler: attribute '" + schema[c].name +
                                        "' is still nominal; apply the nominal mapping first");
        double lo = as_number(set.row(0)[c]);
        double hi = lo;
        for (const Row& row : set.rows()) {
            const double x = as_number(row[c]);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        p.ranges[schema[c].name] = {lo, hi};
    }
    return p;
}

ExampleSet apply_scaler(const ExampleSet& set, const ScalingParams& p) {
    std::vector<Row> rows = set.rows();
    const auto& schema = set.schema();
    for (std::size_t c : set.regular_indices()) {
        if (schema[c].is_nominal())
            throw std::invalid_argument("apply_scaler: attribute '" + schema[c].name +
                                        "' is still nominal; apply the nominal mapping first");
        auto it = p.ranges.find(schema[c].name);
        if (it == p.ranges.end())
            throw std::invalid_argument("apply_scaler: no fitted range for attribute '" +
                                        schema[c].name + "'");
        const auto [lo, hi] = it->second;
        for (Row& row : rows) {
            double y = 0.0;
            if (hi > lo) {
                y = 2.0 * (as_number(row[c]) - lo) / (hi - lo) - 1.0;
                y = std::clamp(y, -1.0, 1.0);
            }
            row[c] = y;
        }
    }
    return set.with_rows(std::move(rows));
}

Pipeline fit_pipeline(const ExampleSet& set) {
    Pipeline p;
    p.mapping = fit_nominal_mapping(set);
    p.scaling = fit_scaler(apply_nominal_mapping(set, p.mapping));
    return p;
}

ExampleSet apply_pipeline(const ExampleSet& set, const Pipeline& p) {
    return apply_scaler(apply_nominal_mapping(set, p.mapping), p.scaling);
}

nlohmann::json pipeline_to_json(const Pipeline& p) {
    nlohmann::json j;
    j["nominal_mapping"] = nlohmann::json::object();
    for (const auto& [name, table] : p.mapping.tables) j["nominal_mapping"][name] = table;
    j["scaling"] = nlohmann::json::object();
    for (const auto& [name, range] : p.scaling.ranges)
        j["scaling"][name] = {{"min", range.min}, {"max", range.max}};
    return j;
}

Pipeline pipeline_from_json(const nlohmann::json& j) {
    Pipeline p;
    for (const auto& [name, table] : j.at("nominal_mapping").items())
        p.mapping.tables[name] = table.get<std::vector<std::string>>();
    for (const auto& [name, range] : j.at("scaling").items())
        p.scaling.ranges[name] = {range.at("min").get<double>(), range.at("max").get<double>()};
    return p;
}

} // namespace ssmlp
