#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ssmlp/dataset.hpp"

namespace ssmlp {

// Token -> code tables for the regular nominal attributes, fitted in order
// of first appearance (so binary attributes come out as 0/1). The label
// column is never mapped; class names stay tokens end to end.
struct NominalMapping {
    // attribute name -> tokens, where a token's position is its code
    std::map<std::string, std::vector<std::string>> tables;

    bool operator==(const NominalMapping&) const = default;
};

NominalMapping fit_nominal_mapping(const ExampleSet& set);

// Replaces tokens with their codes; mapped attributes become numeric.
// Applying to already-numeric attributes is the identity. A token missing
// from the fitted table signals a train/test vocabulary mismatch and throws.
ExampleSet apply_nominal_mapping(const ExampleSet& set, const NominalMapping& m);

// Observed min/max per regular attribute, measured after nominal mapping.
struct ScalingParams {
    struct Range {
        double min = 0.0;
        double max = 0.0;
        bool operator==(const Range&) const = default;
    };
    std::map<std::string, Range> ranges;

    bool operator==(const ScalingParams&) const = default;
};

// Fit on training data only; the set must be fully numeric in its regular
// attributes.
ScalingParams fit_scaler(const ExampleSet& set);

// x' = 2 (x - min) / (max - min) - 1, clamped to [-1, +1]; a constant
// attribute (min == max) maps to 0.
ExampleSet apply_scaler(const ExampleSet& set, const ScalingParams& p);

// The fixed preprocessing order: nominal mapping, then scaling.
struct Pipeline {
    NominalMapping mapping;
    ScalingParams scaling;

    bool operator==(const Pipeline&) const = default;
};

Pipeline fit_pipeline(const ExampleSet& set);
ExampleSet apply_pipeline(const ExampleSet& set, const Pipeline& p);

nlohmann::json pipeline_to_json(const Pipeline& p);
Pipeline pipeline_from_json(const nlohmann::json& j);

} // namespace ssmlp
