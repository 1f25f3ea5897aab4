#include "ssmlp/learner.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssmlp {

std::size_t EncodedExample::target_index() const {
    if (!target)
        throw std::invalid_argument("example has no target");
    const auto it = std::find(target->begin(), target->end(), 1.0);
    if (it == target->end())
        throw std::invalid_argument("target vector is not one-hot");
    return static_cast<std::size_t>(it - target->begin());
}

std::vector<double> encode_features(const ExampleSet& set, std::size_t row) {
    const auto& schema = set.schema();
    std::vector<double> features;
    for (std::size_t c : set.regular_indices()) {
        if (schema[c].is_nominal())
            throw std::invalid_argument("encode_features: attribute '" + schema[c].name +
                                        "' is nominal; run the preprocessing pipeline first");
        features.push_back(as_number(set.row(row)[c]));
    }
    return features;
}

std::vector<EncodedExample> encode_examples(const ExampleSet& set) {
    const auto& classes = set.class_names();
    std::vector<EncodedExample> out;
    out.reserve(set.size());
    for (std::size_t r = 0; r < set.size(); ++r) {
        EncodedExample ex;
        ex.features = encode_features(set, r);
        if (set.has_label(r)) {
            const std::string& label = set.label_of(r);
            const auto it = std::find(classes.begin(), classes.end(), label);
            if (it == classes.end())
                throw std::invalid_argument("encode_examples: label '" + label +
                                            "' is not a known class");
            std::vector<double> one_hot(classes.size(), 0.0);
            one_hot[static_cast<std::size_t>(it - classes.begin())] = 1.0;
            ex.target = std::move(one_hot);
        }
        out.push_back(std::move(ex));
    }
    return out;
}

Prediction predict_row(const Learner& learner, const ExampleSet& set, std::size_t row) {
    return learner.predict(encode_features(set, row));
}

} // namespace ssmlp
