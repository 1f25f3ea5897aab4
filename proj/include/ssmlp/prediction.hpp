#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ssmlp {

// Per-class confidence vector (entries >= 0, summing to 1) plus the argmax
// class. Ties resolve to the lowest class index.
struct Prediction {
    std::vector<double> confidences;
    std::size_t label_index = 0;
    std::string label;

    double max_confidence() const { return confidences[label_index]; }
};

// Normalizes nonnegative scores into a Prediction. A zero score vector maps
// to uniform confidences.
Prediction make_prediction(const std::vector<double>& scores,
                           const std::vector<std::string>& class_names);

} // namespace ssmlp
