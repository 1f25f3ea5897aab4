#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ssmlp/dataset.hpp"
#include "ssmlp/prediction.hpp"

namespace ssmlp {

// A fully numeric training example: features (scaled to [-1, +1] by the
// preprocessing pipeline) and, when labeled, a one-hot target over the
// class list.
struct EncodedExample {
    std::vector<double> features;
    std::optional<std::vector<double>> target;

    bool labeled() const { return target.has_value(); }
    std::size_t target_index() const; // throws if unlabeled
};

// Feature vector of one row: the regular attributes in schema order. Every
// regular attribute must already be numeric.
std::vector<double> encode_features(const ExampleSet& set, std::size_t row);

// Encodes every row; targets are one-hot over the set's class names and
// absent for unlabeled rows.
std::vector<EncodedExample> encode_examples(const ExampleSet& set);

// Contract shared by the MLP and the baseline classifiers so the
// semi-supervised wrappers and the evaluation harness can drive any of them.
// fit() always trains from scratch (fresh seeded initialization), so a
// learner is a pure function of its configuration and training data.
class Learner {
public:
    virtual ~Learner() = default;

    // Trains on a preprocessed, fully labeled example set.
    virtual void fit(const ExampleSet& labeled) = 0;

    virtual Prediction predict(const std::vector<double>& features) const = 0;

    // Training-set error after fit. The MLP reports its squared-error total;
    // the baselines report the misclassification fraction.
    virtual double training_error() const = 0;

    virtual const std::vector<std::string>& class_names() const = 0;
    virtual std::string name() const = 0;

    // Trained-model state for the model file; includes a "type" tag.
    virtual nlohmann::json to_json() const = 0;
};

Prediction predict_row(const Learner& learner, const ExampleSet& set, std::size_t row);

} // namespace ssmlp
