#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ssmlp/learner.hpp"
#include "ssmlp/prediction.hpp"

namespace ssmlp {

// Feed-forward network with sigmoid units on every layer, trained by online
// backpropagation on the summed squared error
//   E = 1/2 * sum over examples, sum over output units of (target - output)^2.

struct NetworkTopology {
    std::size_t input_size = 0;
    std::vector<std::size_t> hidden_sizes; // the experiments use exactly one hidden layer
    std::size_t output_size = 0;           // number of classes, >= 2

    bool operator==(const NetworkTopology&) const = default;
};

struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> data; // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool operator==(const Matrix&) const = default;
};

// weights[l] has shape (fan_in + 1) x fan_out; the last row is the bias,
// fed by a constant-1 input.
struct Mlp {
    NetworkTopology topology;
    std::vector<Matrix> weights;

    bool operator==(const Mlp&) const = default;
};

struct TrainConfig {
    std::size_t training_cycles = 500;
    double learning_rate = 0.3;
    double error_epsilon = 1.0e-5;
    double momentum = 0.0;
    std::uint64_t shuffle_seed = 0;
};

enum class StopReason { cycles_exhausted, epsilon_reached };

struct TrainHistory {
    std::vector<double> cycle_error; // total squared error after each cycle
    StopReason stop_reason = StopReason::cycles_exhausted;
};

// Hidden-layer sizing rule: floor((attributes + classes) / divisor), plus
// one when requested, never below 1.
std::size_t default_hidden_size(std::size_t num_attributes, std::size_t num_classes,
                                std::size_t divisor = 4, bool plus_one = false);

// Weights and biases drawn uniformly from [-0.5, +0.5]; deterministic per
// (topology, seed).
Mlp init_network(const NetworkTopology& topology, std::uint64_t seed);

// Raw sigmoid outputs, each strictly inside (0, 1).
std::vector<double> forward(const Mlp& net, const std::vector<double>& features);

// Total squared error over a fully labeled dataset.
double error(const Mlp& net, const std::vector<EncodedExample>& data);

// Previous weight deltas for momentum, zero-initialized.
struct Velocity {
    std::vector<Matrix> deltas;
};
Velocity make_velocity(const Mlp& net);

// One online gradient-descent update on a single labeled example:
//   delta = -lr * grad + momentum * previous delta;  w += delta.
// Throws on a non-finite update (divergence).
void backprop_step(Mlp& net, const EncodedExample& ex, double learning_rate, double momentum,
                   Velocity& velocity);

// Up to training_cycles epochs of per-example updates in seeded-shuffle
// order; stops early once the end-of-cycle error drops below error_epsilon.
std::pair<Mlp, TrainHistory> train(Mlp net, const std::vector<EncodedExample>& data,
                                   const TrainConfig& cfg);

// Confidences are the raw outputs normalized to sum 1; the label is the
// argmax class (ties -> lowest index).
Prediction predict(const Mlp& net, const std::vector<double>& features,
                   const std::vector<std::string>& class_names);

nlohmann::json mlp_to_json(const Mlp& net);
Mlp mlp_from_json(const nlohmann::json& j);

// Learner adapter wiring the network into the shared train/predict contract.
struct MlpLearnerConfig {
    // Explicit hidden layer sizes; when empty, a single hidden layer of
    // default_hidden_size(input, classes, divisor, plus_one) is used.
    std::vector<std::size_t> hidden_sizes;
    std::size_t divisor = 4;
    bool plus_one = false;
    TrainConfig train;
    std::uint64_t init_seed = 0;
};

class MlpLearner final : public Learner {
public:
    explicit MlpLearner(MlpLearnerConfig cfg) : cfg_(std::move(cfg)) {}

    void fit(const ExampleSet& labeled) override;
    Prediction predict(const std::vector<double>& features) const override;
    double training_error() const override;
    const std::vector<std::string>& class_names() const override { return class_names_; }
    std::string name() const override { return "mlp"; }
    nlohmann::json to_json() const override;

    const MlpLearnerConfig& config() const { return cfg_; }
    const Mlp& network() const;
    const TrainHistory& history() const;

    // Restores a trained learner from to_json() output.
    static MlpLearner from_json(const nlohmann::json& j);

private:
    MlpLearnerConfig cfg_;
    std::optional<Mlp> net_;
    TrainHistory history_;
    std::vector<std::string> class_names_;
};

} // namespace ssmlp
