#pragma once

#include "casca/decision/mdp.hpp"

#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

namespace casca::decision {

struct PolicyConfig {
    /// Action bins per parameter; 0 means one bin per integer value (integer
    /// parameters) or 11 bins (float parameters). Must otherwise be >= 2.
    int bins = 0;
    std::vector<int> hidden{32, 32};
    double learning_rate = 3e-3;
    double clip_epsilon = 0.2;
    double discount = 0.9;
    double gae_lambda = 0.95;
    int epochs = 4;
    int batch_size = 64;
    int minibatches = 4;
    double entropy_coef = 0.01;
    double value_coef = 0.5;
    double max_grad_norm = 0.5;
};

void validate(const PolicyConfig& config);
PolicyConfig parse_policy_config(const nlohmann::json& doc);
nlohmann::json to_json(const PolicyConfig& config);

/// One parameter's discretised action range: `bins` equally spaced values
/// from min to max inclusive, rounded for integer parameters.
struct ActionSpace {
    double min = 0.0;
    double max = 0.0;
    bool integer = true;
    int bins = 2;

    double value(int bin) const;
};

ActionSpace make_action_space(const Observation& param, bool integer, const PolicyConfig& config);

/// Fully connected network, tanh hidden layers, linear output.
class Mlp {
public:
    struct Layer {
        int in = 0, out = 0;
        std::vector<double> w;  // row-major out x in
        std::vector<double> b;
    };
    struct Cache {
        std::vector<std::vector<double>> activations;  // input of each layer, then the output
    };

    Mlp() = default;
    Mlp(const std::vector<int>& sizes, std::mt19937_64& rng, bool zero_output);

    std::vector<double> forward(const std::vector<double>& x, Cache* cache = nullptr) const;
    /// Accumulates parameter gradients for d(loss)/d(output) = `grad_out`.
    void backward(const Cache& cache, const std::vector<double>& grad_out, std::vector<Layer>& grads) const;
    std::vector<Layer> zero_grads() const;

    std::vector<Layer>& layers() { return layers_; }
    const std::vector<Layer>& layers() const { return layers_; }

    nlohmann::json to_json() const;
    static Mlp from_json(const nlohmann::json& doc);

private:
    std::vector<Layer> layers_;
};

class Adam {
public:
    Adam() = default;
    Adam(const Mlp& net, double lr);
    void step(Mlp& net, const std::vector<Mlp::Layer>& grads);

private:
    double lr_ = 1e-3, beta1_ = 0.9, beta2_ = 0.999, eps_ = 1e-8;
    long t_ = 0;
    std::vector<Mlp::Layer> m_, v_;
};

/// Running per-component mean and variance used to scale network inputs.
class Normalizer {
public:
    explicit Normalizer(std::size_t dim = 0) : mean_(dim, 0.0), m2_(dim, 0.0) {}
    void observe(const std::vector<double>& x);
    std::vector<double> apply(const std::vector<double>& x) const;
    nlohmann::json to_json() const;
    static Normalizer from_json(const nlohmann::json& doc);

private:
    double count_ = 0.0;
    std::vector<double> mean_, m2_;
};

/// Categorical policy (one head per parameter) with a separate value network,
/// trained with the clipped surrogate objective.
class Policy {
public:
    Policy(std::size_t state_dim, std::vector<ActionSpace> actions, PolicyConfig config, std::uint64_t seed);

    struct Decision {
        MdpAction action;
        std::vector<int> bins;
        std::vector<double> input;  // normalised state fed to the networks
        double log_prob = 0.0;
        double value = 0.0;
    };

    /// explore samples each head; otherwise each head takes its most likely bin.
    /// Throws ValidationError when the state has the wrong dimension.
    Decision act(const std::vector<double>& state, bool explore, std::mt19937_64& rng) const;

    /// Concatenated per-head action probabilities.
    std::vector<double> probabilities(const std::vector<double>& state) const;
    double value(const std::vector<double>& state) const;

    /// Folds a raw state into the input normaliser.
    void observe(const std::vector<double>& state);

    struct Transition {
        std::vector<double> input;
        std::vector<int> bins;
        double log_prob = 0.0;
        double value = 0.0;
        double reward = 0.0;
        bool terminal = false;  // no bootstrap through this transition
    };

    struct UpdateStats {
        double policy_loss = 0.0;
        double value_loss = 0.0;
        double entropy = 0.0;
    };

    /// One optimisation round over a batch; `bootstrap_value` estimates the
    /// state following the last transition.
    UpdateStats update(const std::vector<Transition>& batch, double bootstrap_value, std::mt19937_64& rng);

    std::size_t state_dim() const { return state_dim_; }
    const std::vector<ActionSpace>& actions() const { return actions_; }
    const PolicyConfig& config() const { return config_; }

    nlohmann::json to_json() const;
    static Policy from_json(const nlohmann::json& doc);
    void save(const std::filesystem::path& path) const;
    static Policy load(const std::filesystem::path& path);

private:
    Policy() = default;
    std::vector<std::vector<double>> head_probs(const std::vector<double>& logits) const;

    std::size_t state_dim_ = 0;
    std::vector<ActionSpace> actions_;
    PolicyConfig config_;
    Mlp actor_, critic_;
    Adam actor_opt_, critic_opt_;
    Normalizer norm_;
};

/// Maps a state to an action through the policy.
MdpAction policy_act(const Policy& policy, const MdpState& state, bool explore, std::mt19937_64& rng);

}  // namespace casca::decision
