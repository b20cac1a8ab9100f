#include "freqocc/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "freqocc/dft.hpp"
#include "freqocc/error.hpp"

namespace freqocc {

namespace {

using nlohmann::json;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw InvalidInputError(std::string("model contains non-finite ") + what);
    }
}

class LinearModel final : public ClassifierOracle {
public:
    explicit LinearModel(ModelSpec spec)
        : ClassifierOracle(spec.num_classes, spec.input_length, spec.input_channels),
          spec_(std::move(spec)) {}

private:
    std::vector<double> compute_logits(const TimeSeries& x) const override {
        const std::vector<double>& flat = x.values();
        std::vector<double> out(spec_.num_classes);
        for (std::size_t c = 0; c < spec_.num_classes; ++c) {
            double acc = spec_.bias[c];
            const std::vector<double>& row = spec_.weights[c];
            for (std::size_t i = 0; i < flat.size(); ++i) {
                acc += row[i] * flat[i];
            }
            out[c] = acc;
        }
        return out;
    }

    ModelSpec spec_;
};

class MlpModel final : public ClassifierOracle {
public:
    explicit MlpModel(ModelSpec spec)
        : ClassifierOracle(spec.num_classes, spec.input_length, spec.input_channels),
          spec_(std::move(spec)) {}

private:
    std::vector<double> compute_logits(const TimeSeries& x) const override {
        std::vector<double> act = x.values();
        for (std::size_t li = 0; li < spec_.layers.size(); ++li) {
            const DenseLayer& layer = spec_.layers[li];
            std::vector<double> next(layer.bias.size());
            for (std::size_t o = 0; o < next.size(); ++o) {
                double acc = layer.bias[o];
                const std::vector<double>& row = layer.weights[o];
                for (std::size_t i = 0; i < act.size(); ++i) {
                    acc += row[i] * act[i];
                }
                next[o] = acc;
            }
            if (li + 1 < spec_.layers.size()) {
                for (double& v : next) v = std::max(0.0, v);
            }
            act = std::move(next);
        }
        return act;
    }

    ModelSpec spec_;
};

class BandpowerModel final : public ClassifierOracle {
public:
    explicit BandpowerModel(ModelSpec spec)
        : ClassifierOracle(spec.num_classes, spec.input_length, spec.input_channels),
          spec_(std::move(spec)) {}

private:
    std::vector<double> compute_logits(const TimeSeries& x) const override {
        const std::vector<Spectrum> spectra = channelwise_fft(x);
        std::vector<double> out(spec_.num_classes, 0.0);
        for (const BandRule& rule : spec_.rules) {
            double power = 0.0;
            for (std::size_t k = rule.bin_low; k <= rule.bin_high; ++k) {
                power += bin_power(spectra[rule.channel], k);
            }
            out[rule.target_class] += spec_.gain * (power - rule.threshold);
        }
        return out;
    }

    // Amplitude-normalized power of one independent bin: a cosine of
    // amplitude A at an interior bin contributes A^2; DC and Nyquist
    // carry no mirror and use the 1/t scale.
    static double bin_power(const Spectrum& s, std::size_t k) {
        const std::size_t t = s.origin_length;
        const bool self_mirror = (k == 0) || (t % 2 == 0 && k == t / 2);
        const double scale = self_mirror ? 1.0 / static_cast<double>(t)
                                         : 2.0 / static_cast<double>(t);
        const double amp = std::abs(s.bins[k]) * scale;
        return amp * amp;
    }

    ModelSpec spec_;
};

json layer_to_json(const DenseLayer& l) {
    return json{{"weights", l.weights}, {"bias", l.bias}};
}

}  // namespace

std::vector<double> softmax(const std::vector<double>& logits) {
    const double top = *std::max_element(logits.begin(), logits.end());
    std::vector<double> out(logits.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        out[i] = std::exp(logits[i] - top);
        sum += out[i];
    }
    for (double& v : out) v /= sum;
    return out;
}

ClassifierOracle::ClassifierOracle(std::size_t classes, std::size_t length, std::size_t channels)
    : num_classes_(classes), expected_length_(length), expected_channels_(channels) {}

void ClassifierOracle::check_dims(const TimeSeries& x) const {
    if (x.length() != expected_length_ || x.channels() != expected_channels_) {
        throw DimensionError("input dims " + std::to_string(x.length()) + "x" +
                             std::to_string(x.channels()) + " do not match model " +
                             std::to_string(expected_length_) + "x" +
                             std::to_string(expected_channels_));
    }
}

std::vector<double> ClassifierOracle::predict(const TimeSeries& x) const {
    check_dims(x);
    passes_.fetch_add(1, std::memory_order_relaxed);
    return softmax(compute_logits(x));
}

std::vector<double> ClassifierOracle::logits(const TimeSeries& x) const {
    check_dims(x);
    passes_.fetch_add(1, std::memory_order_relaxed);
    return compute_logits(x);
}

void ModelSpec::validate() const {
    if (num_classes < 2) {
        throw InvalidSpecError("model needs at least two classes");
    }
    if (input_length == 0 || input_channels == 0) {
        throw InvalidSpecError("model input dimensions must be positive");
    }
    const std::size_t flat = input_length * input_channels;

    switch (kind) {
        case Kind::linear: {
            if (weights.size() != num_classes || bias.size() != num_classes) {
                throw DimensionError("linear model needs one weight row and bias per class");
            }
            for (const auto& row : weights) {
                if (row.size() != flat) {
                    throw DimensionError("linear weight row length does not match input size");
                }
                for (double v : row) require_finite(v, "weight");
            }
            for (double v : bias) require_finite(v, "bias");
            break;
        }
        case Kind::mlp: {
            if (layers.empty()) {
                throw DimensionError("mlp model needs at least one layer");
            }
            std::size_t in = flat;
            for (const DenseLayer& layer : layers) {
                if (layer.weights.size() != layer.bias.size() || layer.weights.empty()) {
                    throw DimensionError("mlp layer weight/bias row count mismatch");
                }
                for (const auto& row : layer.weights) {
                    if (row.size() != in) {
                        throw DimensionError("mlp layer input width mismatch");
                    }
                    for (double v : row) require_finite(v, "weight");
                }
                for (double v : layer.bias) require_finite(v, "bias");
                in = layer.bias.size();
            }
            if (in != num_classes) {
                throw DimensionError("mlp final layer width must equal num_classes");
            }
            break;
        }
        case Kind::bandpower: {
            if (rules.empty()) {
                throw InvalidSpecError("bandpower model needs at least one rule");
            }
            require_finite(gain, "gain");
            const std::size_t top_bin = input_length / 2;
            for (const BandRule& r : rules) {
                if (r.target_class >= num_classes) {
                    throw InvalidSpecError("bandpower rule targets unknown class");
                }
                if (r.channel >= input_channels) {
                    throw InvalidSpecError("bandpower rule targets unknown channel");
                }
                if (r.bin_low > r.bin_high || r.bin_high > top_bin) {
                    throw InvalidSpecError("bandpower rule bins outside [0, t/2]");
                }
                require_finite(r.threshold, "threshold");
            }
            break;
        }
    }
}

std::unique_ptr<ClassifierOracle> make_oracle(const ModelSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case ModelSpec::Kind::linear:
            return std::make_unique<LinearModel>(spec);
        case ModelSpec::Kind::mlp:
            return std::make_unique<MlpModel>(spec);
        case ModelSpec::Kind::bandpower:
            return std::make_unique<BandpowerModel>(spec);
    }
    throw InvalidSpecError("unreachable model kind");
}

std::unique_ptr<ClassifierOracle> make_bandpower_oracle(const std::vector<BandRule>& rules,
                                                        std::size_t num_classes,
                                                        std::size_t input_length,
                                                        std::size_t input_channels, double gain) {
    ModelSpec spec;
    spec.kind = ModelSpec::Kind::bandpower;
    spec.num_classes = num_classes;
    spec.input_length = input_length;
    spec.input_channels = input_channels;
    spec.rules = rules;
    spec.gain = gain;
    return make_oracle(spec);
}

ModelSpec load_model_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open model file: " + path);
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("model file " + path + ": " + e.what());
    }

    ModelSpec spec;
    try {
        const std::string kind = doc.at("kind").get<std::string>();
        if (kind == "linear") {
            spec.kind = ModelSpec::Kind::linear;
        } else if (kind == "mlp") {
            spec.kind = ModelSpec::Kind::mlp;
        } else if (kind == "bandpower") {
            spec.kind = ModelSpec::Kind::bandpower;
        } else {
            throw ParseError("unknown model kind: " + kind);
        }
        spec.num_classes = doc.at("num_classes").get<std::size_t>();
        spec.input_length = doc.at("input_length").get<std::size_t>();
        spec.input_channels = doc.at("input_channels").get<std::size_t>();

        switch (spec.kind) {
            case ModelSpec::Kind::linear:
                spec.weights = doc.at("weights").get<std::vector<std::vector<double>>>();
                spec.bias = doc.at("bias").get<std::vector<double>>();
                break;
            case ModelSpec::Kind::mlp:
                for (const json& jl : doc.at("layers")) {
                    DenseLayer layer;
                    layer.weights = jl.at("weights").get<std::vector<std::vector<double>>>();
                    layer.bias = jl.at("bias").get<std::vector<double>>();
                    spec.layers.push_back(std::move(layer));
                }
                break;
            case ModelSpec::Kind::bandpower:
                for (const json& jr : doc.at("rules")) {
                    BandRule rule;
                    rule.target_class = jr.at("class").get<std::size_t>();
                    rule.channel = jr.value("channel", std::size_t{0});
                    rule.bin_low = jr.at("bin_low").get<std::size_t>();
                    rule.bin_high = jr.at("bin_high").get<std::size_t>();
                    rule.threshold = jr.at("threshold").get<double>();
                    spec.rules.push_back(rule);
                }
                spec.gain = doc.value("gain", 4.0);
                break;
        }
    } catch (const json::exception& e) {
        throw ParseError("model file " + path + ": " + e.what());
    }

    spec.validate();
    return spec;
}

std::unique_ptr<ClassifierOracle> load_model(const std::string& path) {
    return make_oracle(load_model_spec(path));
}

void save_model(const ModelSpec& spec, const std::string& path) {
    spec.validate();
    json doc;
    doc["num_classes"] = spec.num_classes;
    doc["input_length"] = spec.input_length;
    doc["input_channels"] = spec.input_channels;
    switch (spec.kind) {
        case ModelSpec::Kind::linear:
            doc["kind"] = "linear";
            doc["weights"] = spec.weights;
            doc["bias"] = spec.bias;
            break;
        case ModelSpec::Kind::mlp: {
            doc["kind"] = "mlp";
            json layers = json::array();
            for (const DenseLayer& l : spec.layers) layers.push_back(layer_to_json(l));
            doc["layers"] = layers;
            break;
        }
        case ModelSpec::Kind::bandpower: {
            doc["kind"] = "bandpower";
            json rules = json::array();
            for (const BandRule& r : spec.rules) {
                rules.push_back(json{{"class", r.target_class},
                                     {"channel", r.channel},
                                     {"bin_low", r.bin_low},
                                     {"bin_high", r.bin_high},
                                     {"threshold", r.threshold}});
            }
            doc["rules"] = rules;
            doc["gain"] = spec.gain;
            break;
        }
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write model file: " + path);
    }
    out << doc.dump(2) << "\n";
}

}  // namespace freqocc
