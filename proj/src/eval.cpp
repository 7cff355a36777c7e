#include "ics/eval.hpp"

#include "ics/errors.hpp"
#include "ics/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace ics {

ScoreResult score(const std::vector<EventSpec>& truth,
                  const std::vector<std::vector<double>>& detections,
                  std::optional<double> r_match) {
    if (truth.empty()) throw InvalidDataError("no ground truth");
    double radius = 0.0;
    if (r_match) {
        radius = *r_match;
    } else {
        for (const auto& t : truth) radius = std::max(radius, t.sigma);
    }
    if (!(radius > 0.0)) throw InvalidDataError("r_match must be > 0");

    ScoreResult res;
    res.n_true = truth.size();
    res.n_detected = detections.size();
    res.r_match = radius;
    std::vector<char> claimed(truth.size(), 0);
    for (std::size_t d = 0; d < detections.size(); ++d) {
        std::size_t best = truth.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < truth.size(); ++t) {
            if (claimed[t]) continue;
            if (truth[t].source.size() != detections[d].size()) {
                throw InvalidDataError("detection and truth dimensions differ");
            }
            const double dist = distance(truth[t].source, detections[d]);
            if (dist <= radius && dist < best_dist) {
                best = t;
                best_dist = dist;
            }
        }
        if (best < truth.size()) {
            claimed[best] = 1;
            res.pairs.push_back({best, d, best_dist});
        }
    }
    res.matched = res.pairs.size();
    res.accuracy = static_cast<double>(res.matched) / static_cast<double>(res.n_true);
    res.false_positives = res.n_detected - res.matched;
    return res;
}

ScoreResult score(const std::vector<EventSpec>& truth, const std::vector<DetectedEvent>& detections,
                  std::optional<double> r_match) {
    std::vector<std::vector<double>> peaks;
    peaks.reserve(detections.size());
    for (const auto& d : detections) peaks.push_back(d.peak);
    return score(truth, peaks, r_match);
}

SweepAxis parse_sweep_axis(std::string_view name) {
    if (name == "nc_ratio") return SweepAxis::nc_ratio;
    if (name == "k0") return SweepAxis::k0;
    if (name == "p") return SweepAxis::p;
    if (name == "alpha_cutoff") return SweepAxis::alpha_cutoff;
    if (name == "beta_c") return SweepAxis::beta_c;
    if (name == "epsilon") return SweepAxis::epsilon;
    throw InvalidDataError("unknown sweep axis '" + std::string(name) + "'");
}

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::nc_ratio: return "nc_ratio";
        case SweepAxis::k0: return "k0";
        case SweepAxis::p: return "p";
        case SweepAxis::alpha_cutoff: return "alpha_cutoff";
        case SweepAxis::beta_c: return "beta_c";
        case SweepAxis::epsilon: return "epsilon";
    }
    return "nc_ratio";
}

IcsConfig apply_axis(IcsConfig config, SweepAxis axis, double value, std::size_t n_events) {
    switch (axis) {
        case SweepAxis::nc_ratio:
            config.k0 = static_cast<std::size_t>(
                std::max(1L, std::lround(value * static_cast<double>(n_events))));
            break;
        case SweepAxis::k0:
            config.k0 = static_cast<std::size_t>(std::max(1L, std::lround(value)));
            break;
        case SweepAxis::p: config.p = value; break;
        case SweepAxis::alpha_cutoff: config.alpha_cutoff = value; break;
        case SweepAxis::beta_c: config.beta_c = value; break;
        case SweepAxis::epsilon: config.epsilon = value; break;
    }
    return config;
}

std::uint64_t sweep_run_seed(std::uint64_t seed, std::size_t repeat, std::size_t item) {
    return derive_seed(derive_seed(seed, repeat), item);
}

SweepResult sweep(const std::vector<SweepInput>& items, const IcsConfig& config_template,
                  const SweepOptions& options) {
    if (items.empty()) throw InvalidDataError("empty corpus");
    if (options.values.empty()) throw InvalidDataError("sweep needs at least one axis value");
    if (options.repeats == 0) throw InvalidDataError("sweep repeats must be >= 1");

    const std::size_t n_runs_per_value = items.size() * options.repeats;
    const std::size_t total = options.values.size() * n_runs_per_value;
    // accuracy per (value, repeat, item); NaN marks a failed run
    std::vector<double> acc(total, std::numeric_limits<double>::quiet_NaN());

    auto run_one = [&](std::size_t flat) {
        const std::size_t v = flat / n_runs_per_value;
        const std::size_t rest = flat % n_runs_per_value;
        const std::size_t rep = rest / items.size();
        const std::size_t it = rest % items.size();
        const auto& item = items[it];
        try {
            IcsConfig cfg = apply_axis(config_template, options.axis, options.values[v],
                                       item.truth.events.size());
            cfg.rng_seed = sweep_run_seed(options.seed, rep, it);
            const auto report = detect(item.field, cfg);
            acc[flat] = score(item.truth.events, report.events, options.r_match).accuracy;
        } catch (const Error&) {
            // counted as an error below
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, total));
    if (jobs == 1) {
        for (std::size_t i = 0; i < total; ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < total; i = next++) run_one(i);
            });
        }
    }

    SweepResult res;
    res.axis = options.axis;
    res.seed = options.seed;
    res.repeats = options.repeats;
    for (std::size_t v = 0; v < options.values.size(); ++v) {
        SweepRow row;
        row.value = options.values[v];
        double sum = 0.0;
        for (std::size_t i = 0; i < n_runs_per_value; ++i) {
            const double a = acc[v * n_runs_per_value + i];
            if (std::isnan(a)) {
                ++row.n_errors;
                continue;
            }
            sum += a;
            ++row.n_runs;
        }
        if (row.n_runs > 0) {
            row.mean_accuracy = sum / static_cast<double>(row.n_runs);
            double ss = 0.0;
            for (std::size_t i = 0; i < n_runs_per_value; ++i) {
                const double a = acc[v * n_runs_per_value + i];
                if (!std::isnan(a)) ss += (a - row.mean_accuracy) * (a - row.mean_accuracy);
            }
            row.std_accuracy =
                row.n_runs > 1 ? std::sqrt(ss / static_cast<double>(row.n_runs - 1)) : 0.0;
        }
        res.rows.push_back(row);
    }
    return res;
}

std::vector<SweepInput> to_sweep_inputs(const std::vector<CorpusItem>& items) {
    std::vector<SweepInput> out;
    out.reserve(items.size());
    for (const auto& it : items) out.push_back({it.name, it.field, it.truth});
    return out;
}

}  // namespace ics
