#include "ics/synth.hpp"

#include "ics/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ics {

Profile parse_profile(std::string_view name) {
    if (name == "gaussian") return Profile::gaussian;
    if (name == "linear") return Profile::linear;
    throw InvalidDataError("unknown event profile '" + std::string(name) + "'");
}

std::string_view to_string(Profile p) {
    return p == Profile::linear ? "linear" : "gaussian";
}

NoiseKind parse_noise_kind(std::string_view name) {
    if (name == "none") return NoiseKind::none;
    if (name == "uniform") return NoiseKind::uniform;
    if (name == "gaussian") return NoiseKind::gaussian;
    if (name == "sinusoidal" || name == "periodic") return NoiseKind::sinusoidal;
    throw InvalidDataError("unknown noise kind '" + std::string(name) + "'");
}

std::string_view to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::none: return "none";
        case NoiseKind::uniform: return "uniform";
        case NoiseKind::gaussian: return "gaussian";
        case NoiseKind::sinusoidal: return "sinusoidal";
    }
    return "none";
}

double EventSpec::contribution(std::span<const double> x) const {
    const double r2 = squared_distance(x, source);
    if (profile == Profile::gaussian) return amplitude * std::exp(-r2 / (2.0 * sigma * sigma));
    return amplitude * std::max(0.0, 1.0 - std::sqrt(r2) / (3.0 * sigma));
}

void NoiseSpec::validate() const {
    if (!(amp >= 0.0) || !(mu >= 0.0) || !(sigma >= 0.0)) {
        throw InvalidDataError("noise amp, mu and sigma must be >= 0");
    }
    if (kind == NoiseKind::sinusoidal && !(wavelength > 0.0)) {
        throw InvalidDataError("sinusoidal noise needs wavelength > 0");
    }
}

std::string NoiseSpec::label() const {
    std::ostringstream os;
    os << to_string(kind);
    switch (kind) {
        case NoiseKind::none: break;
        case NoiseKind::uniform: os << "-amp" << amp; break;
        case NoiseKind::gaussian: os << "-mu" << mu << "-sigma" << sigma; break;
        case NoiseKind::sinusoidal: os << "-amp" << amp << "-lambda" << wavelength; break;
    }
    return os.str();
}

std::vector<double> axis_extents(std::span<const std::size_t> dims,
                                 std::span<const double> spacing) {
    std::vector<double> ext(dims.size());
    for (std::size_t a = 0; a < dims.size(); ++a) {
        ext[a] = static_cast<double>(dims[a] - 1) * spacing[a];
    }
    return ext;
}

SyntheticField generate(std::vector<std::size_t> dims, std::vector<double> spacing,
                        std::vector<EventSpec> events, const NoiseSpec& noise,
                        std::uint64_t rng_seed) {
    SyntheticField out;
    out.field.dims = std::move(dims);
    out.field.spacing = std::move(spacing);
    std::size_t n = 1;
    for (auto d : out.field.dims) n *= d;
    out.field.values.assign(n, 0.0);
    out.field.validate();
    noise.validate();

    const std::size_t nd = out.field.ndim();
    const auto ext = axis_extents(out.field.dims, out.field.spacing);
    for (const auto& ev : events) {
        if (ev.source.size() != nd) throw InvalidDataError("event source has wrong dimension");
        if (!(ev.sigma > 0.0) || !(ev.amplitude > 0.0)) {
            throw InvalidDataError("event sigma and amplitude must be > 0");
        }
        for (std::size_t a = 0; a < nd; ++a) {
            if (ev.source[a] < 0.0 || ev.source[a] > ext[a]) {
                throw InvalidDataError("event source outside the field extents");
            }
        }
    }

    // noise levels are relative to the strongest event; a field without events uses 1
    double a_max = 1.0;
    if (!events.empty()) {
        a_max = std::max_element(events.begin(), events.end(), [](const auto& l, const auto& r) {
                    return l.amplitude < r.amplitude;
                })->amplitude;
    }

    double diag = 0.0;
    for (double e : ext) diag += e * e;
    diag = std::sqrt(diag);
    std::vector<double> unit(nd, 0.0);
    if (diag > 0.0) {
        for (std::size_t a = 0; a < nd; ++a) unit[a] = ext[a] / diag;
    } else if (noise.kind == NoiseKind::sinusoidal) {
        throw InvalidDataError("sinusoidal noise needs a field with nonzero extent");
    }
    const double lambda = noise.wavelength * diag;

    Rng rng(rng_seed);
    std::uniform_real_distribution<double> uniform(0.0, noise.amp * a_max);
    std::normal_distribution<double> normal(noise.mu * a_max,
                                            std::max(noise.sigma * a_max, 1e-300));

    std::vector<double> x(nd);
    std::vector<std::size_t> idx(nd, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < nd; ++a) x[a] = static_cast<double>(idx[a]) * out.field.spacing[a];

        double v = 0.0;
        for (const auto& ev : events) v += ev.contribution(x);

        switch (noise.kind) {
            case NoiseKind::none: break;
            case NoiseKind::uniform: v += uniform(rng); break;
            case NoiseKind::gaussian:
                v += noise.sigma > 0.0 ? std::max(0.0, normal(rng)) : noise.mu * a_max;
                break;
            case NoiseKind::sinusoidal: {
                double proj = 0.0;
                for (std::size_t a = 0; a < nd; ++a) proj += x[a] * unit[a];
                v += noise.amp * a_max *
                     (1.0 + std::sin(2.0 * std::numbers::pi * proj / lambda)) / 2.0;
                break;
            }
        }
        out.field.values[i] = v;

        for (std::size_t a = nd; a-- > 0;) {
            if (++idx[a] < out.field.dims[a]) break;
            idx[a] = 0;
        }
    }

    out.truth.events = std::move(events);
    out.truth.noise = noise;
    out.truth.seed = rng_seed;
    return out;
}

std::vector<NoiseSpec> CorpusSpec::default_noise_variants() {
    return {
        {NoiseKind::gaussian, 0.0, 0.05, 0.05, 1.0},
        {NoiseKind::gaussian, 0.0, 0.1, 0.1, 1.0},
        {NoiseKind::gaussian, 0.0, 0.1, 0.2, 1.0},
        {NoiseKind::sinusoidal, 1.0, 0.0, 0.0, 0.5},
        {NoiseKind::sinusoidal, 1.0, 0.0, 0.0, 1.0},
        {NoiseKind::sinusoidal, 0.25, 0.0, 0.0, 1.0},
    };
}

void CorpusSpec::validate() const {
    if (n_base == 0) throw InvalidDataError("corpus needs at least one base image");
    if (min_events == 0 || min_events > max_events) {
        throw InvalidDataError("corpus event count range is invalid");
    }
    if (dims.empty() || dims.size() > kMaxDims || spacing.size() != dims.size()) {
        throw InvalidDataError("corpus dims/spacing are invalid");
    }
    if (!(amp_min > 0.0) || amp_min > amp_max) throw InvalidDataError("bad amplitude range");
    if (!(sigma_min > 0.0) || sigma_min > sigma_max) throw InvalidDataError("bad sigma range");
    if (!include_noisefree && noise_variants.empty()) {
        throw InvalidDataError("corpus has no variants to generate");
    }
    for (const auto& nv : noise_variants) nv.validate();
}

std::vector<EventSpec> place_events(const CorpusSpec& spec, std::size_t n_events, Rng& rng) {
    const auto ext = axis_extents(spec.dims, spec.spacing);
    std::uniform_real_distribution<double> amp_dist(spec.amp_min, spec.amp_max);
    std::uniform_real_distribution<double> sigma_dist(spec.sigma_min, spec.sigma_max);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    constexpr std::size_t kRestarts = 50;
    for (std::size_t restart = 0; restart < kRestarts; ++restart) {
        std::vector<EventSpec> events;
        bool failed = false;
        for (std::size_t e = 0; e < n_events && !failed; ++e) {
            EventSpec ev;
            ev.amplitude = amp_dist(rng);
            ev.sigma = sigma_dist(rng);
            ev.profile = spec.profile;
            ev.source.resize(ext.size());
            bool placed = false;
            for (std::size_t attempt = 0; attempt < spec.max_placement_retries; ++attempt) {
                bool inside = true;
                for (std::size_t a = 0; a < ext.size(); ++a) {
                    const double lo = ev.sigma;
                    const double hi = ext[a] - ev.sigma;
                    if (hi < lo) {
                        inside = false;
                        break;
                    }
                    // snap to the grid so the peak sits on a sample
                    const double raw = lo + unit(rng) * (hi - lo);
                    ev.source[a] = std::clamp(std::round(raw / spec.spacing[a]) * spec.spacing[a],
                                              0.0, ext[a]);
                }
                if (!inside) break;
                const bool clear = std::all_of(events.begin(), events.end(), [&](const auto& o) {
                    return distance(o.source, ev.source) >= 3.0 * (o.sigma + ev.sigma);
                });
                if (clear) {
                    placed = true;
                    break;
                }
            }
            if (placed) {
                events.push_back(std::move(ev));
            } else {
                failed = true;
            }
        }
        if (!failed) return events;
    }
    throw InvalidDataError("cannot place " + std::to_string(n_events) +
                           " non-overlapping events in the field");
}

std::vector<CorpusItem> corpus(const CorpusSpec& spec, std::uint64_t seed) {
    spec.validate();
    std::vector<CorpusItem> items;
    for (std::size_t b = 0; b < spec.n_base; ++b) {
        const std::uint64_t base_seed = derive_seed(seed, b);
        Rng rng(base_seed);
        const std::size_t n_events = std::uniform_int_distribution<std::size_t>(
            spec.min_events, spec.max_events)(rng);
        const auto events = place_events(spec, n_events, rng);

        auto emit = [&](const NoiseSpec& noise, std::string variant, std::uint64_t noise_seed) {
            auto sf = generate(spec.dims, spec.spacing, events, noise, noise_seed);
            CorpusItem item;
            item.base_index = b;
            item.variant = std::move(variant);
            std::ostringstream name;
            name << "img" << (b < 10 ? "0" : "") << b << "_" << item.variant;
            item.name = name.str();
            item.field = std::move(sf.field);
            item.truth = std::move(sf.truth);
            items.push_back(std::move(item));
        };

        if (spec.include_noisefree) emit(NoiseSpec{}, "noisefree", base_seed);
        for (std::size_t v = 0; v < spec.noise_variants.size(); ++v) {
            const auto& nv = spec.noise_variants[v];
            emit(nv, nv.label(), derive_seed(base_seed, v + 1));
        }
    }
    return items;
}

}  // namespace ics
