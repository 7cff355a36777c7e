#include "ics/run_config.hpp"

#include "ics/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

namespace ics {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::size_t parse_size(std::string_view text, std::string_view what) {
    return static_cast<std::size_t>(parse_u64(text, what));
}

[[noreturn]] void bad_value(std::string_view what, std::string_view text) {
    throw InvalidDataError("bad value for " + std::string(what) + ": '" + std::string(text) + "'");
}

}  // namespace

double parse_double(std::string_view text, std::string_view what) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        bad_value(what, text);
    }
    return v;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    text = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) bad_value(what, text);
    return v;
}

bool parse_bool(std::string_view text, std::string_view what) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "on" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "off" || text == "no") return false;
    bad_value(what, text);
}

std::vector<double> parse_value_list(std::string_view text) {
    std::vector<double> out;
    for (auto part : split(text, ',')) out.push_back(parse_double(part, "values"));
    return out;
}

std::vector<std::size_t> parse_dims(std::string_view text) {
    std::vector<std::size_t> dims;
    for (auto part : split(trim(text), 'x')) {
        const auto n = parse_size(part, "dims");
        if (n == 0) bad_value("dims", text);
        dims.push_back(n);
    }
    return dims;
}

NoiseSpec parse_noise_spec(std::string_view text) {
    text = trim(text);
    NoiseSpec n;
    const std::size_t colon = text.find(':');
    n.kind = parse_noise_kind(trim(text.substr(0, colon)));
    if (colon != std::string_view::npos) {
        for (auto item : split(text.substr(colon + 1), ',')) {
            if (item.empty()) continue;
            const std::size_t eq = item.find('=');
            if (eq == std::string_view::npos) bad_value("noise", text);
            const auto key = trim(item.substr(0, eq));
            const double v = parse_double(item.substr(eq + 1), "noise");
            if (key == "amp") {
                n.amp = v;
            } else if (key == "mu") {
                n.mu = v;
            } else if (key == "sigma") {
                n.sigma = v;
            } else if (key == "wavelength" || key == "lambda") {
                n.wavelength = v;
            } else {
                throw InvalidDataError("unknown noise parameter '" + std::string(key) + "'");
            }
        }
    }
    n.validate();
    return n;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
    auto& d = c.detector;
    if (key == "k0") {
        d.k0 = parse_size(value, key);
    } else if (key == "p") {
        d.p = parse_double(value, key);
    } else if (key == "alpha_cutoff") {
        d.alpha_cutoff = parse_double(value, key);
    } else if (key == "beta_c") {
        d.beta_c = parse_double(value, key);
    } else if (key == "epsilon") {
        d.epsilon = parse_double(value, key);
    } else if (key == "bins") {
        d.bins = parse_size(value, key);
    } else if (key == "significance") {
        d.significance = parse_double(value, key);
    } else if (key == "kmeans_max_iters") {
        d.kmeans_max_iters = parse_size(value, key);
    } else if (key == "kmeans_tol") {
        d.kmeans_tol = parse_double(value, key);
    } else if (key == "max_cycles") {
        d.max_cycles = parse_size(value, key);
    } else if (key == "seed") {
        d.rng_seed = parse_u64(value, key);
    } else if (key == "span_reduce") {
        d.span_reduce = parse_span_reduce(trim(value));
    } else if (key == "remnant_check") {
        d.remnant_check = parse_bool(value, key);
    } else if (key == "noise") {
        c.noise.kind = parse_noise_kind(trim(value));
    } else if (key == "noise_amp") {
        c.noise.amp = parse_double(value, key);
    } else if (key == "noise_mu") {
        c.noise.mu = parse_double(value, key);
    } else if (key == "noise_sigma") {
        c.noise.sigma = parse_double(value, key);
    } else if (key == "noise_wavelength") {
        c.noise.wavelength = parse_double(value, key);
    } else if (key == "axis") {
        c.axis = parse_sweep_axis(trim(value));
    } else if (key == "values") {
        c.values = parse_value_list(value);
    } else if (key == "repeats") {
        c.repeats = parse_size(value, key);
    } else if (key == "jobs") {
        c.jobs = parse_size(value, key);
    } else if (key == "r_match") {
        c.r_match = parse_double(value, key);
    } else {
        throw InvalidDataError("unknown config key '" + std::string(key) + "'");
    }
}

void RunConfig::validate() const {
    detector.validate();
    noise.validate();
    if (values.empty()) throw InvalidDataError("invalid config: values must not be empty");
    if (repeats < 1) throw InvalidDataError("invalid config: repeats must be >= 1");
    if (jobs < 1) throw InvalidDataError("invalid config: jobs must be >= 1");
    if (r_match && !(*r_match > 0.0)) throw InvalidDataError("invalid config: r_match must be > 0");
}

RunConfig parse_run_config(std::istream& in, const std::string& origin) {
    RunConfig c;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        const auto where = origin + ":" + std::to_string(line_no) + ": ";
        if (eq == std::string_view::npos) {
            throw InvalidDataError(where + "expected key = value");
        }
        try {
            apply_setting(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const InvalidDataError& e) {
            throw InvalidDataError(where + e.what());
        }
    }
    try {
        c.validate();
    } catch (const InvalidDataError& e) {
        throw InvalidDataError(origin + ": " + e.what());
    }
    return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path.string() + "'");
    return parse_run_config(in, path.string());
}

}  // namespace ics
