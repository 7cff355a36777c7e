#include "ics/serialize.hpp"

#include "ics/errors.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ics {

namespace {

std::string_view to_string(CycleOutcome o) {
    switch (o) {
        case CycleOutcome::accepted: return "accepted";
        case CycleOutcome::discarded: return "discarded";
        case CycleOutcome::no_survivors: return "no_survivors";
    }
    return "no_survivors";
}

CycleOutcome parse_outcome(const std::string& s) {
    if (s == "accepted") return CycleOutcome::accepted;
    if (s == "discarded") return CycleOutcome::discarded;
    if (s == "no_survivors") return CycleOutcome::no_survivors;
    throw InvalidDataError("unknown cycle outcome '" + s + "'");
}

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

// nlohmann throws its own exception types; surface them as data errors
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidDataError(std::string("malformed ") + what + ": " + e.what());
    }
}

}  // namespace

Json to_json(const IcsConfig& c) {
    return Json{{"k0", c.k0},
                {"p", c.p},
                {"alpha_cutoff", c.alpha_cutoff},
                {"beta_c", c.beta_c},
                {"epsilon", c.epsilon},
                {"bins", c.bins},
                {"significance", c.significance},
                {"kmeans_max_iters", c.kmeans_max_iters},
                {"kmeans_tol", c.kmeans_tol},
                {"max_cycles", c.max_cycles},
                {"seed", c.rng_seed},
                {"span_reduce", std::string(to_string(c.span_reduce))},
                {"remnant_check", c.remnant_check}};
}

IcsConfig config_from_json(const Json& j) {
    return guarded("config", [&] {
        IcsConfig c;
        c.k0 = j.value("k0", c.k0);
        c.p = j.value("p", c.p);
        c.alpha_cutoff = j.value("alpha_cutoff", c.alpha_cutoff);
        c.beta_c = j.value("beta_c", c.beta_c);
        c.epsilon = j.value("epsilon", c.epsilon);
        c.bins = j.value("bins", c.bins);
        c.significance = j.value("significance", c.significance);
        c.kmeans_max_iters = j.value("kmeans_max_iters", c.kmeans_max_iters);
        c.kmeans_tol = j.value("kmeans_tol", c.kmeans_tol);
        c.max_cycles = j.value("max_cycles", c.max_cycles);
        c.rng_seed = j.value("seed", c.rng_seed);
        c.span_reduce = parse_span_reduce(j.value("span_reduce", std::string("median")));
        c.remnant_check = j.value("remnant_check", c.remnant_check);
        return c;
    });
}

Json to_json(const DetectedEvent& ev) {
    return Json{{"peak", ev.peak},         {"centroid", ev.centroid}, {"strength", ev.strength},
                {"span", ev.span},         {"cycle", ev.cycle},       {"alpha", ev.alpha},
                {"n_points", ev.n_points}};
}

Json to_json(const DetectionReport& r) {
    Json events = Json::array();
    for (const auto& ev : r.events) events.push_back(to_json(ev));
    Json diags = Json::array();
    for (const auto& d : r.diagnostics) {
        diags.push_back(Json{{"cycle", d.cycle},
                             {"clusters", d.clusters},
                             {"points_before", d.points_before},
                             {"survivors", d.survivors},
                             {"merges", d.merges},
                             {"kmeans_iterations", d.kmeans_iterations},
                             {"outcome", std::string(to_string(d.outcome))},
                             {"alphas", d.alphas},
                             {"selected_peak", d.selected_peak},
                             {"selected_strength", d.selected_strength},
                             {"selected_span", d.selected_span}});
    }
    return Json{{"config", to_json(r.config)},
                {"seed", r.config.rng_seed},
                {"cycles_run", r.cycles_run},
                {"events", std::move(events)},
                {"diagnostics", std::move(diags)}};
}

DetectionReport report_from_json(const Json& j) {
    return guarded("report", [&] {
        DetectionReport r;
        if (j.contains("config")) r.config = config_from_json(j.at("config"));
        r.cycles_run = j.value("cycles_run", std::size_t{0});
        for (const auto& e : j.at("events")) {
            DetectedEvent ev;
            ev.peak = e.at("peak").get<std::vector<double>>();
            ev.centroid = e.value("centroid", std::vector<double>{});
            ev.strength = e.value("strength", 0.0);
            ev.span = e.value("span", 0.0);
            ev.cycle = e.value("cycle", std::size_t{0});
            ev.alpha = e.value("alpha", 0.0);
            ev.n_points = e.value("n_points", std::size_t{0});
            r.events.push_back(std::move(ev));
        }
        if (j.contains("diagnostics")) {
            for (const auto& d : j.at("diagnostics")) {
                CycleDiagnostics cd;
                cd.cycle = d.at("cycle").get<std::size_t>();
                cd.clusters = d.at("clusters").get<std::size_t>();
                cd.points_before = d.at("points_before").get<std::size_t>();
                cd.survivors = d.at("survivors").get<std::size_t>();
                cd.merges = d.at("merges").get<std::size_t>();
                cd.kmeans_iterations = d.value("kmeans_iterations", std::size_t{0});
                cd.outcome = parse_outcome(d.at("outcome").get<std::string>());
                cd.alphas = d.at("alphas").get<std::vector<double>>();
                cd.selected_peak = d.value("selected_peak", std::vector<double>{});
                cd.selected_strength = d.value("selected_strength", 0.0);
                cd.selected_span = d.value("selected_span", 0.0);
                r.diagnostics.push_back(std::move(cd));
            }
        }
        return r;
    });
}

Json to_json(const NoiseSpec& n) {
    return Json{{"kind", std::string(to_string(n.kind))},
                {"amp", n.amp},
                {"mu", n.mu},
                {"sigma", n.sigma},
                {"wavelength", n.wavelength}};
}

NoiseSpec noise_from_json(const Json& j) {
    return guarded("noise spec", [&] {
        NoiseSpec n;
        n.kind = parse_noise_kind(j.value("kind", std::string("none")));
        n.amp = j.value("amp", 0.0);
        n.mu = j.value("mu", 0.0);
        n.sigma = j.value("sigma", 0.0);
        n.wavelength = j.value("wavelength", 1.0);
        return n;
    });
}

Json to_json(const GroundTruth& t, const std::string& field_file) {
    Json events = Json::array();
    for (const auto& e : t.events) {
        events.push_back(Json{{"source", e.source},
                              {"amplitude", e.amplitude},
                              {"sigma", e.sigma},
                              {"profile", std::string(to_string(e.profile))}});
    }
    Json j{{"events", std::move(events)}, {"noise", to_json(t.noise)}, {"seed", t.seed}};
    if (!field_file.empty()) j["field"] = field_file;
    return j;
}

GroundTruth truth_from_json(const Json& j) {
    return guarded("truth", [&] {
        GroundTruth t;
        for (const auto& e : j.at("events")) {
            EventSpec ev;
            ev.source = e.at("source").get<std::vector<double>>();
            ev.amplitude = e.value("amplitude", 1.0);
            ev.sigma = e.at("sigma").get<double>();
            ev.profile = parse_profile(e.value("profile", std::string("gaussian")));
            t.events.push_back(std::move(ev));
        }
        if (j.contains("noise")) t.noise = noise_from_json(j.at("noise"));
        t.seed = j.value("seed", std::uint64_t{0});
        return t;
    });
}

Json to_json(const ScoreResult& s) {
    Json pairs = Json::array();
    for (const auto& p : s.pairs) {
        pairs.push_back(Json{{"truth", p.truth}, {"detection", p.detection}, {"distance", p.distance}});
    }
    return Json{{"matched", s.matched},
                {"n_true", s.n_true},
                {"n_detected", s.n_detected},
                {"accuracy", s.accuracy},
                {"false_positives", s.false_positives},
                {"r_match", s.r_match},
                {"pairs", std::move(pairs)}};
}

Json to_json(const SweepResult& s) {
    Json rows = Json::array();
    for (const auto& r : s.rows) {
        rows.push_back(Json{{"axis_value", r.value},
                            {"mean_accuracy", r.mean_accuracy},
                            {"std_accuracy", r.std_accuracy},
                            {"n_runs", r.n_runs},
                            {"n_errors", r.n_errors}});
    }
    return Json{{"axis", std::string(to_string(s.axis))},
                {"seed", s.seed},
                {"repeats", s.repeats},
                {"rows", std::move(rows)}};
}

void write_sweep_csv(std::ostream& out, const SweepResult& s) {
    out << "axis_value,mean_accuracy,std_accuracy,n_runs,seed\n";
    for (const auto& r : s.rows) {
        out << format_double(r.value) << ',' << format_double(r.mean_accuracy) << ','
            << format_double(r.std_accuracy) << ',' << r.n_runs << ',' << s.seed << '\n';
    }
}

SweepResult read_sweep_csv(std::istream& in) {
    SweepResult s;
    std::string line;
    if (!std::getline(in, line) || line.rfind("axis_value,", 0) != 0) {
        throw InvalidDataError("sweep CSV missing header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 5) throw InvalidDataError("sweep CSV row needs 5 columns");
        SweepRow row;
        try {
            row.value = std::stod(cells[0]);
            row.mean_accuracy = std::stod(cells[1]);
            row.std_accuracy = std::stod(cells[2]);
            row.n_runs = std::stoull(cells[3]);
            s.seed = std::stoull(cells[4]);
        } catch (const std::exception&) {
            throw InvalidDataError("sweep CSV row has a bad number: " + line);
        }
        s.rows.push_back(row);
    }
    return s;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidDataError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace ics
