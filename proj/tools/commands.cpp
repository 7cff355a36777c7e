#include "commands.hpp"

#include "ics/errors.hpp"
#include "ics/grid_io.hpp"
#include "ics/run_config.hpp"
#include "ics/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace ics::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flag values are kept as text and go through the same parser as the
// config file, so both reject bad input with the same messages.
struct ConfigFlags {
    std::string config_path;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;

    void add(CLI::App& app, const std::string& flag, const std::string& key,
             const std::string& help) {
        options[key] = app.add_option(flag, values[key], help);
    }

    void add_detector(CLI::App& app) {
        app.add_option("--config", config_path,
                       "key = value config file (falls back to $ICS_CONFIG)");
        add(app, "--seed", "seed", "RNG seed");
        add(app, "--k0", "k0", "clusters in the first cycle");
        add(app, "--p", "p", "amplitude weight exponent");
        add(app, "--alpha-cutoff", "alpha_cutoff", "rejection factor cut-off");
        add(app, "--beta-c", "beta_c", "span decay fraction in (0, 1]");
        add(app, "--epsilon", "epsilon", "span amplitude half-band");
        add(app, "--bins", "bins", "histogram bins");
        add(app, "--significance", "significance", "trimmed-max significance level");
        add(app, "--max-cycles", "max_cycles", "upper bound on detection cycles");
        add(app, "--kmeans-max-iters", "kmeans_max_iters", "k-means iteration cap");
        add(app, "--kmeans-tol", "kmeans_tol", "k-means relative objective tolerance");
        add(app, "--span-reduce", "span_reduce", "median, max or mean");
        add(app, "--remnant-check", "remnant_check", "discard leftovers of deleted events (true/false)");
    }

    RunConfig resolve() const {
        RunConfig c;
        std::string path = config_path;
        if (path.empty()) {
            if (const char* env = std::getenv("ICS_CONFIG"); env != nullptr) path = env;
        }
        if (!path.empty()) c = load_run_config(path);
        for (const auto& [key, opt] : options) {
            if (opt->count() == 0) continue;
            try {
                apply_setting(c, key, values.at(key));
            } catch (const InvalidDataError& e) {
                throw UsageError(opt->get_name() + ": " + e.what());
            }
        }
        c.validate();
        return c;
    }
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        write_text_file(out_path, text);
    }
}

void make_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create directory '" + dir.string() + "'");
    }
}

std::string variant_of(const GroundTruth& truth) {
    return truth.noise.kind == NoiseKind::none ? "noisefree" : truth.noise.label();
}

struct SynthArgs {
    ConfigFlags flags;
    std::string preset;
    std::size_t events = 0;
    std::size_t images = 1;
    std::string dims = "128x128";
    std::string noise;
    std::string profile = "gaussian";
    std::string format = "ndgrid";
    std::string out;
};

void cmd_synth(const SynthArgs& a, std::ostream& out) {
    const RunConfig rc = a.flags.resolve();
    CorpusSpec spec;
    if (a.preset == "paper-140") {
        // the study layout as-is: 20 bases, 3 to 6 events, noisefree + 6 noise settings
    } else if (!a.preset.empty()) {
        throw UsageError("unknown preset '" + a.preset + "' (expected paper-140)");
    } else {
        spec.n_base = a.images;
        if (a.events > 0) spec.min_events = spec.max_events = a.events;
        try {
            spec.dims = parse_dims(a.dims);
        } catch (const InvalidDataError& e) {
            throw UsageError(std::string("--dims: ") + e.what());
        }
        spec.spacing.assign(spec.dims.size(), 1.0);
        const NoiseSpec noise = a.noise.empty() ? rc.noise : parse_noise_spec(a.noise);
        spec.noise_variants.clear();
        spec.include_noisefree = noise.kind == NoiseKind::none;
        if (!spec.include_noisefree) spec.noise_variants.push_back(noise);
    }
    spec.profile = parse_profile(a.profile);
    if (a.format != "ndgrid" && a.format != "csv") {
        throw UsageError("--format must be ndgrid or csv");
    }
    if (a.format == "csv" && spec.dims.size() != 2) {
        throw UsageError("--format csv needs 2D fields");
    }

    const std::uint64_t seed = rc.detector.rng_seed;
    const auto items = corpus(spec, seed);
    const fs::path dir = a.out;
    make_dir(dir);

    Json list = Json::array();
    for (const auto& item : items) {
        const std::string field_name = item.name + (a.format == "csv" ? ".csv" : ".ndg");
        const std::string truth_name = item.name + ".truth.json";
        write_field_file(dir / field_name, item.field);
        write_text_file(dir / truth_name, to_json(item.truth, field_name).dump(2) + "\n");
        list.push_back(Json{{"name", item.name},
                            {"variant", item.variant},
                            {"base_index", item.base_index},
                            {"n_events", item.truth.events.size()},
                            {"field", field_name},
                            {"truth", truth_name}});
    }
    const Json manifest{{"seed", seed},
                        {"preset", a.preset.empty() ? "custom" : a.preset},
                        {"count", items.size()},
                        {"items", std::move(list)}};
    const std::string text = manifest.dump(2) + "\n";
    write_text_file(dir / "manifest.json", text);
    out << text;
}

struct DetectArgs {
    ConfigFlags flags;
    std::string input;
    std::string out;
};

void cmd_detect(const DetectArgs& a, std::ostream& out) {
    const RunConfig rc = a.flags.resolve();
    const auto field = read_field_file(a.input);
    const auto report = detect(field, rc.detector);
    emit(to_json(report).dump(2) + "\n", a.out, out);
}

struct ScoreArgs {
    std::string report;
    std::string truth;
    std::string r_match;
    CLI::Option* r_match_opt = nullptr;
    std::string out;
};

void cmd_score(const ScoreArgs& a, std::ostream& out) {
    const auto report = report_from_json(read_json_file(a.report));
    const auto truth = truth_from_json(read_json_file(a.truth));
    std::optional<double> r_match;
    if (a.r_match_opt->count() > 0) {
        try {
            r_match = parse_double(a.r_match, "r_match");
        } catch (const InvalidDataError& e) {
            throw UsageError(std::string("--r-match: ") + e.what());
        }
        if (!(*r_match > 0.0)) throw UsageError("--r-match must be > 0");
    }
    const auto result = score(truth.events, report.events, r_match);
    Json j{{"seed", report.config.rng_seed}};
    j.update(to_json(result));
    emit(j.dump(2) + "\n", a.out, out);
}

std::vector<SweepInput> load_corpus_dir(const fs::path& dir, const std::string& variant) {
    if (!fs::is_directory(dir)) throw IoError("corpus directory '" + dir.string() + "' not found");
    std::vector<std::pair<std::string, fs::path>> truths;
    const fs::path manifest = dir / "manifest.json";
    if (fs::exists(manifest)) {
        const Json m = read_json_file(manifest);
        try {
            for (const auto& item : m.at("items")) {
                truths.emplace_back(item.at("name").get<std::string>(),
                                    dir / item.at("truth").get<std::string>());
            }
        } catch (const Json::exception& e) {
            throw InvalidDataError("malformed manifest: " + std::string(e.what()));
        }
    } else {
        for (const auto& entry : fs::directory_iterator(dir)) {
            const std::string name = entry.path().filename().string();
            const std::string suffix = ".truth.json";
            if (name.size() > suffix.size() &&
                name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
                truths.emplace_back(name.substr(0, name.size() - suffix.size()), entry.path());
            }
        }
        std::sort(truths.begin(), truths.end());
    }

    std::vector<SweepInput> inputs;
    for (const auto& [name, truth_path] : truths) {
        const Json tj = read_json_file(truth_path);
        GroundTruth truth = truth_from_json(tj);
        if (!variant.empty() && variant_of(truth) != variant) continue;
        if (!tj.contains("field")) {
            throw InvalidDataError("truth file '" + truth_path.string() + "' names no field");
        }
        auto field = read_field_file(dir / tj.at("field").get<std::string>());
        inputs.push_back({name, std::move(field), std::move(truth)});
    }
    if (inputs.empty()) {
        throw InvalidDataError("empty corpus: no items in '" + dir.string() + "'" +
                               (variant.empty() ? "" : " with variant '" + variant + "'"));
    }
    return inputs;
}

struct SweepArgs {
    ConfigFlags flags;
    std::string corpus;
    std::string variant;
    std::string out;
};

void cmd_sweep(const SweepArgs& a, std::ostream& out) {
    const RunConfig rc = a.flags.resolve();
    const auto inputs = load_corpus_dir(a.corpus, a.variant);
    SweepOptions opts;
    opts.axis = rc.axis;
    opts.values = rc.values;
    opts.repeats = rc.repeats;
    opts.seed = rc.detector.rng_seed;
    opts.jobs = rc.jobs;
    opts.r_match = rc.r_match;
    const auto result = sweep(inputs, rc.detector, opts);

    Json j = to_json(result);
    j["variant"] = a.variant.empty() ? "all" : a.variant;
    j["n_items"] = inputs.size();
    j["config"] = to_json(rc.detector);
    const std::string json_text = j.dump(2) + "\n";
    std::ostringstream csv;
    write_sweep_csv(csv, result);

    const fs::path dir = a.out;
    make_dir(dir);
    write_text_file(dir / "sweep.csv", csv.str());
    write_text_file(dir / "sweep.json", json_text);
    out << json_text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iterative clustering-based event detection"};
    app.name("ics");
    app.require_subcommand(1);
    std::function<void()> action;

    SynthArgs synth;
    auto* s = app.add_subcommand("synth", "generate synthetic benchmark fields");
    synth.flags.add_detector(*s);
    s->add_option("--preset", synth.preset, "named corpus layout (paper-140)");
    s->add_option("--events", synth.events, "events per image (default 3 to 6 at random)");
    s->add_option("--images", synth.images, "number of base images")->check(CLI::PositiveNumber);
    s->add_option("--dims", synth.dims, "grid size such as 128x128 or 64x64x64");
    s->add_option("--noise", synth.noise,
                  "none | uniform:amp=A | gaussian:mu=M,sigma=S | sinusoidal:amp=A,wavelength=W");
    s->add_option("--profile", synth.profile, "gaussian or linear");
    s->add_option("--format", synth.format, "ndgrid or csv");
    s->add_option("--out", synth.out, "output directory")->required();
    s->callback([&] { action = [&] { cmd_synth(synth, out); }; });

    DetectArgs det;
    auto* d = app.add_subcommand("detect", "detect events in a field file");
    det.flags.add_detector(*d);
    d->add_option("input", det.input, "field file (.ndg or .csv)")->required();
    d->add_option("--out", det.out, "report path (default stdout)");
    d->callback([&] { action = [&] { cmd_detect(det, out); }; });

    ScoreArgs sc;
    auto* c = app.add_subcommand("score", "score a detection report against ground truth");
    c->add_option("--report", sc.report, "report JSON")->required();
    c->add_option("--truth", sc.truth, "truth JSON")->required();
    sc.r_match_opt = c->add_option("--r-match", sc.r_match, "match radius (default largest sigma)");
    c->add_option("--out", sc.out, "score path (default stdout)");
    c->callback([&] { action = [&] { cmd_score(sc, out); }; });

    SweepArgs sw;
    auto* w = app.add_subcommand("sweep", "accuracy sweep over one hyperparameter");
    sw.flags.add_detector(*w);
    sw.flags.add(*w, "--axis", "axis", "nc_ratio, k0, p, alpha_cutoff, beta_c or epsilon");
    sw.flags.add(*w, "--values", "values", "comma-separated axis values");
    sw.flags.add(*w, "--repeats", "repeats", "runs per item and value");
    sw.flags.add(*w, "--jobs", "jobs", "worker threads");
    sw.flags.add(*w, "--r-match", "r_match", "match radius");
    w->add_option("--corpus", sw.corpus, "directory written by synth")->required();
    w->add_option("--variant", sw.variant, "only items of this variant, e.g. noisefree");
    w->add_option("--out", sw.out, "output directory for sweep.csv and sweep.json")->required();
    w->callback([&] { action = [&] { cmd_sweep(sw, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    try {
        action();
        return ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return io;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return invalid_data;
    }
}

}  // namespace ics::cli
