#include "centerpole/cli_commands.hpp"

#include <algorithm>
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace centerpole::cli {

namespace {

template <typename T>
T require(const Json& config, const char* key) {
    if (!config.contains(key) || config[key].is_null()) throw UsageError(std::string("missing parameter '") + key + "'");
    try {
        return config[key].get<T>();
    } catch (const nlohmann::json::exception&) {
        throw UsageError(std::string("parameter '") + key + "' has the wrong type");
    }
}

template <typename T>
T optional_value(const Json& config, const char* key, T fallback) {
    if (!config.contains(key) || config[key].is_null()) return fallback;
    try {
        return config[key].get<T>();
    } catch (const nlohmann::json::exception&) {
        throw UsageError(std::string("parameter '") + key + "' has the wrong type");
    }
}

std::string point_text(const LatticePoint& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

Json header(const char* command, const Json& config) {
    return Json{{"command", command}, {"config", config}, {"seed", config.contains("seed") ? config["seed"] : Json()}};
}

CommandOutput json_output(Json doc, int exit_code) {
    CommandOutput out;
    out.exit_code = exit_code;
    out.text = doc.dump(2) + "\n";
    out.document = std::move(doc);
    return out;
}

ColoringRule base_cone(std::size_t d, int colors) {
    if (d < 1) throw UsageError("dim must be at least 1");
    ColoringRule cone = cone_coloring(standard_simplex(d));
    if (colors <= cone.colors()) return cone;
    return widen_palette(cone, colors);
}

}  // namespace

Json load_point_document(const std::string& spec) {
    static const std::regex sandwich_re(R"(\s*sandwich\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(spec, m, sandwich_re)) {
        const int k = std::stoi(m[1].str());
        const std::int64_t s = std::stoll(m[2].str());
        if (k < 0 || k > 20) throw UsageError("sandwich shorthand needs 0 <= k <= 20");
        return to_json(build_sandwich(k, s).points());
    }
    Json doc;
    const auto first = spec.find_first_not_of(" \t\n");
    if (first != std::string::npos && (spec[first] == '[' || spec[first] == '{')) {
        doc = Json::parse(spec);
    } else {
        std::ifstream in(spec);
        if (!in) throw UsageError("cannot open point file '" + spec + "'");
        doc = Json::parse(in);
    }
    if (doc.is_object()) {
        if (!doc.contains("points")) throw UsageError("point document has no \"points\" array");
        doc = doc["points"];
    }
    if (!doc.is_array()) throw UsageError("point document must be an array of points");
    return doc;
}

std::vector<LatticePoint> parse_centers(const std::string& spec) { return lattice_points_from_json(load_point_document(spec)); }

std::vector<RationalPoint> parse_rational_points(const std::string& spec) {
    return rational_points_from_json(load_point_document(spec));
}

Json merge_config(Json flags, const Json& file) {
    if (file.is_null()) return flags;
    if (!file.is_object()) throw UsageError("config file must hold a JSON object");
    for (const auto& [key, value] : file.items()) flags[key] = value;
    return flags;
}

CommandOutput run_sandwich(const Json& config) {
    const int k = require<int>(config, "k");
    const auto s = require<std::int64_t>(config, "s");
    const std::string format = optional_value<std::string>(config, "format", "json");
    if (k < 0 || k > 20) throw UsageError("k must lie in [0, 20]");
    if (format != "json" && format != "csv" && format != "pretty") throw UsageError("format must be json, csv or pretty");

    const Sandwich sw = build_sandwich(k, s);
    Json doc = header("sandwich", config);
    doc["k"] = k;
    doc["s"] = s;
    doc["dim"] = k + 1;
    doc["size"] = sw.size();
    doc["points"] = to_json(sw.points());
    CommandOutput out = json_output(doc, exit_ok);
    if (format == "csv") {
        std::ostringstream os;
        for (const auto& p : sw.points()) {
            for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
            os << '\n';
        }
        out.text = os.str();
        out.extension = "csv";
    } else if (format == "pretty") {
        std::ostringstream os;
        os << "Xi^" << k << "_" << s << " in Z^" << k + 1 << ": " << sw.size() << (sw.size() == 1 ? " point\n" : " points\n");
        for (const auto& p : sw.points()) os << "  " << point_text(p) << '\n';
        out.text = os.str();
        out.extension = "txt";
    }
    return out;
}

CommandOutput run_cover_verify(const Json& config) {
    const int k = require<int>(config, "k");
    const auto s = require<std::int64_t>(config, "s");
    const bool explore = optional_value<bool>(config, "explore", false);
    const int box = optional_value<int>(config, "box", 1);
    if (k < 0 || k > 12) throw UsageError("k must lie in [0, 12]");
    if (box < 1 || box > 3) throw UsageError("box must lie in [1, 3]");

    Json doc = header("cover-verify", config);
    if (explore) {
        const CoverReport report = explore_covering(k, s, box);
        doc["mode"] = "explore";
        doc["report"] = to_json(report);
        return json_output(doc, exit_ok);
    }
    if (s > k - 2) throw UsageError("the covering property is only claimed for s <= k - 2; pass --explore to probe");
    const CoverReport report = verify_covering_lemma(k, s);
    doc["mode"] = "verify";
    doc["report"] = to_json(report);
    doc["ok"] = report.failures.empty();
    return json_output(doc, report.failures.empty() ? exit_ok : exit_failure);
}

CommandOutput run_tshape(const Json& config) {
    const auto seed = optional_value<std::uint64_t>(config, "seed", 1);
    const int trials = optional_value<int>(config, "trials", 100);
    Json doc = header("tshape", config);

    if (config.contains("points") && !config["points"].is_null()) {
        const auto points = parse_rational_points(require<std::string>(config, "points"));
        const TShapeVerdict verdict = is_t_shaped(points);
        bool verified = true;
        if (verdict.certificate) verified = verify_certificate(points, *verdict.certificate);
        doc["trials"] = trials;
        doc["points"] = to_json(points);
        const Json verdict_json = to_json(verdict);
        for (const auto& [key, value] : verdict_json.items()) doc[key] = value;
        if (verdict.certificate) doc["certificate_verified"] = verified;
        return json_output(doc, verified ? exit_ok : exit_failure);
    }

    const int n = require<int>(config, "n");
    if (n < 1 || n > 4) throw UsageError("n must lie in [1, 4]");
    if (trials < 0) throw UsageError("trials must be nonnegative");
    const TValueReport report = verify_t_value_bounds(n, trials, seed);
    doc["trials"] = trials;
    doc["report"] = to_json(report);
    return json_output(doc, report.ok() ? exit_ok : exit_failure);
}

CommandOutput run_certify(const Json& config) {
    const auto centers = parse_centers(require<std::string>(config, "centers"));
    if (centers.empty()) throw UsageError("at least one center is required");
    const int colors = require<int>(config, "colors");
    const auto dim = optional_value<std::size_t>(config, "dim", 0);
    const auto r_list = require<std::vector<std::int64_t>>(config, "r_list");
    const int r_factor = optional_value<int>(config, "r_factor", kDefaultRFactor);
    const auto budget = optional_value<std::uint64_t>(config, "budget", 0);
    const bool witness = optional_value<bool>(config, "witness", false);
    const std::string expect = optional_value<std::string>(config, "expect", "");
    const std::string dimacs = optional_value<std::string>(config, "dimacs", "");

    if (colors < 1) throw UsageError("colors must be at least 1");
    if (r_factor < 2) throw UsageError("R factor must be at least 2");
    if (r_list.empty()) throw UsageError("r list must not be empty");
    for (auto r : r_list) {
        if (r < 0) throw UsageError("radii must be nonnegative");
    }
    for (const auto& c : centers) {
        if (c.dim() != centers.front().dim()) throw UsageError("centers have mixed dimensions");
    }
    if (dim != 0 && dim != centers.front().dim()) throw UsageError("--dim does not match the centers");
    if (!expect.empty() && expect != "forced" && expect != "colorable") {
        throw UsageError("expect must be forced or colorable");
    }

    const auto rows = certify_schedule(centers, colors, r_list, r_factor, budget);
    Json doc = header("certify", config);
    doc["centers"] = to_json(centers);
    Json jrows = Json::array();
    bool all_decided = true;
    bool as_expected = true;
    for (const auto& row : rows) {
        jrows.push_back(to_json(row, witness));
        all_decided = all_decided && row.verdict.kind != VerdictKind::unknown;
        if (expect == "forced") as_expected = as_expected && row.verdict.kind == VerdictKind::forced;
        if (expect == "colorable") as_expected = as_expected && row.verdict.kind == VerdictKind::colorable;
        if (!dimacs.empty()) {
            WindowSpec spec{centers.front().dim(), row.R, row.r, centers, {}};
            std::ofstream f(dimacs + "_r" + std::to_string(row.r) + ".cnf");
            if (!f) throw UsageError("cannot write DIMACS file with prefix '" + dimacs + "'");
            f << export_dimacs(build_symmetry_graph(spec), colors);
        }
    }
    doc["rows"] = jrows;
    doc["all_decided"] = all_decided;
    if (!expect.empty()) doc["as_expected"] = as_expected;
    return json_output(doc, all_decided && as_expected ? exit_ok : exit_failure);
}

CommandOutput run_coloring_scan(const Json& config) {
    const std::string name = require<std::string>(config, "rule");
    const auto d = require<std::size_t>(config, "dim");
    const auto samples = optional_value<std::size_t>(config, "samples", 1000);
    const auto seed = optional_value<std::uint64_t>(config, "seed", 1);
    const auto span = optional_value<std::int64_t>(config, "span", 16);
    const auto max_recorded = optional_value<std::size_t>(config, "max_recorded", 100);
    const Rational inner = parse_rational(optional_value<std::string>(config, "inner_radius", "0"));
    const int colors = optional_value<int>(config, "colors", 0);

    std::vector<RationalPoint> extra;
    std::optional<ColoringRule> rule;
    if (name == "cone") {
        rule = base_cone(d, colors);
    } else if (name == "constant") {
        rule = constant_coloring(d, 2);
    } else if (name == "plus0") {
        rule = plus0_extension(base_cone(d, colors));
    } else if (name == "plus1") {
        RationalPoint apex(d + 1);
        apex[d] = 1;
        if (config.contains("apex") && !config["apex"].is_null()) {
            const auto pts = parse_rational_points(require<std::string>(config, "apex"));
            if (pts.size() != 1) throw UsageError("plus1 takes exactly one apex");
            apex = pts.front();
        }
        rule = plus1_extension(base_cone(d, std::max(colors, 3)), apex);
        extra.push_back(apex);
    } else if (name == "plus2") {
        const auto pts = parse_rational_points(require<std::string>(config, "apex"));
        if (pts.size() != 2) throw UsageError("plus2 takes exactly two apexes");
        rule = plus2_extension(base_cone(d, std::max(colors, 4)), pts[0], pts[1]);
        extra = pts;
    } else {
        throw UsageError("rule must be cone, plus0, plus1, plus2 or constant");
    }

    std::vector<RationalPoint> centers;
    if (config.contains("centers") && !config["centers"].is_null()) {
        centers = parse_rational_points(require<std::string>(config, "centers"));
    } else {
        centers.emplace_back(rule->dim());
        centers.insert(centers.end(), extra.begin(), extra.end());
    }

    ScanOptions options;
    options.inner_radius = inner;
    options.samples = samples;
    options.seed = seed;
    options.span = span;
    options.hint_levels = rule->special_levels();
    options.max_recorded = max_recorded;
    const ScanReport report = symmetric_pair_scan(*rule, centers, options);

    Json doc = header("coloring-scan", config);
    doc["report"] = to_json(report);
    return json_output(doc, report.unexplained_count == 0 ? exit_ok : exit_failure);
}

CommandOutput run_command(const std::string& name, const Json& config) {
    if (name == "sandwich") return run_sandwich(config);
    if (name == "cover-verify") return run_cover_verify(config);
    if (name == "tshape") return run_tshape(config);
    if (name == "certify") return run_certify(config);
    if (name == "coloring-scan") return run_coloring_scan(config);
    throw UsageError("unknown command '" + name + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"centerpole: sandwiches, covering checks, T-shapes, witness colorings and window certificates"};
    app.require_subcommand(1);
    std::string config_path;
    std::string output_path;
    bool metadata = false;
    app.add_option("--config", config_path, "JSON file whose keys override flags");
    app.add_option("-o,--output", output_path, "write the document here instead of stdout");
    app.add_flag("--metadata", metadata, "add a metadata block with timing");

    Json flags = Json::object();

    auto* sandwich = app.add_subcommand("sandwich", "list the points of Xi^k_s");
    int sw_k = 0;
    std::int64_t sw_s = 0;
    std::string sw_format = "json";
    sandwich->add_option("-k,--k", sw_k, "cube dimension k")->required();
    sandwich->add_option("-s,--s", sw_s, "slice parameter s")->required();
    sandwich->add_option("--format", sw_format, "json, csv or pretty")->capture_default_str();

    auto* cover = app.add_subcommand("cover-verify", "check the covering property for all maximal Sigma_0-sets");
    int cv_k = 0;
    std::int64_t cv_s = 0;
    bool cv_explore = false;
    int cv_box = 1;
    cover->add_option("-k,--k", cv_k, "cube dimension k")->required();
    cover->add_option("-s,--s", cv_s, "slice parameter s")->required();
    cover->add_flag("--explore", cv_explore, "search shifts in a box instead of asserting the property");
    cover->add_option("--box", cv_box, "shift box radius for --explore")->capture_default_str();

    auto* tshape = app.add_subcommand("tshape", "decide T-shapedness or probe t(R^n)");
    std::string ts_points;
    int ts_n = 0;
    int ts_trials = 100;
    std::uint64_t ts_seed = 1;
    tshape->add_option("--points", ts_points, "point file, inline JSON, or sandwich(k,s)");
    tshape->add_option("--n", ts_n, "dimension for the random t(R^n) probe");
    tshape->add_option("--trials", ts_trials, "random sets to test")->capture_default_str();
    tshape->add_option("--seed", ts_seed, "random seed")->capture_default_str();

    auto* certify = app.add_subcommand("certify", "decide k-colorability of symmetry-graph windows");
    std::size_t ce_dim = 0;
    int ce_colors = 0;
    std::string ce_centers;
    std::vector<std::int64_t> ce_r_list;
    int ce_r_factor = kDefaultRFactor;
    std::uint64_t ce_budget = 0;
    bool ce_witness = false;
    std::string ce_expect;
    std::string ce_dimacs;
    certify->add_option("--dim", ce_dim, "lattice dimension (checked against the centers)");
    certify->add_option("--colors", ce_colors, "number of colors k")->required();
    certify->add_option("--centers", ce_centers, "center file, inline JSON, or sandwich(k,s)")->required();
    certify->add_option("--r-list", ce_r_list, "inner radii, comma separated")->delimiter(',')->required();
    certify->add_option("--R-factor", ce_r_factor, "R = factor * (r + max|c| + 1)")->capture_default_str();
    certify->add_option("--budget", ce_budget, "decision limit per row, 0 = none")->capture_default_str();
    certify->add_flag("--witness", ce_witness, "include colorings of Colorable rows");
    certify->add_option("--expect", ce_expect, "forced or colorable; exit 1 on any other verdict");
    certify->add_option("--dimacs", ce_dimacs, "write one CNF per row to PREFIX_r<r>.cnf");

    auto* scan = app.add_subcommand("coloring-scan", "search a witness coloring for monochromatic mirror pairs");
    std::string sc_rule;
    std::size_t sc_dim = 0;
    std::string sc_apex;
    std::string sc_centers;
    std::size_t sc_samples = 1000;
    std::uint64_t sc_seed = 1;
    std::string sc_inner = "0";
    std::int64_t sc_span = 16;
    int sc_colors = 0;
    scan->add_option("--rule", sc_rule, "cone, plus0, plus1, plus2 or constant")->required();
    scan->add_option("--dim", sc_dim, "dimension of the base space")->required();
    scan->add_option("--apex", sc_apex, "apex point(s) for plus1/plus2 as JSON");
    scan->add_option("--centers", sc_centers, "centers as JSON (default: origin and apexes)");
    scan->add_option("--samples", sc_samples, "samples per center")->capture_default_str();
    scan->add_option("--seed", sc_seed, "random seed")->capture_default_str();
    scan->add_option("--inner-radius", sc_inner, "ignore pairs this close to the center")->capture_default_str();
    scan->add_option("--colors", sc_colors, "palette size of the base coloring (default: its own)");
    scan->add_option("--span", sc_span, "sample offsets from [-span, span]")->capture_default_str();

    for (auto* sub : {sandwich, cover, tshape, certify, scan}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::string command;
    if (sandwich->parsed()) {
        command = "sandwich";
        flags = {{"k", sw_k}, {"s", sw_s}, {"format", sw_format}};
    } else if (cover->parsed()) {
        command = "cover-verify";
        flags = {{"k", cv_k}, {"s", cv_s}, {"explore", cv_explore}, {"box", cv_box}};
    } else if (tshape->parsed()) {
        command = "tshape";
        flags = {{"points", ts_points.empty() ? Json() : Json(ts_points)},
                 {"n", ts_n == 0 ? Json() : Json(ts_n)},
                 {"trials", ts_trials},
                 {"seed", ts_seed}};
    } else if (certify->parsed()) {
        command = "certify";
        flags = {{"dim", ce_dim},       {"colors", ce_colors}, {"centers", ce_centers},
                 {"r_list", ce_r_list}, {"r_factor", ce_r_factor}, {"budget", ce_budget},
                 {"witness", ce_witness}, {"expect", ce_expect},  {"dimacs", ce_dimacs}};
    } else {
        command = "coloring-scan";
        flags = {{"rule", sc_rule},
                 {"dim", sc_dim},
                 {"apex", sc_apex.empty() ? Json() : Json(sc_apex)},
                 {"centers", sc_centers.empty() ? Json() : Json(sc_centers)},
                 {"samples", sc_samples},
                 {"seed", sc_seed},
                 {"inner_radius", sc_inner},
                 {"span", sc_span},
                 {"colors", sc_colors}};
    }

    try {
        Json file_config;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw UsageError("cannot open config file '" + config_path + "'");
            file_config = Json::parse(in);
        }
        const Json config = merge_config(flags, file_config);

        const auto start = std::chrono::steady_clock::now();
        CommandOutput result = run_command(command, config);
        if (metadata && result.extension == "json") {
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            Json doc = result.document;
            doc["metadata"] = {{"runtime_ms", ms}, {"unix_time", static_cast<std::int64_t>(std::time(nullptr))}};
            result.text = doc.dump(2) + "\n";
        }

        std::filesystem::path target = output_path;
        if (target.empty()) {
            if (const char* dir = std::getenv("CENTERPOLE_OUTPUT_DIR"); dir && *dir) {
                target = std::filesystem::path(dir) / (command + "." + result.extension);
            }
        }
        if (target.empty()) {
            out << result.text;
        } else {
            if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
            std::ofstream f(target);
            if (!f) throw UsageError("cannot write output file '" + target.string() + "'");
            f << result.text;
            err << "wrote " << target.string() << '\n';
        }
        return result.exit_code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace centerpole::cli
