// microweight: runs the verification suites and the exponent-model
// operations from the command line.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on a
// usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <microweight/suites.hpp>

using namespace microweight;
using suites::CheckStatus;
using suites::Outcome;
using suites::SuiteReport;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::size_t max_rank_ceiling = 10;
    std::size_t max_points = 128;
    std::string fixture_dir = MW_FIXTURE_DIR;
};

// key=value lines; unknown keys are an error so typos do not pass silently.
Settings load_settings(const std::string& config_path)
{
    Settings s;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ParseError("cannot open config " + config_path, 0);
        std::string line;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            ++n;
            const auto t = io::detail::strip(line);
            if (t.empty() || t[0] == '#') continue;
            const auto eq = t.find('=');
            if (eq == std::string::npos) throw ParseError(config_path + ": expected key=value", n);
            const auto key = io::detail::strip(t.substr(0, eq));
            const auto value = io::detail::strip(t.substr(eq + 1));
            auto number = [&] {
                try {
                    std::size_t pos = 0;
                    const auto v = std::stoull(value, &pos);
                    if (pos != value.size()) throw std::invalid_argument(value);
                    return static_cast<std::size_t>(v);
                } catch (const std::exception&) {
                    throw ParseError(config_path + ": '" + key + "' needs a nonnegative integer", n);
                }
            };
            if (key == "max_rank_ceiling")
                s.max_rank_ceiling = number();
            else if (key == "max_points")
                s.max_points = number();
            else if (key == "fixture_dir")
                s.fixture_dir = value;
            else
                throw ParseError(config_path + ": unknown key '" + key + "'", n);
        }
    }
    if (const char* env = std::getenv("MICROWEIGHT_FIXTURE_DIR"); env && *env) s.fixture_dir = env;
    return s;
}

struct OutputOptions {
    bool json = false;
    bool quiet = false;
    bool timings = false;
};

int emit(const SuiteReport& r, const OutputOptions& out, nlohmann::json extra = nlohmann::json::object())
{
    if (out.json) {
        auto j = suites::to_json(r, out.timings);
        for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : r.checks) {
            if (out.quiet && c.status == CheckStatus::Pass) continue;
            std::string status = suites::to_string(c.status);
            for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
            std::cout << status << "  " << c.id << "  " << c.description;
            if (c.witness) std::cout << "  [" << *c.witness << "]";
            if (out.timings) std::cout << "  (" << c.elapsed_ms << " ms)";
            std::cout << "\n";
        }
        if (!out.quiet)
            std::cout << r.suite << ": " << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail) << " fail, "
                      << r.count(CheckStatus::Inconclusive) << " inconclusive\n";
    }
    return r.ok() ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

int cmd_catalog(const std::string& type_name, std::size_t rank, bool allow_d3, const OutputOptions& out)
{
    RootType type;
    try {
        type = parse_root_type(type_name);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    std::vector<MinusculeEntry> entries;
    try {
        entries = minuscule_catalog(type, rank, {allow_d3});
    } catch (const RangeError& e) {
        throw UsageError(e.what());
    }
    const auto report = suites::catalog_suite(type, rank, {allow_d3});
    if (!out.json && !out.quiet) {
        const auto sys = build_root_system(type, rank);
        for (const auto& e : entries)
            std::cout << sys.label() << "  w" << e.weight_index << "  dim " << e.dimension << "  " << to_string(e.self_dual_form) << "\n";
    }
    return emit(report, out, {{"catalog", io::catalog_json(entries)}});
}

int cmd_verify_e7(const std::string& fixture, const Settings& settings, const OutputOptions& out)
{
    const std::string path = fixture.empty() ? settings.fixture_dir + "/e7_omega7_doubled.txt" : fixture;
    const auto rows = io::read_fixture(path, 7);
    const std::string oracle = settings.fixture_dir + "/oracle/e7_omega7_oracle.txt";
    std::optional<std::string> oracle_path;
    if (std::filesystem::exists(oracle)) oracle_path = oracle;
    return emit(suites::verify_e7_suite(rows, oracle_path), out);
}

int cmd_verify_lemmas(const std::string& suite, std::optional<std::size_t> max_rank, const std::string& input, const Settings& settings,
                      const OutputOptions& out)
{
    if (max_rank && *max_rank > settings.max_rank_ceiling)
        throw UsageError("--max-rank " + std::to_string(*max_rank) + " exceeds the configured ceiling " + std::to_string(settings.max_rank_ceiling));
    if (max_rank && *max_rank == 0) throw UsageError("--max-rank must be positive");

    if (suite == "2.7") {
        if (!input.empty()) throw UsageError("--input is not used by suite 2.7");
        const std::size_t m = max_rank.value_or(7);
        return emit(suites::collinearity_suite({m, m, m}, settings.max_points), out);
    }
    if (suite == "2.8") {
        std::vector<suites::Instance> family;
        if (!input.empty())
            family.push_back({std::filesystem::path(input).stem().string(), io::read_eigenset(input)});
        else
            family = suites::progression_family(max_rank.value_or(3));
        return emit(suites::fiber_suite(family), out);
    }
    if (suite == "4.6") {
        const auto delta = input.empty() ? suites::e7_product_instance() : io::read_eigenset(input);
        std::optional<std::uint64_t> expected_b;
        const std::string oracle = settings.fixture_dir + "/oracle/e7_omega7_oracle.txt";
        if (std::filesystem::exists(oracle)) expected_b = io::read_key_values(oracle).at("distinct_differences_with_zero");
        return emit(suites::e7_fiber_suite(delta, expected_b), out);
    }
    throw UsageError("unknown suite '" + suite + "' (expected 2.7, 2.8 or 4.6)");
}

std::string points_string(const std::set<ExponentPoint>& s)
{
    std::string out;
    for (const auto& p : s) out += (out.empty() ? "" : " ") + to_string(p);
    return "{" + out + "}";
}

int cmd_frobmodel(const std::string& input, const std::string& op, const OutputOptions& out)
{
    const auto delta = io::read_eigenset(input);
    SuiteReport rep{"frobmodel", {}};
    nlohmann::json result;
    rep.run("frobmodel." + op, op + " on " + std::filesystem::path(input).filename().string(), [&]() -> Outcome {
        if (op == "lambda-sq") {
            const auto l = recover_lambda_sq(delta);
            result = io::to_json(l);
            return Outcome::pass(to_string(l));
        }
        if (op == "level-sets") {
            result = nlohmann::json::array();
            std::string text;
            const auto levels = invariant_level_sets(delta);
            for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
                nlohmann::json pts = nlohmann::json::array();
                for (const auto& p : it->second) pts.push_back(io::to_json(p));
                result.push_back({{"count", it->first}, {"size", it->second.size()}, {"points", pts}});
                text += (text.empty() ? "" : ", ") + std::to_string(it->first) + ":" + std::to_string(it->second.size());
            }
            return Outcome::pass("{" + text + "}");
        }
        if (op == "line-set") {
            result = nlohmann::json::array();
            const auto lines = line_set(delta);
            for (const auto& t : lines) result.push_back({io::to_json(t[0]), io::to_json(t[1]), io::to_json(t[2])});
            return Outcome::pass(std::to_string(lines.size()) + " ordered triples");
        }
        // b-set
        const auto b = b_set(delta);
        result = nlohmann::json::array();
        for (const auto& p : b) result.push_back(io::to_json(p));
        return Outcome::pass(std::to_string(b.size()) + " elements " + points_string(b));
    });
    if (!out.json && !out.quiet && rep.ok()) std::cout << result.dump() << "\n";
    return emit(rep, out, {{"result", result}});
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minuscule weight systems, E7(w7) configurations and the exponent model."};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may also follow the subcommand
    app.set_help_all_flag("--help-all", "Expand all help");

    OutputOptions out;
    std::string config_path;
    app.add_flag("--json", out.json, "Emit the report as JSON");
    app.add_flag("--quiet", out.quiet, "Only print failing checks");
    app.add_flag("--timings", out.timings, "Include per-check elapsed times");
    app.add_option("--config", config_path, "key=value file: max_rank_ceiling, max_points, fixture_dir");

    auto* catalog = app.add_subcommand("catalog", "Minuscule weights of a root system");
    std::string type_name;
    std::size_t rank = 0;
    bool allow_d3 = false;
    catalog->add_option("--type", type_name, "A, B, C, D, E6 or E7")->required();
    catalog->add_option("--rank", rank, "Rank")->required();
    catalog->add_flag("--allow-d3", allow_d3, "Accept D3 (isomorphic to A3)");

    auto* verify_e7 = app.add_subcommand("verify-e7", "Checks of the 56-dimensional E7 weight system");
    std::string fixture;
    verify_e7->add_option("--fixture", fixture, "28-row weight list (default: bundled fixture)");

    auto* lemmas = app.add_subcommand("verify-lemmas", "Collinearity and fiber suites");
    std::string suite;
    std::optional<std::size_t> max_rank;
    std::string lemma_input;
    lemmas->add_option("--suite", suite, "2.7 (cube-form collinearity), 2.8 (fiber constancy) or 4.6 (E7 fiber projections)")->required()->check(CLI::IsMember({"2.7", "2.8", "4.6"}));
    lemmas->add_option("--max-rank", max_rank, "Rank cap for generated cube forms");
    lemmas->add_option("--input", lemma_input, "EigenSet JSON instead of the generated instances (2.8, 4.6)");

    auto* frob = app.add_subcommand("frobmodel", "Exponent-model operations on an EigenSet");
    std::string input;
    std::string op;
    frob->add_option("--input", input, "EigenSet JSON")->required();
    frob->add_option("--op", op, "Operation")->required()->check(CLI::IsMember({"lambda-sq", "level-sets", "line-set", "b-set"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const auto settings = load_settings(config_path);
        if (catalog->parsed()) return cmd_catalog(type_name, rank, allow_d3, out);
        if (verify_e7->parsed()) return cmd_verify_e7(fixture, settings, out);
        if (lemmas->parsed()) return cmd_verify_lemmas(suite, max_rank, lemma_input, settings, out);
        return cmd_frobmodel(input, op, out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
