// Command-line front end. Exit codes: 0 ok, 1 invalid input, 2 usage,
// 3 property violation (verify).

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kuiper/characterize.hpp"
#include "kuiper/io.hpp"
#include "kuiper/metrics.hpp"
#include "kuiper/random.hpp"
#include "kuiper/transforms.hpp"
#include "kuiper/verify.hpp"

namespace {

using namespace kuiper;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kViolation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool g_json = false;

Distribution load_distribution(const std::string& path) { return parse_distribution(read_file(path), path); }

void emit(const std::optional<std::string>& out, const std::string& text) {
    if (out) {
        write_file(*out, text);
    } else {
        std::cout << text;
    }
}

Json scalar_json(const Scalar& s) {
    return {{"value", s.value.to_string()}, {"decimal", s.to_double()}, {"exact", s.exact}};
}

Json intervals_json(const std::vector<Interval>& v) {
    Json out = Json::array();
    for (const auto& i : v) out.push_back(i.to_string());
    return out;
}

std::string join(const std::vector<Interval>& v) {
    if (v.empty()) return "(none)";
    std::string s;
    for (const auto& i : v) s += (s.empty() ? "" : " ") + i.to_string();
    return s;
}

// ---------------------------------------------------------------------------

int cmd_dist(const std::string& metric, const std::string& a, const std::string& b, bool witness) {
    const Distribution mu = load_distribution(a);
    const Distribution nu = load_distribution(b);
    if (witness && metric != "kuiper") throw UsageError("--witness applies to the kuiper metric only");
    Scalar value;
    std::optional<Witness> w;
    if (metric == "kuiper") {
        if (witness) {
            WitnessResult r = kuiper_witness(mu, nu);
            value = r.distance;
            w = r.witness;
        } else {
            value = kuiper_distance(mu, nu);
        }
    } else if (metric == "ks") {
        value = ks_distance(mu, nu);
    } else {
        value = tv_distance(mu, nu);
    }
    if (g_json) {
        Json j = {{"metric", metric}};
        j.update(scalar_json(value));
        if (w) j["witness"] = to_json(*w);
        std::cout << dump(j);
    } else {
        std::cout << format_scalar(value) << "\n";
        if (w) std::cout << "witness " << w->interval.to_string() << " signed=" << w->signed_value.to_string() << "\n";
    }
    return kOk;
}

int cmd_transform(const std::optional<std::string>& map_path, const std::optional<std::string>& pole,
                  const std::string& input, const std::optional<std::string>& output) {
    if (!map_path && !pole) throw UsageError("transform needs --map, --r-pole, or both");
    MonotoneMap g = map_path ? parse_map(read_file(*map_path), *map_path) : identity_map();
    if (pole) g = compose(g, r_map(ExtReal::parse(*pole)));
    emit(output, serialize(pullback(load_distribution(input), g)));
    return kOk;
}

int cmd_support(const std::string& input) {
    const Distribution mu = load_distribution(input);
    const CoIntervalSupport s = co_interval_support(mu);
    const std::vector<Interval> closed = closed_support(mu);
    if (g_json) {
        Json atoms = Json::array();
        for (const auto& [x, m] : mu.atoms()) atoms.push_back({{"at", x.to_string()}, {"mass", m.to_string()}});
        std::cout << dump({{"closed_support", intervals_json(closed)},
                           {"co_interval_support", intervals_json(s.components)},
                           {"hull", s.hull.to_string()},
                           {"bounded_gaps", intervals_json(s.bounded_gaps)},
                           {"atoms", std::move(atoms)}});
    } else {
        std::cout << "closed support:      " << join(closed) << "\n"
                  << "co-interval support: " << join(s.components) << "\n"
                  << "hull:                " << s.hull.to_string() << "\n"
                  << "bounded gaps:        " << join(s.bounded_gaps) << "\n";
    }
    return kOk;
}

int cmd_characterize(const std::string& mu_path, const std::optional<std::string>& nu_path) {
    const Distribution mu = load_distribution(mu_path);
    Json j = Json::object();
    std::string text;
    if (mu.is_dirac()) {
        const Rational x = mu.atoms().front().first;
        j["dirac_at"] = x.to_string();
        text += "dirac at " + x.to_string() + ": unit distance iff no atom at " + x.to_string() + "\n";
    } else {
        const UnitDistanceRegions r = unit_distance_regions(mu);
        Json excluded = Json::array();
        for (const auto& x : r.dirac_excluded_points) excluded.push_back(x.to_string());
        j["outer"] = intervals_json(r.outer);
        j["gaps"] = intervals_json(r.gaps);
        j["dirac_excluded_points"] = std::move(excluded);
        text += "outer: " + join(r.outer) + "\ngaps:  " + join(r.gaps) + "\n";
    }
    if (nu_path) {
        const Distribution nu = load_distribution(*nu_path);
        const bool unit = is_unit_distant(mu, nu);
        j["unit_distant"] = unit;
        text += std::string("unit distant: ") + (unit ? "true" : "false") + "\n";
    }
    std::cout << (g_json ? dump(j) : text);
    return kOk;
}

int cmd_quantize(const std::string& input, std::size_t n, const std::optional<std::string>& output) {
    if (n == 0) throw UsageError("-n must be positive");
    const Distribution mu = load_distribution(input);
    const Distribution q = quantize(mu, n);
    if (output) {
        write_file(*output, serialize(q));
        const Scalar d = kuiper_distance(mu, q);
        if (g_json) {
            Json j = {{"n", n}, {"output", *output}, {"kuiper", scalar_json(d)}};
            std::cout << dump(j);
        } else {
            std::cout << "kuiper distance " << format_scalar(d) << "\n";
        }
    } else {
        std::cout << serialize(q);
    }
    return kOk;
}

Complexity parse_complexity(const std::string& c) {
    static const std::map<std::string, Complexity> m{
        {"small", Complexity::small}, {"medium", Complexity::medium}, {"large", Complexity::large}};
    return m.at(c);
}

int cmd_gen(const std::string& kind, std::uint64_t seed, const std::string& complexity,
            const std::optional<std::string>& output) {
    SplitMix64 rng(seed);
    const Complexity c = parse_complexity(complexity);
    if (kind == "distribution") {
        emit(output, serialize(random_distribution(rng, shape_for(c))));
    } else {
        const std::size_t pieces = c == Complexity::small ? 2 : c == Complexity::medium ? 3 : 5;
        emit(output, serialize(random_map(rng, pieces)));
    }
    return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t trials, const std::optional<std::string>& report_path) {
    if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
    const VerifyReport r = run_verify(suite, seed, trials);
    const std::string report = dump(r.to_json());
    if (report_path) write_file(*report_path, report);
    if (g_json) {
        std::cout << report;
    } else {
        auto line = [](const VerifyReport& x) {
            std::cout << (x.failure_count() == 0 ? "PASS " : "FAIL ") << x.suite << ": " << x.failure_count()
                      << " failures, " << x.exactness() << "\n";
        };
        for (const auto& p : r.parts) line(p);
        line(r);
        for (const auto& f : r.failures) {
            std::cout << "  trial " << f.trial << " [" << f.check << "] expected " << f.expected << ", got " << f.actual
                      << "\n";
        }
    }
    return r.failure_count() == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kuiper, Kolmogorov-Smirnov and total variation distances"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string metric = "kuiper";
    std::string file_a, file_b;
    bool witness = false;
    auto* dist = app.add_subcommand("dist", "Distance between two distributions");
    dist->add_option("--metric", metric)->check(CLI::IsMember({"kuiper", "ks", "tv"}));
    dist->add_option("a", file_a)->required();
    dist->add_option("b", file_b)->required();
    dist->add_flag("--witness", witness, "Print an interval attaining the Kuiper distance");

    std::optional<std::string> map_path, pole, output;
    std::string input;
    auto* transform = app.add_subcommand("transform", "Pull a distribution back along a monotone map");
    transform->add_option("--map", map_path, "Map JSON file");
    transform->add_option("--r-pole", pole, "Compose with the inversion t -> 1/(t - x); 'inf' for the identity");
    transform->add_option("input", input)->required();
    transform->add_option("-o,--output", output);

    auto* support = app.add_subcommand("support", "Support structure of a distribution");
    support->add_option("input", input)->required();

    std::optional<std::string> other;
    auto* characterize = app.add_subcommand("characterize", "Regions at Kuiper distance one");
    characterize->add_option("mu", input)->required();
    characterize->add_option("nu", other, "Decide whether this distribution is at distance one");

    std::size_t n = 0;
    auto* quant = app.add_subcommand("quantize", "Approximate by n equal atoms");
    quant->add_option("input", input)->required();
    quant->add_option("-n", n)->required();
    quant->add_option("-o,--output", output);

    std::string kind;
    std::uint64_t seed = 1;
    std::string complexity = "small";
    auto* gen = app.add_subcommand("gen", "Generate a random distribution or map");
    gen->add_option("kind", kind)->required()->check(CLI::IsMember({"distribution", "map"}));
    gen->add_option("--seed", seed);
    gen->add_option("--complexity", complexity)->check(CLI::IsMember({"small", "medium", "large"}));
    gen->add_option("-o,--output", output);

    std::string suite;
    std::size_t trials = 100;
    std::optional<std::string> report;
    auto* verify = app.add_subcommand("verify", "Run randomized property suites");
    verify->add_option("suite", suite, "Suite name or 'all'")->required();
    verify->add_option("--seed", seed);
    verify->add_option("--trials", trials);
    verify->add_option("--report", report, "Write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    g_json = format == "json";

    try {
        if (*dist) return cmd_dist(metric, file_a, file_b, witness);
        if (*transform) return cmd_transform(map_path, pole, input, output);
        if (*support) return cmd_support(input);
        if (*characterize) return cmd_characterize(input, other);
        if (*quant) return cmd_quantize(input, n, output);
        if (*gen) return cmd_gen(kind, seed, complexity, output);
        if (*verify) return cmd_verify(suite, seed, trials, report);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}
