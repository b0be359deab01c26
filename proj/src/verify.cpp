#include "kuiper/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "kuiper/characterize.hpp"
#include "kuiper/metrics.hpp"
#include "kuiper/random.hpp"
#include "kuiper/transforms.hpp"

namespace kuiper {

namespace {

constexpr DistributionShape kPiecewiseLinear{4, true, true, false};
constexpr DistributionShape kAtomFreeLinear{4, false, true, false};
constexpr DistributionShape kAtomFree{4, false, true, true};
constexpr DistributionShape kGeneral{4, true, true, true};

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

SplitMix64 stream(std::uint64_t seed, std::string_view salt) { return SplitMix64(seed ^ fnv1a(salt)); }

std::string str(const Scalar& s) { return format_scalar(s); }

// a ≤ b, exactly when both sides are exact.
bool leq(const Scalar& a, const Scalar& b, double slack = 1e-12) {
    if (a.exact && b.exact) return a.value <= b.value;
    return a.to_double() <= b.to_double() + slack;
}

bool same(const Scalar& a, const Scalar& b, double slack = 1e-12) {
    if (a.exact && b.exact) return a.value == b.value;
    return std::abs(a.to_double() - b.to_double()) <= slack;
}

Scalar exact(const Rational& r) { return {r, true}; }

Orientation random_orientation(SplitMix64& rng) {
    return rng.chance(1, 2) ? Orientation::increasing : Orientation::decreasing;
}

// Per-trial bookkeeping: records failures against the current trial index.
class Recorder {
public:
    explicit Recorder(VerifyReport& r) : r_(r) {}

    void begin(std::size_t trial) {
        trial_ = trial;
        inputs_ = Json::object();
        exact_ = true;
    }
    Json& inputs() { return inputs_; }
    void inexact() { exact_ = false; }
    void require(bool ok, const std::string& check, const std::string& expected, const std::string& actual) {
        if (!ok) r_.failures.push_back({trial_, check, inputs_, expected, actual});
    }
    void end() {
        ++r_.checked;
        if (exact_) ++r_.exact;
    }

    // Runs body as one trial; an exception is a failure of that trial.
    void trial(std::size_t i, const std::function<void()>& body) {
        begin(i);
        try {
            body();
        } catch (const std::exception& e) {
            require(false, "trial completes", "no exception", e.what());
            exact_ = false;
        }
        end();
    }

private:
    VerifyReport& r_;
    std::size_t trial_ = 0;
    Json inputs_;
    bool exact_ = true;
};

// Points of I: the endpoints (closed or not) and a grid in between.
std::vector<Rational> interval_points(const Interval& I) {
    std::vector<Rational> pts;
    if (I.is_bounded()) {
        const Rational& a = I.lo().value();
        const Rational& b = I.hi().value();
        for (long k = 0; k <= 8; ++k) pts.push_back(a + (b - a) * Rational(k, 8));
        if (a == b) pts.resize(1);
    } else if (I.lo().is_finite()) {
        for (long k = 0; k <= 8; ++k) pts.push_back(I.lo().value() + Rational(k, 2));
    } else if (I.hi().is_finite()) {
        for (long k = 0; k <= 8; ++k) pts.push_back(I.hi().value() - Rational(8 - k, 2));
    } else {
        for (long k = -4; k <= 4; ++k) pts.push_back(Rational(k));
    }
    return pts;
}

// A random measure built from atoms and uniforms on the given points.
Distribution random_on_points(SplitMix64& rng, const std::vector<Rational>& pts) {
    std::vector<std::pair<Rational, Distribution>> parts;
    const std::size_t n = 1 + rng.below(3);
    Rational total(0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = rng.below(pts.size());
        const std::size_t q = rng.below(pts.size());
        const Rational w(rng.range(1, 5));
        total += w;
        if (p == q || rng.chance(1, 3)) {
            parts.emplace_back(w, make_dirac(pts[p]));
        } else {
            parts.emplace_back(w, make_uniform(std::min(pts[p], pts[q]), std::max(pts[p], pts[q])));
        }
    }
    for (auto& [w, _] : parts) w /= total;
    return parts.size() == 1 ? parts.front().second : mix(parts);
}

// Points strictly inside I, plus closed endpoints.
std::vector<Rational> points_within(const Interval& I) {
    std::vector<Rational> out;
    for (auto& p : interval_points(I)) {
        if (I.contains(p)) out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------

void suite_max_attained(VerifyReport& r, std::size_t trials) {
    Recorder rec(r);
    SplitMix64 pairs = stream(r.seed, "pairs");
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng = pairs.split();
        rec.trial(i, [&] {
            const Distribution mu = random_distribution(rng, kPiecewiseLinear);
            const Distribution nu = random_distribution(rng, kPiecewiseLinear);
            rec.inputs() = {{"mu", to_json(mu)}, {"nu", to_json(nu)}};
            const Scalar d = kuiper_distance(mu, nu);
            const OracleResult o = brute_force_interval_sup(mu, nu);
            if (!d.exact || o.approximate) rec.inexact();
            rec.require(d.value == o.value, "kuiper equals interval maximum", o.value.to_string(), str(d));
            const WitnessResult w = kuiper_witness(mu, nu);
            const Rational attained = interval_mass(mu, w.witness.interval) - interval_mass(nu, w.witness.interval);
            rec.require(attained == w.witness.signed_value, "witness signed value", w.witness.signed_value.to_string(),
                        attained.to_string() + " on " + w.witness.interval.to_string());
            rec.require(abs(attained) == d.value && w.distance.value == d.value, "witness attains distance",
                        d.value.to_string(), attained.to_string() + " on " + w.witness.interval.to_string());
        });
    }
}

void suite_metric_chain(VerifyReport& r, std::size_t trials) {
    Recorder rec(r);
    SplitMix64 pairs = stream(r.seed, "pairs");
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng = pairs.split();
        rec.trial(i, [&] {
            const Distribution mu = random_distribution(rng, kPiecewiseLinear);
            const Distribution nu = random_distribution(rng, kPiecewiseLinear);
            rec.inputs() = {{"mu", to_json(mu)}, {"nu", to_json(nu)}};
            const Scalar ks = ks_distance(mu, nu);
            const Scalar ku = kuiper_distance(mu, nu);
            const Scalar tv = tv_distance(mu, nu);
            if (!ks.exact || !ku.exact || !tv.exact) rec.inexact();
            const Scalar two_ks{ks.value * Rational(2), ks.exact};
            const Scalar bound = leq(two_ks, tv) ? two_ks : tv;
            const std::string chain = "ks=" + str(ks) + " ku=" + str(ku) + " tv=" + str(tv);
            rec.require(leq(exact(0), ks) && leq(ks, ku) && leq(ku, bound) && leq(bound, exact(1)),
                        "0 <= ks <= ku <= min(2ks, tv) <= 1", "chain holds", chain);
            rec.require(same(ks, ks_distance(nu, mu)), "ks symmetric", str(ks), str(ks_distance(nu, mu)));
            rec.require(same(ku, kuiper_distance(nu, mu)), "kuiper symmetric", str(ku), str(kuiper_distance(nu, mu)));
            rec.require(same(tv, tv_distance(nu, mu)), "tv symmetric", str(tv), str(tv_distance(nu, mu)));
        });
    }
    SplitMix64 triples = stream(r.seed, "triples");
    const std::size_t n_triples = trials == 0 ? 0 : std::max<std::size_t>(1, trials * 3 / 10);
    for (std::size_t i = 0; i < n_triples; ++i) {
        SplitMix64 rng = triples.split();
        rec.begin(trials + i);
        try {
            const Distribution a = random_distribution(rng, kPiecewiseLinear);
            const Distribution b = random_distribution(rng, kPiecewiseLinear);
            const Distribution c = random_distribution(rng, kPiecewiseLinear);
            rec.inputs() = {{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};
            using Metric = Scalar (*)(const Distribution&, const Distribution&);
            for (auto [name, m] : {std::pair<const char*, Metric>{"kuiper", kuiper_distance},
                                   std::pair<const char*, Metric>{"ks", ks_distance},
                                   std::pair<const char*, Metric>{"tv", tv_distance}}) {
                const Scalar ac = m(a, c);
                const Scalar ab = m(a, b);
                const Scalar bc = m(b, c);
                const Scalar sum{ab.value + bc.value, ab.exact && bc.exact};
                rec.require(leq(ac, sum), std::string(name) + " triangle inequality", "d(a,c) <= " + str(sum), str(ac));
            }
        } catch (const std::exception& e) {
            rec.require(false, "triple completes", "no exception", e.what());
        }
    }
}

void suite_continuous_isometry(VerifyReport& r, std::size_t trials) {
    Recorder rec(r);
    SplitMix64 base = stream(r.seed, "continuous-isometry");
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng = base.split();
        rec.trial(i, [&] {
            const bool linear = rng.chance(1, 2);
            const DistributionShape& shape = linear ? kAtomFreeLinear : kAtomFree;
            const Distribution mu = random_distribution(rng, shape);
            const Distribution nu = random_distribution(rng, shape);
            const Orientation o = random_orientation(rng);
            const MonotoneMap g = linear ? random_pwl_map(rng, 4, o) : random_moebius_map(rng, 5, o);
            const ExtReal x = linear || rng.chance(1, 4) ? ExtReal::plus_infinity() : ExtReal(random_rational(rng, -3, 3, 4));
            rec.inputs() = {{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"map", to_json(g)}, {"pole", x.to_string()}};
            const ContinuousIsometry T(g, x);
            const Scalar before = kuiper_distance(mu, nu);
            const Scalar after = kuiper_distance(T(mu), T(nu));
            if (linear) {
                rec.require(before.exact && after.exact && before.value == after.value, "distance preserved exactly",
                            str(before), str(after));
            } else {
                rec.require(same(before, after, 1e-9), "distance preserved", str(before), str(after));
            }
            if (!before.exact || !after.exact) rec.inexact();
        });
    }
}

void suite_general_isometry(VerifyReport& r, std::size_t trials) {
    Recorder rec(r);
    SplitMix64 base = stream(r.seed, "general-isometry");
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng = base.split();
        rec.trial(i, [&] {
            const Distribution mu = random_distribution(rng, kPiecewiseLinear);
            const Distribution nu = random_distribution(rng, kPiecewiseLinear);
            const MonotoneMap g = random_pwl_map(rng, 4, random_orientation(rng));
            rec.inputs() = {{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"map", to_json(g)}};
            const GeneralIsometry T(g);
            const Distribution tmu = T(mu);
            const Scalar before = kuiper_distance(mu, nu);
            const Scalar after = kuiper_distance(tmu, T(nu));
            if (!before.exact || !after.exact) rec.inexact();
            rec.require(before.exact && after.exact && before.value == after.value, "distance preserved exactly",
                        str(before), str(after));
            for (const auto& [t, m] : tmu.atoms()) {
                const Rational image = interval_mass(mu, Interval::point(g(t)));
                rec.require(image == m, "atom mass transported at " + t.to_string(), image.to_string(), m.to_string());
            }
            const MonotoneMap g_inv = invert(g);
            for (const auto& [y, m] : mu.atoms()) {
                const Rational pre = interval_mass(tmu, Interval::point(g_inv(y)));
                rec.require(pre == m, "atom mass pulled back from " + y.to_string(), m.to_string(), pre.to_string());
            }
        });
    }
    // μ∘(g∘r_x) has nowhere to put the mass at g(r_x(∞)) = g(0).
    SplitMix64 neg = stream(r.seed, "mass-deficiency");
    for (std::size_t i = 0; i < 100; ++i) {
        SplitMix64 rng = neg.split();
        rec.begin(trials + i);
        try {
            const ExtReal x(random_rational(rng, -3, 3, 4));
            const MonotoneMap g = rng.chance(1, 4) ? identity_map() : random_pwl_map(rng, 3, random_orientation(rng));
            const MonotoneMap composite = compose(g, r_map(x));
            const Rational p = g(Rational(0));
            const Distribution base_mu = random_distribution(rng, kGeneral);
            const Rational w(rng.range(1, 7), 8);
            const Distribution mu =
                base_mu.atom(p).is_zero() ? mix({{w, make_dirac(p)}, {Rational(1) - w, base_mu}}) : base_mu;
            rec.inputs() = {{"mu", to_json(mu)}, {"map", to_json(g)}, {"pole", x.to_string()}};
            bool raised = false;
            try {
                (void)pullback(mu, composite);
            } catch (const MassDeficiencyError& e) {
                raised = std::string_view(e.what()).find("atom at exceptional point " + p.to_string()) != std::string_view::npos;
            }
            rec.require(raised, "atom at the lost point raises mass deficiency", "MassDeficiencyError", "no error");
        } catch (const std::exception& e) {
            rec.require(false, "negative trial completes", "no exception", e.what());
        }
    }
}

Interval random_interval(SplitMix64& rng, const Distribution& mu) {
    const auto& nodes = mu.nodes();
    auto endpoint = [&] {
        return rng.chance(2, 3) ? nodes[rng.below(nodes.size())] : random_rational(rng, -4, 8, 4);
    };
    for (int attempt = 0; attempt < 50; ++attempt) {
        const unsigned kind = static_cast<unsigned>(rng.below(4));
        Interval I = Interval::whole_line();
        if (kind <= 1) {
            Rational a = endpoint();
            Rational b = endpoint();
            if (b < a) std::swap(a, b);
            I = Interval::closed(a, b);
        } else if (kind == 2) {
            I = Interval(endpoint(), ExtReal::plus_infinity(), true, false);
        } else {
            I = Interval(ExtReal::minus_infinity(), endpoint(), false, true);
        }
        if (interval_mass(mu, I).sign() > 0) return I;
    }
    return Interval::whole_line();
}

void suite_conditioning(VerifyReport& r, std::size_t trials) {
    Recorder rec(r);
    SplitMix64 base = stream(r.seed, "conditioning");
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng = base.split();
        rec.trial(i, [&] {
            const Distribution mu = random_distribution(rng, kGeneral);
            const Interval I = random_interval(rng, mu);
            rec.inputs() = {{"mu", to_json(mu)}, {"interval", I.to_string()}};
            const Scalar floor = exact(Rational(1) - interval_mass(mu, I));
            const Scalar d = kuiper_distance(mu, condition_on_interval(mu, I));
            if (!d.exact) rec.inexact();
            rec.require(d.exact && d.value == floor.value, "distance to conditioned measure is 1 - mu(I)", str(floor), str(d));
            const std::vector<Rational> pts = points_within(I);
            for (int k = 0; k < 20; ++k) {
                const Distribution theta = random_on_points(rng, pts);
                const Scalar dt = kuiper_distance(mu, theta);
                if (!dt.exact) rec.inexact();
                // An inexact distance is still attained at a rational point,
                // so it bounds the true value from below: compare exactly.
                if (!(floor.value <= dt.value)) {
                    rec.inputs()["theta"] = to_json(theta);
                    rec.require(false, "measures on I are at least 1 - mu(I) away", ">= " + str(floor), str(dt));
                }
            }
        });
    }
}

void suite_dirac(VerifyReport& r, std::size_t trials) {
    Recorder rec(r);
    SplitMix64 base = stream(r.seed, "dirac");
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng = base.split();
        rec.trial(i, [&] {
            const Distribution mu = random_distribution(rng, kGeneral);
            const auto atoms = mu.atoms();
            Rational x;
            if (!atoms.empty() && rng.chance(1, 2)) {
                x = atoms[rng.below(atoms.size())].first;
            } else if (rng.chance(1, 2)) {
                x = mu.nodes()[rng.below(mu.nodes().size())];
            } else {
                x = random_rational(rng, -4, 8, 4);
            }
            rec.inputs() = {{"mu", to_json(mu)}, {"x", x.to_string()}};
            const Rational expected = Rational(1) - mu.atom(x);
            const Rational closed_form = dirac_distance(mu, x);
            const Scalar d = kuiper_distance(mu, make_dirac(x));
            if (!d.exact) rec.inexact();
            rec.require(closed_form == expected, "dirac_distance = 1 - mu({x})", expected.to_string(), closed_form.to_string());
            rec.require(d.value == expected, "kuiper(mu, delta_x) = 1 - mu({x})", expected.to_string(), str(d));
        });
    }
}

// Candidates for ν against μ: unrelated measures, probes, measures placed
// in a region of μ (endpoints included, so open ends get hit), and Dirac
// measures on and off μ's atoms.
Distribution random_partner(SplitMix64& rng, const Distribution& mu) {
    const auto atoms = mu.atoms();
    switch (rng.below(5)) {
        case 0: return random_distribution(rng, kGeneral);
        case 1: {
            const auto probes = unit_distance_probes(mu);
            if (probes.empty()) return random_distribution(rng, kGeneral);
            return probes[rng.below(probes.size())];
        }
        case 2: {
            if (mu.is_dirac()) return random_on_points(rng, interval_points(Interval::closed(atoms[0].first - 1, atoms[0].first + 1)));
            const UnitDistanceRegions reg = unit_distance_regions(mu);
            std::vector<Interval> regions = reg.outer;
            regions.insert(regions.end(), reg.gaps.begin(), reg.gaps.end());
            if (regions.empty()) return random_distribution(rng, kGeneral);
            return random_on_points(rng, interval_points(regions[rng.below(regions.size())]));
        }
        case 3:
            if (!atoms.empty()) return make_dirac(atoms[rng.below(atoms.size())].first);
            [[fallthrough]];
        default: return make_dirac(random_rational(rng, -4, 8, 4));
    }
}

void suite_unit_distance(VerifyReport& r, std::size_t trials) {
    Recorder rec(r);
    SplitMix64 base = stream(r.seed, "unit-distance");
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng = base.split();
        rec.trial(i, [&] {
            const Distribution mu = rng.chance(1, 6) ? make_dirac(random_rational(rng, -3, 3, 2))
                                                     : random_distribution(rng, kGeneral);
            const Distribution nu = random_partner(rng, mu);
            rec.inputs() = {{"mu", to_json(mu)}, {"nu", to_json(nu)}};
            const bool decided = is_unit_distant(mu, nu);
            // Distance 1 is always attained at breakpoints, and an inexact
            // value is an attained lower bound, so the exact test is sound.
            const Scalar d = kuiper_distance(mu, nu);
            if (!d.exact) rec.inexact();
            rec.require(decided == (d.value == Rational(1)), "characterization agrees with the distance",
                        std::string("distance ") + str(d), decided ? "unit distant" : "not unit distant");
            rec.require(is_unit_distant(nu, mu) == decided, "characterization symmetric", decided ? "true" : "false",
                        decided ? "false" : "true");
        });
    }
}

void suite_quantization(VerifyReport& r, std::size_t trials) {
    Recorder rec(r);
    {
        rec.begin(0);
        const Scalar d = kuiper_distance(make_uniform(0, 1), quantize(make_uniform(0, 1), 4));
        rec.require(d.exact && d.value == Rational(1, 4), "quantize(U[0,1], 4) at distance 1/4", "1/4 exact", str(d));
    }
    SplitMix64 base = stream(r.seed, "quantization");
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng = base.split();
        rec.trial(i, [&] {
            const Distribution mu = random_distribution(rng, kGeneral);
            rec.inputs() = {{"mu", to_json(mu)}};
            for (std::size_t n : {4, 16, 256}) {
                const Scalar d = kuiper_distance(mu, quantize(mu, n));
                if (!d.exact) rec.inexact();
                const Scalar bound = exact(Rational(2, static_cast<long>(n)));
                rec.require(leq(d, bound, 1e-30), "quantization bound for n=" + std::to_string(n), "<= " + str(bound), str(d));
            }
        });
    }
}

void suite_circle(VerifyReport& r, std::size_t trials) {
    constexpr double eps = 1e-6;
    Recorder rec(r);
    SplitMix64 base = stream(r.seed, "circle");
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng = base.split();
        rec.trial(i, [&] {
            rec.inexact();
            const Distribution mu = random_distribution(rng, kAtomFree);
            const Distribution nu = random_distribution(rng, kAtomFree);
            const double theta = (2.0 * rng.unit() - 1.0) * std::numbers::pi;
            rec.inputs() = {{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"rotation", theta}};
            const CircleDistribution c1 = tau_transport(mu, eps);
            const CircleDistribution c2 = tau_transport(nu, eps);
            const double on_circle = circle_kuiper(c1, c2);
            const double on_line = kuiper_distance(mu, nu).to_double();
            rec.require(std::abs(on_circle - on_line) <= 2.0 * eps + 1e-9, "circle distance matches line distance",
                        std::to_string(on_line), std::to_string(on_circle));
            const double rotated = circle_kuiper(rotate(c1, theta), rotate(c2, theta));
            rec.require(std::abs(rotated - on_circle) <= 1e-12, "rotation invariance", std::to_string(on_circle),
                        std::to_string(rotated));
        });
    }
}

using SuiteFn = void (*)(VerifyReport&, std::size_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"max-attained", suite_max_attained},
        {"metric-chain", suite_metric_chain},
        {"continuous-isometry", suite_continuous_isometry},
        {"general-isometry", suite_general_isometry},
        {"conditioning", suite_conditioning},
        {"dirac", suite_dirac},
        {"unit-distance", suite_unit_distance},
        {"quantization", suite_quantization},
        {"circle", suite_circle},
    };
    return suites;
}

}  // namespace

std::size_t VerifyReport::failure_count() const {
    std::size_t n = failures.size();
    for (const auto& p : parts) n += p.failure_count();
    return n;
}

std::string VerifyReport::exactness() const { return std::to_string(exact) + "/" + std::to_string(checked) + " exact"; }

Json VerifyReport::to_json() const {
    Json fs = Json::array();
    for (const auto& f : failures) {
        fs.push_back({{"trial", f.trial}, {"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
    }
    Json j = {{"suite", suite},
              {"seed", seed},
              {"trials", trials},
              {"failure_count", failure_count()},
              {"failures", std::move(fs)},
              {"exactness", exactness()},
              {"wall_time_ms", wall_time_ms}};
    if (!parts.empty()) {
        Json ps = Json::array();
        for (const auto& p : parts) ps.push_back(p.to_json());
        j["suites"] = std::move(ps);
    }
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

VerifyReport run_verify(const std::string& name, std::uint64_t seed, std::size_t trials) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.suite = name;
    report.seed = seed;
    report.trials = trials;
    if (name == "all") {
        for (const auto& [suite, _] : registry()) {
            report.parts.push_back(run_verify(suite, seed, trials));
            report.exact += report.parts.back().exact;
            report.checked += report.parts.back().checked;
        }
    } else {
        const auto& reg = registry();
        const auto it = std::find_if(reg.begin(), reg.end(), [&name](const auto& e) { return e.first == name; });
        if (it == reg.end()) throw std::invalid_argument("unknown verify suite '" + name + "'");
        it->second(report, trials);
    }
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace kuiper
