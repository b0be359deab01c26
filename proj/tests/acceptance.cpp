// Runs every acceptance criterion at its stated size and tolerance and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "kuiper/metrics.hpp"
#include "kuiper/verify.hpp"

using namespace kuiper;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Outcome exact_fixtures() {
    const auto start = Clock::now();
    const WitnessResult k = kuiper_witness(make_uniform(0, 3), make_uniform(1, 2));
    const bool ok = k.distance.exact && k.distance.value == Rational(2, 3) &&
                    k.witness.interval == Interval::closed(Rational(1), Rational(2)) &&
                    ks_distance(make_uniform(0, 3), make_uniform(1, 2)).value == Rational(1, 3) &&
                    tv_distance(make_uniform(0, 2), make_uniform(1, 3)).value == Rational(1, 2) &&
                    kuiper_distance(make_uniform(0, 1), make_uniform(0, 2)).value == Rational(1, 2);
    const double ms = ms_since(start);
    char buf[96];
    std::snprintf(buf, sizeof buf, "fixtures %s in %.3f ms (limit 10 ms)", ok ? "exact" : "WRONG", ms);
    return {ok && ms < 10.0, buf};
}

Outcome suite(const std::string& name, std::size_t trials, const std::string& required_exactness = "") {
    const VerifyReport r = run_verify(name, kSeed, trials);
    bool ok = r.failure_count() == 0;
    if (!required_exactness.empty()) ok = ok && r.exactness() == required_exactness;
    std::string detail = name + " seed=" + std::to_string(kSeed) + " trials=" + std::to_string(trials) +
                         " failures=" + std::to_string(r.failure_count()) + " " + r.exactness();
    if (!ok && !r.failures.empty()) {
        const TrialFailure& f = r.failures.front();
        detail += "; first failure trial " + std::to_string(f.trial) + " " + f.check + ": expected " + f.expected +
                  ", got " + f.actual;
    }
    return {ok, detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact fixtures", exact_fixtures},
        {"maximum attained", [] { return suite("max-attained", 1000, "1000/1000 exact"); }},
        {"metric chain", [] { return suite("metric-chain", 1000); }},
        {"continuous isometries", [] { return suite("continuous-isometry", 500); }},
        {"general isometries", [] { return suite("general-isometry", 500); }},
        {"conditioning", [] { return suite("conditioning", 500); }},
        {"dirac distance", [] { return suite("dirac", 500); }},
        {"unit distance", [] { return suite("unit-distance", 1000); }},
        {"quantization", [] { return suite("quantization", 100); }},
        {"circle", [] { return suite("circle", 200); }},
    };

    const auto start = Clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2zu %-22s %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), ms_since(t0));
        std::fflush(stdout);
    }
    const double total = ms_since(start);
    std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                total / 1000.0);
    return failed == 0 ? 0 : 1;
}
