#include "kuiper/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "detail.hpp"

namespace kuiper {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ValidationError(path + ": " + what);
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) fail(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

void allow_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [k, _] : obj.items()) {
        if (std::none_of(keys.begin(), keys.end(), [&k](const char* a) { return k == a; })) {
            fail(path, "unknown field \"" + k + "\"");
        }
    }
}

std::string number_text(const Json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    fail(path, "expected a number string, got " + v.dump());
}

Rational rational_at(const Json& obj, const std::string& path, const char* key) {
    const std::string p = path + "." + key;
    try {
        return Rational::parse(number_text(field(obj, path, key), p));
    } catch (const ValidationError& e) {
        if (std::string_view(e.what()).starts_with(p)) throw;
        fail(p, e.what());
    }
}

ExtReal ext_at(const Json& obj, const std::string& path, const char* key) {
    const std::string p = path + "." + key;
    try {
        return ExtReal::parse(number_text(field(obj, path, key), p));
    } catch (const ValidationError& e) {
        if (std::string_view(e.what()).starts_with(p)) throw;
        fail(p, e.what());
    }
}

double double_at(const Json& obj, const std::string& path, const char* key) {
    const std::string p = path + "." + key;
    const Json& v = field(obj, path, key);
    if (v.is_number()) return v.get<double>();
    const std::string text = number_text(v, p);
    char* end = nullptr;
    const double x = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(x)) fail(p, "malformed number '" + text + "'");
    return x;
}

const Json& array_or_empty(const Json& obj, const char* key, const std::string& path) {
    static const Json empty = Json::array();
    const auto it = obj.find(key);
    if (it == obj.end()) return empty;
    if (!it->is_array()) fail(path + "." + key, "expected an array");
    return *it;
}

std::string index_path(const char* key, std::size_t i) { return std::string(key) + "[" + std::to_string(i) + "]"; }

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Segment {
    ExtReal from;
    ExtReal to;
    std::optional<Rational> density;
    Moebius cdf;
    std::string path;
};

bool ext_less(const ExtReal& a, const ExtReal& b) { return a < b; }

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string(source) + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Line distributions

Distribution distribution_from_json(const Json& j) {
    allow_keys(j, "$", {"atoms", "segments"});

    std::vector<std::pair<Rational, Rational>> atoms;
    const Json& ja = array_or_empty(j, "atoms", "$");
    for (std::size_t i = 0; i < ja.size(); ++i) {
        const std::string p = "$." + index_path("atoms", i);
        allow_keys(ja[i], p, {"at", "mass"});
        Rational at = rational_at(ja[i], p, "at");
        Rational mass = rational_at(ja[i], p, "mass");
        if (mass.sign() <= 0) fail(p + ".mass", "atom mass must be positive");
        atoms.emplace_back(std::move(at), std::move(mass));
    }
    std::sort(atoms.begin(), atoms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < atoms.size(); ++i) {
        if (atoms[i].first == atoms[i - 1].first) fail("$.atoms", "two atoms at " + atoms[i].first.to_string());
    }

    std::vector<Segment> segs;
    const Json& js = array_or_empty(j, "segments", "$");
    for (std::size_t i = 0; i < js.size(); ++i) {
        const std::string p = "$." + index_path("segments", i);
        allow_keys(js[i], p, {"from", "to", "density", "moebius"});
        Segment s{ext_at(js[i], p, "from"), ext_at(js[i], p, "to"), std::nullopt, Moebius{}, p};
        if (!(s.from < s.to)) fail(p, "segment needs from < to");
        const bool has_density = js[i].contains("density");
        if (has_density == js[i].contains("moebius")) fail(p, "segment needs exactly one of \"density\" and \"moebius\"");
        if (has_density) {
            s.density = rational_at(js[i], p, "density");
            if (s.density->sign() < 0) fail(p + ".density", "density must be non-negative");
            if (s.density->sign() > 0 && !(s.from.is_finite() && s.to.is_finite())) {
                fail(p, "a positive density needs a bounded segment");
            }
        } else {
            const Json& m = js[i]["moebius"];
            const std::string mp = p + ".moebius";
            allow_keys(m, mp, {"a", "b", "c", "d"});
            s.cdf = Moebius{rational_at(m, mp, "a"), rational_at(m, mp, "b"), rational_at(m, mp, "c"), rational_at(m, mp, "d")};
            if (s.cdf.c.is_zero() && s.cdf.d.is_zero()) fail(mp, "c and d are both zero");
        }
        segs.push_back(std::move(s));
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return ext_less(x.from, y.from); });
    for (std::size_t i = 1; i < segs.size(); ++i) {
        if (segs[i].from < segs[i - 1].to) fail(segs[i].path, "overlaps " + segs[i - 1].path);
    }

    std::vector<Rational> nodes;
    for (const auto& [x, _] : atoms) nodes.push_back(x);
    for (const auto& s : segs) {
        if (s.from.is_finite()) nodes.push_back(s.from.value());
        if (s.to.is_finite()) nodes.push_back(s.to.value());
    }
    detail::sort_unique(nodes);
    if (nodes.empty()) fail("$", "no mass: the distribution needs atoms or segments");

    for (const auto& s : segs) {
        if (s.density) continue;
        for (const auto& [x, _] : atoms) {
            if (s.from < ExtReal(x) && ExtReal(x) < s.to) fail(s.path, "atom at " + x.to_string() + " lies inside a moebius segment");
        }
    }

    auto atom_at = [&atoms](const Rational& t) {
        const auto it = std::lower_bound(atoms.begin(), atoms.end(), t, [](const auto& a, const Rational& v) { return a.first < v; });
        return it != atoms.end() && it->first == t ? it->second : Rational(0);
    };

    std::vector<Moebius> pieces;
    Rational mass(0);  // μ((−∞, t_{k−1}]) at the left end of the current segment
    std::size_t next_seg = 0;
    for (std::size_t k = 0; k <= nodes.size(); ++k) {
        const ExtReal lo = k == 0 ? ExtReal::minus_infinity() : ExtReal(nodes[k - 1]);
        const ExtReal hi = k == nodes.size() ? ExtReal::plus_infinity() : ExtReal(nodes[k]);
        while (next_seg < segs.size() && !(lo < segs[next_seg].to)) ++next_seg;
        const Segment* cover = next_seg < segs.size() && !(lo < segs[next_seg].from) ? &segs[next_seg] : nullptr;

        Rational end = mass;
        if (!cover || (cover->density && cover->density->is_zero())) {
            pieces.push_back(Moebius::constant(mass));
        } else if (cover->density) {
            const Rational& rho = *cover->density;
            pieces.push_back(Moebius::affine(rho, mass - rho * lo.value()));
            end = mass + rho * (hi.value() - lo.value());
        } else {
            const Moebius& f = cover->cdf;
            const std::optional<Rational> start = lo.is_finite() ? f(ProjPoint{lo.value()}).finite : f.limit_at_infinity();
            if (!start || *start != mass) {
                fail(cover->path, "moebius CDF starts at " + (start ? start->to_string() : std::string("infinity")) +
                                      " but the mass to its left is " + mass.to_string() + " (undeclared atom?)");
            }
            const std::optional<Rational> stop = hi.is_finite() ? f(ProjPoint{hi.value()}).finite : f.limit_at_infinity();
            if (!stop) fail(cover->path, "moebius CDF is unbounded on the segment");
            pieces.push_back(f);
            end = *stop;
        }
        if (k == nodes.size()) {
            if (end != Rational(1)) fail("$", "total mass is " + end.to_string() + ", expected 1");
        } else {
            mass = end + atom_at(nodes[k]);
        }
    }
    try {
        return Distribution::from_pieces(std::move(nodes), std::move(pieces));
    } catch (const ValidationError& e) {
        fail("$", e.what());
    }
}

Json to_json(const Distribution& mu) {
    Json atoms = Json::array();
    for (const auto& [x, m] : mu.atoms()) atoms.push_back({{"at", x.to_string()}, {"mass", m.to_string()}});
    Json segs = Json::array();
    const auto& nodes = mu.nodes();
    for (std::size_t i = 0; i < mu.pieces().size(); ++i) {
        const Moebius& f = mu.pieces()[i];
        if (f.is_constant()) continue;
        const std::string from = i == 0 ? "-inf" : nodes[i - 1].to_string();
        const std::string to = i == nodes.size() ? "+inf" : nodes[i].to_string();
        if (f.is_affine()) {
            segs.push_back({{"from", from}, {"to", to}, {"density", f.a.to_string()}});
        } else {
            segs.push_back({{"from", from},
                            {"to", to},
                            {"moebius",
                             {{"a", f.a.to_string()}, {"b", f.b.to_string()}, {"c", f.c.to_string()}, {"d", f.d.to_string()}}}});
        }
    }
    return {{"atoms", std::move(atoms)}, {"segments", std::move(segs)}};
}

// ---------------------------------------------------------------------------
// Maps

MonotoneMap map_from_json(const Json& j) {
    if (j.is_object() && j.contains("r_pole")) {
        allow_keys(j, "$", {"r_pole"});
        return r_map(ext_at(j, "$", "r_pole"));
    }
    allow_keys(j, "$", {"orientation", "pieces"});
    const Json& o = field(j, "$", "orientation");
    if (!o.is_string() || (o != "inc" && o != "dec")) fail("$.orientation", "expected \"inc\" or \"dec\"");
    const Json& jp = field(j, "$", "pieces");
    if (!jp.is_array() || jp.empty()) fail("$.pieces", "expected a non-empty array");

    std::vector<Rational> knots;
    std::vector<Moebius> pieces;
    ExtReal expected_from = ExtReal::minus_infinity();
    for (std::size_t i = 0; i < jp.size(); ++i) {
        const std::string p = "$." + index_path("pieces", i);
        allow_keys(jp[i], p, {"from", "to", "a", "b", "c", "d"});
        const ExtReal from = ext_at(jp[i], p, "from");
        const ExtReal to = ext_at(jp[i], p, "to");
        if (from != expected_from) fail(p + ".from", "pieces must tile the line in order; expected " + expected_from.to_string());
        if (!(from < to)) fail(p, "piece needs from < to");
        pieces.push_back({rational_at(jp[i], p, "a"), rational_at(jp[i], p, "b"), rational_at(jp[i], p, "c"),
                          rational_at(jp[i], p, "d")});
        if (pieces.back().c.is_zero() && pieces.back().d.is_zero()) fail(p, "c and d are both zero");
        if (to.is_finite()) knots.push_back(to.value());
        expected_from = to;
    }
    if (!expected_from.is_plus_infinity()) fail("$.pieces", "last piece must end at +inf");
    MonotoneMap g = [&] {
        try {
            return MonotoneMap::from_pieces(std::move(knots), std::move(pieces));
        } catch (const ValidationError& e) {
            fail("$.pieces", e.what());
        }
    }();
    if (o.get<std::string>() != to_string(g.orientation())) {
        fail("$.orientation", std::string("declared ") + o.get<std::string>() + " but the pieces are " + to_string(g.orientation()));
    }
    return g;
}

Json to_json(const MonotoneMap& g) {
    Json pieces = Json::array();
    for (const auto& [dom, f] : g.piece_list()) {
        pieces.push_back({{"from", dom.lo().to_string()},
                          {"to", dom.hi().to_string()},
                          {"a", f.a.to_string()},
                          {"b", f.b.to_string()},
                          {"c", f.c.to_string()},
                          {"d", f.d.to_string()}});
    }
    return {{"orientation", to_string(g.orientation())}, {"pieces", std::move(pieces)}};
}

// ---------------------------------------------------------------------------
// Circle distributions

CircleDistribution circle_from_json(const Json& j) {
    constexpr double pi = std::numbers::pi;
    allow_keys(j, "$", {"atoms", "segments"});
    auto check_angle = [](double a, const std::string& p) {
        if (a < -pi || a > pi) fail(p, "angle must lie in [-pi, pi]");
    };

    std::vector<std::pair<double, double>> atoms;
    const Json& ja = array_or_empty(j, "atoms", "$");
    for (std::size_t i = 0; i < ja.size(); ++i) {
        const std::string p = "$." + index_path("atoms", i);
        allow_keys(ja[i], p, {"angle", "mass"});
        double a = double_at(ja[i], p, "angle");
        check_angle(a, p + ".angle");
        if (a == pi) a = -pi;
        const double m = double_at(ja[i], p, "mass");
        if (!(m > 0.0)) fail(p + ".mass", "atom mass must be positive");
        atoms.emplace_back(a, m);
    }
    struct Arcseg {
        double from, to, density;
    };
    std::vector<Arcseg> segs;
    const Json& js = array_or_empty(j, "segments", "$");
    for (std::size_t i = 0; i < js.size(); ++i) {
        const std::string p = "$." + index_path("segments", i);
        allow_keys(js[i], p, {"from_angle", "to_angle", "density"});
        Arcseg s{double_at(js[i], p, "from_angle"), double_at(js[i], p, "to_angle"), double_at(js[i], p, "density")};
        check_angle(s.from, p + ".from_angle");
        check_angle(s.to, p + ".to_angle");
        if (!(s.from < s.to)) fail(p, "segment needs from_angle < to_angle");
        if (s.density < 0.0) fail(p + ".density", "density must be non-negative");
        segs.push_back(s);
    }
    std::sort(segs.begin(), segs.end(), [](const Arcseg& x, const Arcseg& y) { return x.from < y.from; });
    for (std::size_t i = 1; i < segs.size(); ++i) {
        if (segs[i].from < segs[i - 1].to) fail("$.segments", "segments overlap");
    }

    std::vector<double> angles{-pi, pi};
    for (const auto& [a, _] : atoms) angles.push_back(a);
    for (const auto& s : segs) {
        angles.push_back(s.from);
        angles.push_back(s.to);
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

    std::vector<CircleDistribution::Knot> knots;
    double mass = 0.0;
    for (std::size_t k = 0; k < angles.size(); ++k) {
        const double t = angles[k];
        if (k > 0) {
            const double mid = 0.5 * (angles[k - 1] + t);
            for (const auto& s : segs) {
                if (s.from <= mid && mid <= s.to) mass += s.density * (t - angles[k - 1]);
            }
        }
        double atom = 0.0;
        for (const auto& [a, m] : atoms) {
            if (a == t) atom += m;
        }
        knots.push_back({t, mass, mass + atom});
        mass += atom;
    }
    try {
        return CircleDistribution::from_knots(std::move(knots));
    } catch (const ValidationError& e) {
        fail("$", e.what());
    }
}

Json to_json(const CircleDistribution& c) {
    Json atoms = Json::array();
    Json segs = Json::array();
    const auto& knots = c.knots();
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const auto& k = knots[i];
        if (k.above - k.below > 0.0) atoms.push_back({{"angle", format_double(k.angle)}, {"mass", format_double(k.above - k.below)}});
        if (i + 1 < knots.size()) {
            const double rise = knots[i + 1].below - k.above;
            if (rise > 0.0) {
                segs.push_back({{"from_angle", format_double(k.angle)},
                                {"to_angle", format_double(knots[i + 1].angle)},
                                {"density", format_double(rise / (knots[i + 1].angle - k.angle))}});
            }
        }
    }
    return {{"atoms", std::move(atoms)}, {"segments", std::move(segs)}};
}

// ---------------------------------------------------------------------------

Json to_json(const Interval& i) { return i.to_string(); }

Json to_json(const Witness& w) {
    return {{"interval", w.interval.to_string()}, {"signed", w.signed_value.to_string()}, {"exact", w.exact}};
}

Distribution parse_distribution(std::string_view text, std::string_view source) {
    const Json j = parse_json(text, source);
    try {
        return distribution_from_json(j);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(source) + ": " + e.what());
    }
}

MonotoneMap parse_map(std::string_view text, std::string_view source) {
    const Json j = parse_json(text, source);
    try {
        return map_from_json(j);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(source) + ": " + e.what());
    }
}

CircleDistribution parse_circle(std::string_view text, std::string_view source) {
    const Json j = parse_json(text, source);
    try {
        return circle_from_json(j);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(source) + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }
std::string serialize(const Distribution& mu) { return dump(to_json(mu)); }
std::string serialize(const MonotoneMap& g) { return dump(to_json(g)); }
std::string serialize(const CircleDistribution& c) { return dump(to_json(c)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError(path + ": cannot write file");
    out << content;
    if (!out) throw ValidationError(path + ": write failed");
}

std::string format_scalar(const Scalar& s) {
    if (s.exact) return s.value.to_string() + " exact";
    return format_double(s.value.to_double()) + " approx";
}

}  // namespace kuiper
