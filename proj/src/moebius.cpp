#include "kuiper/moebius.hpp"

namespace kuiper {

Moebius compose(const Moebius& o, const Moebius& i) {
    return {o.a * i.a + o.b * i.c, o.a * i.b + o.b * i.d, o.c * i.a + o.d * i.c, o.c * i.b + o.d * i.d};
}

Moebius Moebius::through(const Rational& x1, const Rational& x2, const Rational& x3,
                         const Rational& y1, const Rational& y2, const Rational& y3) {
    // Each triple goes to (0, 1, ∞) first; the answer is the second map
    // inverted after the first.
    auto to_standard = [](const Rational& p1, const Rational& p2, const Rational& p3) {
        return Moebius{p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1)};
    };
    const Moebius m = compose(to_standard(y1, y2, y3).inverse(), to_standard(x1, x2, x3));
    if (m.det().is_zero()) throw ValidationError("Moebius::through needs distinct points");
    return m.normalized();
}

std::optional<Rational> Moebius::pole() const {
    if (c.is_zero()) return std::nullopt;
    return -d / c;
}

Rational Moebius::operator()(const Rational& t) const {
    if (c.is_zero() && d == Rational(1)) return a.is_zero() ? b : a * t + b;
    const Rational den = c * t + d;
    if (den.is_zero()) throw std::domain_error("Moebius evaluated at its pole");
    return (a * t + b) / den;
}

double Moebius::eval(double t) const {
    return (a.to_double() * t + b.to_double()) / (c.to_double() * t + d.to_double());
}

ProjPoint Moebius::operator()(const ProjPoint& t) const {
    if (t.is_infinity()) {
        if (auto l = limit_at_infinity()) return {*l};
        return ProjPoint::infinity();
    }
    const Rational den = c * *t.finite + d;
    if (den.is_zero()) return ProjPoint::infinity();
    return {(a * *t.finite + b) / den};
}

std::optional<Rational> Moebius::limit_at_infinity() const {
    if (!c.is_zero()) return a / c;
    if (a.is_zero()) return b / d;
    return std::nullopt;
}

Moebius Moebius::normalized() const {
    if (c.is_zero() && d.is_zero()) throw ValidationError("Moebius with vanishing denominator");
    if (det().is_zero()) return constant(c.is_zero() ? b / d : a / c);
    if ((c.is_zero() && d == Rational(1)) || c == Rational(1)) return *this;
    const Rational& s = c.is_zero() ? d : c;
    return {a / s, b / s, c / s, d / s};
}

bool Moebius::same_function(const Moebius& other) const {
    const Moebius p = normalized();
    const Moebius q = other.normalized();
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
}

std::string Moebius::to_string() const {
    return "(" + a.to_string() + "*t+" + b.to_string() + ")/(" + c.to_string() + "*t+" + d.to_string() + ")";
}

std::optional<Moebius> sum_in_class(const Moebius& p0, const Moebius& q0) {
    const Moebius p = p0.normalized();
    const Moebius q = q0.normalized();
    if (p.is_constant()) return q.plus(p.b).normalized();
    if (q.is_constant()) return p.plus(q.b).normalized();
    if (p.c == q.c && p.d == q.d) return Moebius{p.a + q.a, p.b + q.b, p.c, p.d}.normalized();
    return std::nullopt;
}

}  // namespace kuiper
