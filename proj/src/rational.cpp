#include "kuiper/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace kuiper {

namespace {

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

mpz_class parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!is_digits(body)) throw ValidationError("malformed integer '" + std::string(s) + "'");
    std::string text(s);
    if (text.front() == '+') text.erase(0, 1);
    return mpz_class(text, 10);
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        const mpz_class ez = parse_integer(s.substr(e + 1));
        if (!ez.fits_slong_p() || abs(ez) > 100000) throw ValidationError("exponent out of range in '" + std::string(text) + "'");
        exponent = ez.get_si();
        s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !is_digits(int_part)) ||
        (!frac_part.empty() && !is_digits(frac_part))) {
        throw ValidationError("malformed number '" + std::string(text) + "'");
    }
    mpz_class digits(std::string(int_part) + std::string(frac_part) + (int_part.empty() && frac_part.empty() ? "0" : ""), 10);
    long scale = exponent - static_cast<long>(frac_part.size());
    mpq_class q(digits);
    if (scale >= 0) {
        q *= pow10(static_cast<unsigned long>(scale));
    } else {
        q /= pow10(static_cast<unsigned long>(-scale));
    }
    q.canonicalize();
    return Rational(negative ? mpq_class(-q) : q);
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw ValidationError("zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ValidationError("empty number");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash));
        const mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    }
    return parse_decimal(text);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw ValidationError("non-finite double has no rational value");
    return Rational(mpq_class(x));
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_str();
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class& num = q_.get_num();
    const mpz_class& den = q_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

const Rational& ExtReal::value() const {
    if (kind_ != Kind::finite) throw std::logic_error("infinite ExtReal has no rational value");
    return value_;
}

double ExtReal::to_double() const {
    switch (kind_) {
    case Kind::minus_infinity: return -HUGE_VAL;
    case Kind::plus_infinity: return HUGE_VAL;
    case Kind::finite: break;
    }
    return value_.to_double();
}

std::string ExtReal::to_string() const {
    switch (kind_) {
    case Kind::minus_infinity: return "-inf";
    case Kind::plus_infinity: return "+inf";
    case Kind::finite: break;
    }
    return value_.to_string();
}

ExtReal ExtReal::parse(std::string_view text) {
    if (text == "-inf" || text == "-infinity") return minus_infinity();
    if (text == "+inf" || text == "inf" || text == "+infinity" || text == "infinity") return plus_infinity();
    return ExtReal(Rational::parse(text));
}

QuadraticSolution solve_quadratic(const Rational& a, const Rational& b, const Rational& c) {
    QuadraticSolution out;
    if (a.is_zero()) {
        if (b.is_zero()) {
            out.identically_zero = c.is_zero();
            return out;
        }
        out.roots.push_back({-c / b, true});
        return out;
    }
    const Rational disc = b * b - Rational(4) * a * c;
    if (disc.sign() < 0) return out;
    if (disc.is_zero()) {
        out.roots.push_back({-b / (Rational(2) * a), true});
        return out;
    }
    if (const auto s = disc.exact_sqrt()) {
        Rational r1 = (-b - *s) / (Rational(2) * a);
        Rational r2 = (-b + *s) / (Rational(2) * a);
        if (r2 < r1) std::swap(r1, r2);
        out.roots.push_back({std::move(r1), true});
        out.roots.push_back({std::move(r2), true});
        return out;
    }

    // Irrational pair: evaluate the cancellation-free form in 128-bit floats.
    constexpr mp_bitcnt_t bits = 128;
    const mpf_class fa(a.raw(), bits), fb(b.raw(), bits), fc(c.raw(), bits);
    const mpf_class s = sqrt(mpf_class(disc.raw(), bits));
    const mpf_class q = b.sign() >= 0 ? mpf_class(-(fb + s) / 2, bits) : mpf_class(-(fb - s) / 2, bits);
    const mpf_class f1(q / fa, bits);
    const mpf_class f2(fc / q, bits);
    Rational r1{mpq_class(f1)};
    Rational r2{mpq_class(f2)};
    if (r2 < r1) std::swap(r1, r2);
    out.roots.push_back({std::move(r1), false});
    out.roots.push_back({std::move(r2), false});
    return out;
}

}  // namespace kuiper
