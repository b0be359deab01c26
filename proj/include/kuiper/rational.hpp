#pragma once

// Exact scalars: arbitrary-precision rationals, the extended real line and
// a small closed-form quadratic solver.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kuiper {

/// Raised whenever user-supplied data violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}                        // NOLINT(implicit)
    Rational(int n) : q_(static_cast<long>(n)) {}      // NOLINT(implicit)
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "p/q", or a decimal literal such as "-0.125" or "3e-2".
    static Rational parse(std::string_view text);
    /// The exact value of a finite double.
    static Rational from_double(double x);

    const mpq_class& raw() const { return q_; }
    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Exact square root when this is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

private:
    mpq_class q_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// A point of ℝ ∪ {−∞, +∞}, totally ordered.
class ExtReal {
public:
    enum class Kind : std::uint8_t { minus_infinity, finite, plus_infinity };

    ExtReal() = default;
    ExtReal(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT(implicit)
    ExtReal(long v) : ExtReal(Rational(v)) {}                           // NOLINT(implicit)
    ExtReal(int v) : ExtReal(Rational(v)) {}                            // NOLINT(implicit)

    static ExtReal minus_infinity() { return ExtReal(Kind::minus_infinity); }
    static ExtReal plus_infinity() { return ExtReal(Kind::plus_infinity); }
    /// Accepts everything Rational::parse does plus "-inf", "+inf", "inf".
    static ExtReal parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_minus_infinity() const { return kind_ == Kind::minus_infinity; }
    bool is_plus_infinity() const { return kind_ == Kind::plus_infinity; }
    const Rational& value() const;
    double to_double() const;
    std::string to_string() const;

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
        if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
        if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

private:
    explicit ExtReal(Kind k) : kind_(k) {}
    Kind kind_ = Kind::finite;
    Rational value_;
};

/// A rational that may be a high-precision stand-in for an irrational
/// quantity. `exact == false` propagates through every computation that
/// consumed an approximate quadratic root.
struct Scalar {
    Rational value;
    bool exact = true;

    double to_double() const { return value.to_double(); }
};

struct QuadraticRoot {
    Rational value;  ///< exact root, or a rational within relative 1e-35 of it
    bool exact = true;
};

struct QuadraticSolution {
    bool identically_zero = false;      ///< a = b = c = 0: every t is a root
    std::vector<QuadraticRoot> roots;   ///< distinct real roots, ascending
};

/// Real roots of a·t² + b·t + c.
QuadraticSolution solve_quadratic(const Rational& a, const Rational& b, const Rational& c);

}  // namespace kuiper
