#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace planefock {

using Rational = mpq_class;

/// Exact element of Q(sqrt 2): rat + irr * sqrt(2).
class CoefScalar {
public:
    CoefScalar() = default;
    CoefScalar(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
    CoefScalar(Rational rat, Rational irr = 0);

    static CoefScalar sqrt2() { return CoefScalar(0, 1); }

    const Rational& rat_part() const { return rat_; }
    const Rational& sqrt2_part() const { return irr_; }

    bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
    bool is_rational() const { return sgn(irr_) == 0; }

    CoefScalar& operator+=(const CoefScalar& o);
    CoefScalar& operator-=(const CoefScalar& o);
    CoefScalar& operator*=(const CoefScalar& o);

    friend CoefScalar operator+(CoefScalar a, const CoefScalar& b) { return a += b; }
    friend CoefScalar operator-(CoefScalar a, const CoefScalar& b) { return a -= b; }
    friend CoefScalar operator*(CoefScalar a, const CoefScalar& b) { return a *= b; }
    CoefScalar operator-() const { return CoefScalar(-rat_, -irr_); }

    friend bool operator==(const CoefScalar& a, const CoefScalar& b) {
        return a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const CoefScalar& a, const CoefScalar& b) { return !(a == b); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    CoefScalar inverse() const;

    /// "3", "-1/2", "2*sqrt2", "1+sqrt2", "-3/4-1/2*sqrt2".
    std::string to_string() const;

private:
    Rational rat_{0};
    Rational irr_{0};
};

CoefScalar scalar_add(const CoefScalar& a, const CoefScalar& b);
CoefScalar scalar_mul(const CoefScalar& a, const CoefScalar& b);
CoefScalar scalar_neg(const CoefScalar& a);

/// Truncated formal series in q^(1/2). Exponents are stored doubled, so
/// q^(1/2) has key 1 and q has key 2. Terms above the cap are dropped.
/// Negative exponents are allowed (finite Laurent tails).
class QSeries {
public:
    using TermMap = std::map<int, CoefScalar>;

    explicit QSeries(int order_cap2 = 0) : cap2_(order_cap2) {}

    static QSeries zero(int cap2) { return QSeries(cap2); }
    static QSeries one(int cap2) { return monomial(cap2, 0, CoefScalar(1)); }
    /// c * q^(exp2/2).
    static QSeries monomial(int cap2, int exp2, const CoefScalar& c);

    int order_cap2() const { return cap2_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CoefScalar coefficient(int exp2) const;
    /// Lowest stored exponent; throws if the series is zero.
    int min_exponent2() const;

    /// Adds c * q^(exp2/2), dropping it above the cap and erasing zeros.
    void add_term(int exp2, const CoefScalar& c);

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const CoefScalar& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const CoefScalar& c) { return a *= c; }
    QSeries operator-() const;

    /// Multiplies by q^(shift2/2) and re-truncates.
    QSeries shifted(int shift2) const;
    /// Same terms, new cap (drops terms above it).
    QSeries with_cap(int cap2) const;

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.cap2_ == b.cap2_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    /// Text form, half-integer exponents as "k/2": "1 + 2*q^(1/2) - q".
    std::string to_string() const;

private:
    int cap2_;
    TermMap terms_;
};

/// Truncated Cauchy product. Throws std::invalid_argument on cap mismatch.
QSeries series_mul(const QSeries& f, const QSeries& g);

/// g with f*g = 1 up to the cap. f must have no negative exponents and a
/// nonzero constant term; throws std::domain_error otherwise.
QSeries series_inv_unit(const QSeries& f);

/// Renders a doubled exponent as "k" or "k/2".
std::string render_half_integer(int twice);

/// Parses "3", "-1/2", "1.5" style half-integers into doubled form.
int parse_half_integer(const std::string& text);

}  // namespace planefock
