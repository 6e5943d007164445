#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Z, Z/m and Q, truncated power
 * series, and reduced rational functions over Q.
 *
 * A polynomial carries its ring descriptor. Binary operations between
 * polynomials over different moduli throw ring_mismatch.
 */

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pvx/errors.hpp"
#include "pvx/numeric.hpp"

namespace pvx {

/// Degree reported for the zero polynomial.
inline constexpr long minus_infinity = std::numeric_limits<long>::min();

struct IntegerRing {
    using value_type = Integer;
    value_type normalize(value_type x) const { return x; }
    std::string name() const { return "ZZ"; }
    bool operator==(const IntegerRing&) const = default;
};

struct RationalField {
    using value_type = Rational;
    value_type normalize(value_type x) const {
        x.canonicalize();
        return x;
    }
    std::string name() const { return "QQ"; }
    bool operator==(const RationalField&) const = default;
};

class ModRing {
public:
    using value_type = Integer;

    explicit ModRing(Integer modulus) : modulus_(std::move(modulus)) {
        if (sgn(modulus_) <= 0) throw precondition_error("ModRing: modulus must be positive");
    }

    value_type normalize(const value_type& x) const { return mod(x, modulus_); }
    const Integer& modulus() const noexcept { return modulus_; }
    std::string name() const { return "Z/" + modulus_.get_str(); }
    bool operator==(const ModRing& o) const { return modulus_ == o.modulus_; }

private:
    Integer modulus_;
};

template <class Ring>
class Poly {
public:
    using value_type = typename Ring::value_type;

    explicit Poly(Ring ring = Ring{}) : ring_(std::move(ring)) {}

    Poly(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        for (auto& x : c_) x = ring_.normalize(x);
        trim();
    }

    static Poly constant(Ring ring, const value_type& c) { return Poly(std::move(ring), std::vector<value_type>{c}); }

    static Poly monomial(Ring ring, const value_type& c, std::size_t degree) {
        std::vector<value_type> v(degree + 1, value_type(0));
        v[degree] = c;
        return Poly(std::move(ring), std::move(v));
    }

    const Ring& ring() const noexcept { return ring_; }
    std::span<const value_type> coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return c_.empty() ? minus_infinity : static_cast<long>(c_.size()) - 1; }

    value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : value_type(0); }

    void set_coeff(std::size_t i, const value_type& v) {
        if (i >= c_.size()) c_.resize(i + 1, value_type(0));
        c_[i] = ring_.normalize(v);
        trim();
    }

    value_type leading() const { return c_.empty() ? value_type(0) : c_.back(); }

    template <class X>
    X evaluate(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_ring(a, b);
        std::vector<value_type> out(std::max(a.c_.size(), b.c_.size()), value_type(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Poly(a.ring_, std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        check_ring(a, b);
        std::vector<value_type> out(std::max(a.c_.size(), b.c_.size()), value_type(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
        return Poly(a.ring_, std::move(out));
    }

    Poly operator-() const {
        std::vector<value_type> out(c_);
        for (auto& x : out) x = -x;
        return Poly(ring_, std::move(out));
    }

    // Schoolbook product.
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_ring(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
        std::vector<value_type> out(a.c_.size() + b.c_.size() - 1, value_type(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (pvx::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(a.ring_, std::move(out));
    }

    friend Poly operator*(const value_type& s, const Poly& a) {
        std::vector<value_type> out(a.c_);
        for (auto& x : out) x *= s;
        return Poly(a.ring_, std::move(out));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

    /// Drop all terms of degree > cap.
    Poly truncated(long cap) const {
        if (cap < 0) return Poly(ring_);
        if (static_cast<long>(c_.size()) <= cap + 1) return *this;
        return Poly(ring_, std::vector<value_type>(c_.begin(), c_.begin() + cap + 1));
    }

    std::string str(const char* var = "z") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (pvx::is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[i].get_str() + ")";
            if (i > 0) out += std::string("*") + var + "^" + std::to_string(i);
        }
        return out;
    }

private:
    static void check_ring(const Poly& a, const Poly& b) {
        if (!(a.ring_ == b.ring_)) throw ring_mismatch("polynomials over " + a.ring_.name() + " and " + b.ring_.name());
    }

    void trim() {
        while (!c_.empty() && pvx::is_zero(c_.back())) c_.pop_back();
    }

    Ring ring_;
    std::vector<value_type> c_;
};

using ZPoly = Poly<IntegerRing>;
using QPoly = Poly<RationalField>;
using ModPoly = Poly<ModRing>;

inline ZPoly zpoly(std::vector<Integer> c) { return ZPoly(IntegerRing{}, std::move(c)); }
inline QPoly qpoly(std::vector<Rational> c) { return QPoly(RationalField{}, std::move(c)); }

/// a(z^e).
template <class Ring>
Poly<Ring> substitute_power(const Poly<Ring>& a, unsigned long e) {
    if (e == 0) throw precondition_error("substitute_power: exponent must be >= 1");
    if (a.is_zero() || e == 1) return a;
    using V = typename Ring::value_type;
    std::vector<V> out(static_cast<std::size_t>(a.degree()) * e + 1, V(0));
    auto c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out[i * e] = c[i];
    return Poly<Ring>(a.ring(), std::move(out));
}

template <class Ring>
bool is_palindromic(const Poly<Ring>& a) {
    auto c = a.coeffs();
    for (std::size_t i = 0, j = c.size(); i < j; ++i) {
        --j;
        if (i >= j) break;
        if (!(c[i] == c[j])) return false;
    }
    return true;
}

inline ModPoly reduce_mod(const ZPoly& a, const Integer& m) {
    auto c = a.coeffs();
    return ModPoly(ModRing(m), std::vector<Integer>(c.begin(), c.end()));
}

/// Integer polynomial with coefficients p-adically reduced into Z/m.
inline ModPoly reduce_mod(const QPoly& a, const Integer& m) {
    std::vector<Integer> out;
    for (const auto& x : a.coeffs()) {
        auto inv = invmod(Integer(x.get_den()), m);
        if (!inv) throw non_integral_error("reduce_mod: denominator of " + x.get_str() + " is not invertible mod " + m.get_str());
        out.push_back(Integer(x.get_num()) * *inv);
    }
    return ModPoly(ModRing(m), std::move(out));
}

inline QPoly to_rational(const ZPoly& a) {
    std::vector<Rational> out;
    for (const auto& x : a.coeffs()) out.emplace_back(x);
    return qpoly(std::move(out));
}

/// Truncated power series: coefficients beyond the cap are never reported.
template <class Ring>
class TruncSeries {
public:
    using value_type = typename Ring::value_type;

    TruncSeries(Poly<Ring> p, long cap) : cap_(cap), p_(p.truncated(cap)) {}

    long cap() const noexcept { return cap_; }
    const Poly<Ring>& poly() const noexcept { return p_; }
    value_type coeff(std::size_t i) const { return static_cast<long>(i) <= cap_ ? p_.coeff(i) : value_type(0); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const long cap = std::min(a.cap_, b.cap_);
        return TruncSeries(truncated_product(a.p_, b.p_, cap), cap);
    }
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        const long cap = std::min(a.cap_, b.cap_);
        return TruncSeries(a.p_ + b.p_, cap);
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        const long cap = std::min(a.cap_, b.cap_);
        return TruncSeries(a.p_ - b.p_, cap);
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.cap_ == b.cap_ && a.p_ == b.p_;
    }

    /// Multiplicative inverse; the constant term must be 1 or -1.
    TruncSeries inverse() const {
        const value_type c0 = p_.coeff(0);
        const Ring& ring = p_.ring();
        const value_type one = ring.normalize(value_type(1));
        const value_type minus_one = ring.normalize(value_type(-1));
        if (!(c0 == one) && !(c0 == minus_one))
            throw non_unit_error("TruncSeries::inverse: constant term must be +-1");
        std::vector<value_type> inv(static_cast<std::size_t>(cap_) + 1, value_type(0));
        inv[0] = c0;  // (+-1)^{-1} = +-1
        for (long n = 1; n <= cap_; ++n) {
            value_type acc(0);
            for (long i = 1; i <= n; ++i) acc += p_.coeff(static_cast<std::size_t>(i)) * inv[static_cast<std::size_t>(n - i)];
            inv[static_cast<std::size_t>(n)] = ring.normalize(-(c0 * acc));
        }
        return TruncSeries(Poly<Ring>(ring, std::move(inv)), cap_);
    }

private:
    static Poly<Ring> truncated_product(const Poly<Ring>& a, const Poly<Ring>& b, long cap) {
        if (a.is_zero() || b.is_zero() || cap < 0) return Poly<Ring>(a.ring());
        const std::size_t n = static_cast<std::size_t>(std::min<long>(cap, a.degree() + b.degree())) + 1;
        std::vector<value_type> out(n, value_type(0));
        auto ac = a.coeffs();
        auto bc = b.coeffs();
        for (std::size_t i = 0; i < ac.size() && i < n; ++i) {
            if (pvx::is_zero(ac[i])) continue;
            for (std::size_t j = 0; j < bc.size() && i + j < n; ++j) out[i + j] += ac[i] * bc[j];
        }
        return Poly<Ring>(a.ring(), std::move(out));
    }

    long cap_;
    Poly<Ring> p_;
};

/// Quotient and remainder over Q.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const long db = b.degree();
    const long da = a.degree();
    if (da < db) return {qpoly({}), a};
    std::vector<Rational> quo(static_cast<std::size_t>(da - db) + 1, Rational(0));
    const Rational lead = b.leading();
    auto bc = b.coeffs();
    for (long i = da; i >= db; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] / lead;
        c.canonicalize();
        quo[static_cast<std::size_t>(i - db)] = c;
        if (is_zero(c)) continue;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
    return {qpoly(std::move(quo)), qpoly(std::move(rem))};
}

inline QPoly monic(const QPoly& a) {
    if (a.is_zero()) return a;
    Rational inv = 1 / a.leading();
    return Rational(inv) * a;
}

inline QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Reduced rational function num/den over Q in one variable t.
class RatFun {
public:
    RatFun() : num_(qpoly({})), den_(qpoly({Rational(1)})) {}
    RatFun(const Rational& c) : num_(qpoly({c})), den_(qpoly({Rational(1)})) {}
    RatFun(long c) : RatFun(Rational(c)) {}
    RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero("RatFun: zero denominator");
        reduce();
    }

    /// The identity function t.
    static RatFun variable() { return RatFun(qpoly({Rational(0), Rational(1)}), qpoly({Rational(1)})); }

    const QPoly& numerator() const noexcept { return num_; }
    const QPoly& denominator() const noexcept { return den_; }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.num_.is_zero()) throw division_by_zero("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun operator-() const { return RatFun(-num_, den_); }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Rational evaluate(const Rational& t) const {
        Rational d = den_.evaluate(t);
        if (pvx::is_zero(d)) throw division_by_zero("RatFun: pole at evaluation point");
        Rational r = num_.evaluate(t) / d;
        r.canonicalize();
        return r;
    }

    friend bool is_zero(const RatFun& f) { return f.num_.is_zero(); }

private:
    // gcd-reduce and make the denominator monic.
    void reduce() {
        if (num_.is_zero()) {
            den_ = qpoly({Rational(1)});
            return;
        }
        QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = 1 / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    QPoly num_;
    QPoly den_;
};

/// f(0) on the reduced representation; removable singularities have already cancelled.
inline Rational ratfun_eval_at_zero(const RatFun& f) {
    Rational d = f.denominator().coeff(0);
    if (is_zero(d)) throw pole_at_zero("ratfun_eval_at_zero: reduced denominator vanishes at t = 0");
    Rational r = f.numerator().coeff(0) / d;
    r.canonicalize();
    return r;
}

}  // namespace pvx
