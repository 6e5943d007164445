#pragma once

/**
 * @file padic.hpp
 * @brief Exact rational, Z/p^s and p-adic helpers.
 *
 * Everything here is a value type or a pure function. Residues carry their
 * modulus so that mixing precisions is caught at runtime rather than
 * silently reducing to the smaller modulus.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pvx/errors.hpp"
#include "pvx/numeric.hpp"

namespace pvx {

/// The exponent parameter omega = r/q, kept in lowest terms with 0 < omega <= 1/2.
class OmegaParam {
public:
    OmegaParam(long r, long q) {
        if (r <= 0 || q <= 0) throw precondition_error("omega = r/q needs positive r and q");
        if (2 * r > q) throw precondition_error("omega = r/q must satisfy 2r <= q");
        auto g = static_cast<long>(gcd_u64(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(q)));
        r_ = r / g;
        q_ = q / g;
    }

    long r() const noexcept { return r_; }
    long q() const noexcept { return q_; }
    Rational value() const { return Rational(r_, q_); }
    std::string str() const { return std::to_string(r_) + "/" + std::to_string(q_); }

    auto operator<=>(const OmegaParam&) const = default;

private:
    long r_;
    long q_;
};

/// An odd prime p = ell*q + 1 together with a precision exponent s.
class PrimeData {
public:
    PrimeData(std::uint64_t p, unsigned s, const OmegaParam& omega) : p_(p), s_(s) {
        if (p < 3 || !is_prime(p) || (p - 1) % static_cast<std::uint64_t>(omega.q()) != 0)
            throw precondition_error("p must be an odd prime with p ≡ 1 mod q");
        if (s < 1) throw precondition_error("precision exponent s must be >= 1");
        ell_ = (p - 1) / static_cast<std::uint64_t>(omega.q());
    }

    std::uint64_t p() const noexcept { return p_; }
    unsigned s() const noexcept { return s_; }
    std::uint64_t ell() const noexcept { return ell_; }
    Integer modulus() const { return ipow(p_, s_); }
    PrimeData with_precision(unsigned s) const {
        PrimeData d = *this;
        if (s < 1) throw precondition_error("precision exponent s must be >= 1");
        d.s_ = s;
        return d;
    }

private:
    std::uint64_t p_;
    unsigned s_;
    std::uint64_t ell_ = 0;
};

/// An element of Z/p^s.
class Residue {
public:
    Residue(const Integer& value, std::uint64_t p, unsigned s)
        : modulus_(ipow(p, s)), p_(p), s_(s) {
        value_ = mod(value, modulus_);
    }

    const Integer& value() const noexcept { return value_; }
    const Integer& modulus() const noexcept { return modulus_; }
    std::uint64_t p() const noexcept { return p_; }
    unsigned s() const noexcept { return s_; }

    bool is_unit() const { return !divides(Integer(static_cast<unsigned long>(p_)), value_); }

    Residue inverse() const {
        auto inv = invmod(value_, modulus_);
        if (!inv) throw non_unit_error("residue " + value_.get_str() + " is not a unit mod " + modulus_.get_str());
        return {*inv, p_, s_};
    }

    Residue pow(const Integer& e) const {
        if (sgn(e) < 0) return inverse().pow(-e);
        return {powmod(value_, e, modulus_), p_, s_};
    }
    Residue pow(unsigned long e) const { return pow(Integer(e)); }

    friend Residue operator+(const Residue& a, const Residue& b) { return {a.value_ + check(a, b).value_, a.p_, a.s_}; }
    friend Residue operator-(const Residue& a, const Residue& b) { return {a.value_ - check(a, b).value_, a.p_, a.s_}; }
    friend Residue operator*(const Residue& a, const Residue& b) { return {a.value_ * check(a, b).value_, a.p_, a.s_}; }
    Residue operator-() const { return {-value_, p_, s_}; }

    friend bool operator==(const Residue& a, const Residue& b) { return a.value_ == check(a, b).value_; }

private:
    static const Residue& check(const Residue& a, const Residue& b) {
        if (a.p_ != b.p_ || a.s_ != b.s_)
            throw ring_mismatch("residues live in different rings Z/" + a.modulus_.get_str() + " and Z/" +
                                b.modulus_.get_str());
        return b;
    }

    Integer value_;
    Integer modulus_;
    std::uint64_t p_;
    unsigned s_;
};

/**
 * Pochhammer symbol with step: x(x+step)...(x+(d-1)step) for d > 0, 1 for d = 0
 * and 1/((x-step)(x-2step)...(x+d*step)) for d < 0.
 *
 * Works for any field-like T with is_zero(T) visible (Rational, RatFun).
 */
template <class T>
T pochhammer(const T& x, long d, const T& step) {
    T result(1);
    if (d >= 0) {
        T term = x;
        for (long i = 0; i < d; ++i) {
            result *= term;
            term += step;
        }
        return result;
    }
    T denom(1);
    T term = x;
    for (long i = 0; i < -d; ++i) {
        term -= step;
        if (is_zero(term)) throw division_by_zero("pochhammer: vanishing factor for negative index");
        denom *= term;
    }
    return result / denom;
}

/// Generalized binomial a(a-1)...(a-d+1)/d!.
inline Rational rational_binomial(const Rational& a, unsigned long d) {
    Rational num(1);
    for (unsigned long i = 0; i < d; ++i) num *= (a - Rational(static_cast<long>(i)));
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    Rational r = num / Rational(fact);
    r.canonicalize();
    return r;
}

/// Teichmüller lift of u in F_p to Z/p^s by Frobenius iteration t <- t^p.
inline Residue teichmuller_lift(std::uint64_t u, std::uint64_t p, unsigned s) {
    if (u >= p) throw precondition_error("teichmuller_lift: u must lie in [0, p)");
    if (s < 1) throw precondition_error("teichmuller_lift: s must be >= 1");
    Residue t(Integer(static_cast<unsigned long>(u)), p, s);
    // After i rounds t is fixed by Frobenius mod p^{i+1}.
    for (unsigned i = 1; i < s; ++i) t = t.pow(static_cast<unsigned long>(p));
    return t;
}

inline long padic_valuation(const Integer& x, std::uint64_t p) {
    if (is_zero(x)) throw undefined_valuation("p-adic valuation of zero is undefined");
    Integer pp(static_cast<unsigned long>(p));
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

inline long padic_valuation(const Rational& x, std::uint64_t p) {
    if (is_zero(x)) throw undefined_valuation("p-adic valuation of zero is undefined");
    return padic_valuation(Integer(x.get_num()), p) - padic_valuation(Integer(x.get_den()), p);
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool is_generator(std::uint64_t g, std::uint64_t p) {
    if (g == 0 || g >= p) return false;
    const Integer pp(static_cast<unsigned long>(p));
    for (auto f : prime_factors(p - 1))
        if (powmod(Integer(static_cast<unsigned long>(g)), Integer(static_cast<unsigned long>((p - 1) / f)), pp) == 1) return false;
    return true;
}

/// Smallest generator of F_p^x.
inline std::uint64_t find_generator(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw precondition_error("find_generator: p must be an odd prime");
    for (std::uint64_t g = 2; g < p; ++g)
        if (is_generator(g, p)) return g;
    throw internal_error("no generator found");
}

/// numerator * denominator^{-1} in Z/p^a.
inline Residue reduce_rational_mod(const Rational& x, std::uint64_t p, unsigned a) {
    const Integer pp(static_cast<unsigned long>(p));
    if (divides(pp, Integer(x.get_den())))
        throw non_integral_error("reduce_rational_mod: p divides the denominator of " + x.get_str());
    Residue num(Integer(x.get_num()), p, a);
    Residue den(Integer(x.get_den()), p, a);
    return num * den.inverse();
}

/// Legendre-symbol style quadratic character of u mod p: 0, 1 or -1.
inline int quadratic_character(const Integer& u, std::uint64_t p) {
    const Integer pp(static_cast<unsigned long>(p));
    Integer r = mod(u, pp);
    if (is_zero(r)) return 0;
    return mpz_legendre(r.get_mpz_t(), pp.get_mpz_t());
}

}  // namespace pvx
