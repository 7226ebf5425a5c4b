#pragma once

#include <optional>
#include <string>
#include <utility>

#include "netident/poly.hpp"

namespace netident {

enum class Properness { StrictlyProper, ProperNotStrict, Improper };

/// Rational function p(z)/q(z) in canonical form: gcd(p,q) = 1 and q monic.
/// Equality is structural equality of canonical forms. The zero function is
/// 0/1 and classifies as strictly proper (deg 0 = -infinity convention).
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}

    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero_error("rational function with zero denominator");
        canonicalize();
    }

    explicit RatFunc(Rational constant) : num_(Poly(std::move(constant))), den_(Poly::one()) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rational(1)); }

    /// The identity function f(z) = z.
    static RatFunc z() { return RatFunc(Poly::monomial(Rational(1), 1), Poly::one()); }

    /// c / z^k, the workhorse of strictly proper sampling.
    static RatFunc over_z(Rational c, std::size_t k = 1) {
        return RatFunc(Poly(std::move(c)), Poly::monomial(Rational(1), k));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    Properness properness() const {
        if (is_zero()) return Properness::StrictlyProper;
        if (num_.degree() < den_.degree()) return Properness::StrictlyProper;
        if (num_.degree() == den_.degree()) return Properness::ProperNotStrict;
        return Properness::Improper;
    }

    bool is_proper() const { return properness() != Properness::Improper; }
    bool is_strictly_proper() const { return properness() == Properness::StrictlyProper; }

    /// lim_{z->inf} f(z); empty when f is improper (limit unbounded).
    std::optional<Rational> limit_at_infinity() const {
        switch (properness()) {
            case Properness::StrictlyProper: return Rational(0);
            case Properness::ProperNotStrict: return num_.leading() / den_.leading();
            case Properness::Improper: return std::nullopt;
        }
        return std::nullopt;
    }

    /// Exact evaluation; empty at poles of the canonical form.
    std::optional<Rational> eval(const Rational& x) const {
        const Rational d = den_.eval(x);
        if (d == 0) return std::nullopt;
        return num_.eval(x) / d;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw division_by_zero_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw division_by_zero_error("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string(const std::string& var = "z") const {
        if (den_ == Poly::one()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        if (!den_.is_monic()) {
            const Rational s = Rational(1) / den_.leading();
            num_ = num_ * s;
            den_ = den_ * s;
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace netident
