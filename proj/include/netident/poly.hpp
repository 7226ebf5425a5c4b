#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "netident/errors.hpp"

namespace netident {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Univariate polynomial over arbitrary-precision rationals, coefficients in
/// ascending degree, normalized so the leading coefficient is nonzero. The
/// zero polynomial is the empty coefficient list.
class Poly {
public:
    Poly() = default;

    explicit Poly(Rational constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }

    Poly(std::initializer_list<Rational> ascending)
        : coeffs_(ascending) {
        trim();
    }

    static Poly from_coeffs(std::vector<Rational> ascending) {
        Poly p;
        p.coeffs_ = std::move(ascending);
        p.trim();
        return p;
    }

    /// The monomial c * x^k.
    static Poly monomial(Rational c, std::size_t k) {
        Poly p;
        if (c != 0) {
            p.coeffs_.assign(k + 1, Rational(0));
            p.coeffs_[k] = std::move(c);
        }
        return p;
    }

    static Poly one() { return Poly(Rational(1)); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is -1 here; callers that need the
    /// "deg 0 = -infinity" convention compare degrees only between nonzero
    /// polynomials or special-case zero first.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational leading() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return from_coeffs(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return from_coeffs(std::move(c));
    }

    friend Poly operator-(const Poly& a) {
        std::vector<Rational> c(a.coeffs_);
        for (auto& x : c) x = -x;
        return from_coeffs(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Rational& s) {
        if (s == 0) return Poly();
        std::vector<Rational> c(a.coeffs_);
        for (auto& x : c) x *= s;
        return from_coeffs(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with deg rem < deg divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw division_by_zero_error("polynomial division by zero");
        Poly rem = a;
        std::vector<Rational> q;
        if (a.degree() >= b.degree())
            q.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
        const Rational lead_inv = Rational(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
            const Rational factor = rem.leading() * lead_inv;
            q[shift] = factor;
            // rem -= factor * x^shift * b
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
                rem.coeffs_[i + shift] -= factor * b.coeffs_[i];
            rem.trim();
        }
        return {from_coeffs(std::move(q)), rem};
    }

    /// Monic greatest common divisor; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.make_monic();
    }

    Poly make_monic() const {
        if (is_zero() || is_monic()) return *this;
        return *this * (Rational(1) / leading());
    }

    std::string to_string(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            const Rational a = abs(c);
            if (k == 0 || a != 1) out += a.str();
            if (k > 0) {
                if (a != 1) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace netident
