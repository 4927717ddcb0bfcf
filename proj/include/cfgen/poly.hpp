#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "numerics.hpp"

namespace cfgen {

/// Dense univariate polynomial over Rational, ascending degree.
/// The zero polynomial stores no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(Rational c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    template <std::integral T>
    Poly(T c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    /// c·x^k
    static Poly monomial(Rational c, std::size_t k) {
        std::vector<Rational> cs(k + 1);
        cs[k] = std::move(c);
        return Poly(std::move(cs));
    }
    static Poly x() { return monomial(Rational(1), 1); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^k (zero past the degree).
    Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

    Rational operator()(const Rational& x0) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

    /// p(x^k)
    Poly substitute_power(std::size_t k) const {
        if (is_zero() || k == 1) return *this;
        std::vector<Rational> cs((coeffs_.size() - 1) * k + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i * k] = coeffs_[i];
        return Poly(std::move(cs));
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<Rational> cs(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = p[i] + q[i];
        return Poly(std::move(cs));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Rational> cs(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) cs[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
        return Poly(std::move(cs));
    }
    friend Poly operator*(const Rational& c, const Poly& p) { return p.scale(c); }

    Poly scale(const Rational& c) const {
        if (c.is_zero()) return {};
        Poly r = *this;
        for (auto& v : r.coeffs_) v *= c;
        return r;
    }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Lowest-degree nonzero coefficient; zero for the zero polynomial.
    Rational lowest_coeff() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return c;
        return {};
    }

    /// Human-readable form: "2+x", "12+x^2", "3-2x", "(1/2)x".
    std::string to_string(const char* var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c.is_zero()) continue;
            const Rational mag = c.abs();
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? "-" : "+";
            }
            if (k == 0) {
                out += mag.to_string();
                continue;
            }
            if (mag != Rational(1)) out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }

    /// Coefficients in the canonical rational text format.
    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.to_string());
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace cfgen
