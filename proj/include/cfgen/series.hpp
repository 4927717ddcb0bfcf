#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series over Rational.
 *
 * A Series carries its truncation order K explicitly: coefficients of
 * x^0..x^K are known, nothing is claimed beyond. Binary operations
 * truncate to the smaller order of their operands.
 */

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numerics.hpp"
#include "poly.hpp"

namespace cfgen {

/// Order of vanishing. When `at_least` is set every stored coefficient was
/// zero and the true order is only known to be >= value.
struct Order {
    std::size_t value = 0;
    bool at_least = false;

    bool meets(std::size_t required) const { return value >= required; }
    friend bool operator==(const Order&, const Order&) = default;

    std::string to_string() const {
        return at_least ? "at-least(" + std::to_string(value) + ")" : std::to_string(value);
    }
};

class Series {
public:
    /// Zero series valid through x^order.
    explicit Series(std::size_t order = 0) : coeffs_(order + 1) {}

    Series(std::vector<Rational> cs, std::size_t order) : coeffs_(std::move(cs)) { coeffs_.resize(order + 1); }

    /// Taylor expansion of a polynomial, truncated at `order`.
    Series(const Poly& p, std::size_t order) : coeffs_(order + 1) {
        for (std::size_t k = 0; k <= order; ++k) coeffs_[k] = p[k];
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational& operator[](std::size_t k) { return coeffs_.at(k); }

    Series truncate(std::size_t order) const {
        Series out(std::min(order, this->order()));
        std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
        return out;
    }

    Poly to_poly() const { return Poly(coeffs_); }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Series operator+(const Series& f, const Series& g) {
        Series r(std::min(f.order(), g.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = f.coeffs_[k] + g.coeffs_[k];
        return r;
    }
    friend Series operator-(const Series& f, const Series& g) { return f + (-g); }

    /// Cauchy product truncated at min(order_f, order_g).
    friend Series operator*(const Series& f, const Series& g) {
        Series r(std::min(f.order(), g.order()));
        const std::size_t n = r.order();
        for (std::size_t i = 0; i <= n; ++i) {
            if (f.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (g.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return r;
    }

    Series scale(const Rational& c) const {
        Series r = *this;
        for (auto& v : r.coeffs_) v *= c;
        return r;
    }

    friend bool operator==(const Series&, const Series&) = default;

    std::string to_string() const {
        std::string out = Poly(coeffs_).to_string();
        return out + " + O(x^" + std::to_string(order() + 1) + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

private:
    std::vector<Rational> coeffs_;
};

inline Series series_mul(const Series& f, const Series& g) { return f * g; }

/// g with f·g = 1 mod x^(order+1).
inline Series series_reciprocal(const Series& f) {
    if (f[0].is_zero()) throw division_by_zero();
    const std::size_t n = f.order();
    Series g(n);
    const Rational inv0 = Rational(1) / f[0];
    g[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i)
            if (!f[i].is_zero()) acc += f[i] * g[k - i];
        g[k] = -acc * inv0;
    }
    return g;
}

inline Series series_div(const Series& f, const Series& g) {
    if (g[0].is_zero()) throw division_by_zero();
    return f * series_reciprocal(g.truncate(f.order()));
}

/// Smallest degree with a nonzero coefficient.
inline Order series_order(const Series& f) {
    for (std::size_t k = 0; k <= f.order(); ++k)
        if (!f[k].is_zero()) return {k, false};
    return {f.order() + 1, true};
}

/// f(c·x)
inline Series series_rescale(const Series& f, const Rational& c) {
    Series r = f;
    Rational p(1);
    for (std::size_t k = 0; k <= f.order(); ++k) {
        r[k] *= p;
        p *= c;
    }
    return r;
}

/// f(x^k), truncated at `order`.
inline Series series_substitute_power(const Series& f, std::size_t k, std::size_t order) {
    Series r(order);
    for (std::size_t i = 0; i * k <= order && i <= f.order(); ++i) r[i * k] = f[i];
    if ((f.order() + 1) * k <= order) return r.truncate((f.order() + 1) * k - 1);
    return r;
}

enum class StockSeries { exp, expm1_over_x, log1p, log1p_over_x, cosh, sinh_over_x, arctan_over_x, geom, tanh_half };

inline StockSeries parse_stock_series(std::string_view name) {
    static constexpr std::pair<std::string_view, StockSeries> table[] = {
        {"exp", StockSeries::exp},
        {"expm1_over_x", StockSeries::expm1_over_x},
        {"log1p", StockSeries::log1p},
        {"log1p_over_x", StockSeries::log1p_over_x},
        {"cosh", StockSeries::cosh},
        {"sinh_over_x", StockSeries::sinh_over_x},
        {"arctan_over_x", StockSeries::arctan_over_x},
        {"geom", StockSeries::geom},
        {"tanh_half", StockSeries::tanh_half},
    };
    for (const auto& [n, s] : table)
        if (n == name) return s;
    throw usage_error("unknown stock series \"" + std::string(name) + "\"");
}

/// Exact Taylor coefficients of a few elementary functions, through x^order.
inline Series stock_series(StockSeries name, std::size_t order) {
    Series s(order);
    // 1/k! built incrementally
    std::vector<Rational> inv_fact(order + 2);
    inv_fact[0] = Rational(1);
    for (std::size_t k = 1; k < inv_fact.size(); ++k) inv_fact[k] = inv_fact[k - 1] / Rational(k);

    switch (name) {
    case StockSeries::exp:
        for (std::size_t k = 0; k <= order; ++k) s[k] = inv_fact[k];
        break;
    case StockSeries::expm1_over_x:
        for (std::size_t k = 0; k <= order; ++k) s[k] = inv_fact[k + 1];
        break;
    case StockSeries::log1p:
        for (std::size_t k = 1; k <= order; ++k) s[k] = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
        break;
    case StockSeries::log1p_over_x:
        for (std::size_t k = 0; k <= order; ++k) s[k] = Rational(k % 2 == 0 ? 1 : -1) / Rational(k + 1);
        break;
    case StockSeries::cosh:
        for (std::size_t k = 0; k <= order; k += 2) s[k] = inv_fact[k];
        break;
    case StockSeries::sinh_over_x:
        for (std::size_t k = 0; k <= order; k += 2) s[k] = inv_fact[k + 1];
        break;
    case StockSeries::arctan_over_x:
        for (std::size_t k = 0; k <= order; k += 2) s[k] = Rational(k % 4 == 0 ? 1 : -1) / Rational(k + 1);
        break;
    case StockSeries::geom:
        for (std::size_t k = 0; k <= order; ++k) s[k] = Rational(1);
        break;
    case StockSeries::tanh_half: {
        // sinh(x/2) / cosh(x/2), with sinh(x/2) = (x/2)·sinh_over_x(x/2)
        const Series sh = series_rescale(stock_series(StockSeries::sinh_over_x, order), Rational(1, 2));
        const Series ch = series_rescale(stock_series(StockSeries::cosh, order), Rational(1, 2));
        Series num(order);
        for (std::size_t k = 1; k <= order; ++k) num[k] = sh[k - 1] * Rational(1, 2);
        return series_div(num, ch);
    }
    }
    return s;
}

}  // namespace cfgen
