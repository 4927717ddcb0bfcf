#pragma once

/**
 * @file sequences.hpp
 * @brief Coefficient streams and named number families.
 *
 * The hypergeometric generators feed the continued fraction builders and
 * target series. named_numbers() goes through the elementary stock series
 * instead, so the two routes can be compared against each other.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "numerics.hpp"
#include "series.hpp"

namespace cfgen {

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

/// n!! (product of every other integer down to 1 or 2); 0!! = 1.
inline Integer double_factorial(unsigned long n) {
    Integer out;
    mpz_2fac_ui(out.get_mpz_t(), n);
    return out;
}

/// (x|r)_n = x(x-r)...(x-(n-1)r), with (x|r)_0 = 1.
inline Rational gen_falling(const Rational& x, const Rational& r, std::size_t n) {
    Rational acc(1);
    for (std::size_t i = 0; i < n; ++i) acc *= x - r * Rational(i);
    return acc;
}

/// (x|r)^(n) = x(x+r)...(x+(n-1)r), with (x|r)^(0) = 1.
inline Rational gen_rising(const Rational& x, const Rational& r, std::size_t n) {
    return gen_falling(x, -r, n);
}

struct BernoulliHyp {
    long N = 1;
    Rational lambda;
};
struct CauchyHyp {
    long N = 1;
    Rational lambda;
};

/// Coefficients of 2F1(1, N-1/λ; N+1; -λx) = Σ (1-Nλ|λ)_n / (N+n)_n x^n.
/// At λ = 0 the coefficients reduce to N!/(N+n)!.
inline Series hyp2f1_coeffs(const BernoulliHyp& p, std::size_t order) {
    Series s(order);
    const Rational N(p.N);
    Rational top(1);
    Rational bottom(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            top *= Rational(1) - (N + Rational(n - 1)) * p.lambda;
            bottom *= N + Rational(n);
        }
        s[n] = top / bottom;
    }
    return s;
}

/// Coefficients of 2F1(1, N-λ; N+1; -x) = Σ (λ-N)_n N!/(N+n)! x^n.
inline Series hyp2f1_coeffs(const CauchyHyp& p, std::size_t order) {
    Series s(order);
    const Rational N(p.N);
    Rational top(1);
    Rational bottom(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            top *= p.lambda - N - Rational(n - 1);
            bottom *= N + Rational(n);
        }
        s[n] = top / bottom;
    }
    return s;
}

enum class EulerKind { first, second };

/// first:  Σ (2N)!   x^(2n) / (2N+2n)!
/// second: Σ (2N+1)! x^(2n) / (2N+2n+1)!
/// Stored as a series in x; odd coefficients are zero.
inline Series hyp1f2_coeffs(EulerKind kind, long N, std::size_t order) {
    Series s(order);
    const long shift = kind == EulerKind::first ? 0 : 1;
    Rational term(1);
    for (std::size_t k = 0; k <= order; k += 2) {
        if (k > 0) {
            const long top = 2 * N + static_cast<long>(k) + shift;
            term /= Rational(top * (top - 1));
        }
        s[k] = term;
    }
    return s;
}

enum class NamedFamily { bernoulli, cauchy, euler, euler2, harmonic };

struct HarmonicParams {
    long m = 1;
    Rational a{1};
    Rational b{1};
};

/// Classical numbers 0..n_max computed without any continued fraction:
/// B_n from x/(e^x-1), c_n from x/log(1+x), E_n from 1/cosh x,
/// Ê_n from x/sinh x, h_n^(m)(a,b) as partial sums.
inline std::vector<Rational> named_numbers(NamedFamily family, std::size_t n_max, const HarmonicParams& h = {}) {
    std::vector<Rational> out(n_max + 1);
    if (family == NamedFamily::harmonic) {
        Rational acc;
        for (std::size_t n = 1; n <= n_max; ++n) {
            acc += Rational(1) / ((Rational(n - 1) * h.a + h.b).pow(h.m));
            out[n] = acc;
        }
        return out;
    }
    StockSeries base = StockSeries::expm1_over_x;
    switch (family) {
    case NamedFamily::bernoulli: base = StockSeries::expm1_over_x; break;
    case NamedFamily::cauchy: base = StockSeries::log1p_over_x; break;
    case NamedFamily::euler: base = StockSeries::cosh; break;
    case NamedFamily::euler2: base = StockSeries::sinh_over_x; break;
    case NamedFamily::harmonic: break;
    }
    const Series r = series_reciprocal(stock_series(base, n_max));
    for (std::size_t n = 0; n <= n_max; ++n) out[n] = r[n] * Rational(factorial(n));
    return out;
}

/// μ(1..n_max) from a linear sieve. Index 0 is unused.
class MoebiusTable {
public:
    explicit MoebiusTable(std::size_t n_max) : mu_(n_max + 1, 0) {
        if (n_max < 1) throw usage_error("moebius table needs n_max >= 1");
        std::vector<std::size_t> primes;
        std::vector<bool> composite(n_max + 1, false);
        mu_[1] = 1;
        for (std::size_t i = 2; i <= n_max; ++i) {
            if (!composite[i]) {
                primes.push_back(i);
                mu_[i] = -1;
            }
            for (std::size_t p : primes) {
                if (i * p > n_max) break;
                composite[i * p] = true;
                if (i % p == 0) {
                    mu_[i * p] = 0;
                    break;
                }
                mu_[i * p] = static_cast<std::int8_t>(-mu_[i]);
            }
        }
    }

    std::size_t size() const { return mu_.size() - 1; }
    int operator()(std::size_t n) const { return mu_.at(n); }

private:
    std::vector<std::int8_t> mu_;
};

inline MoebiusTable moebius_sieve(std::size_t n_max) { return MoebiusTable(n_max); }

}  // namespace cfgen
