#pragma once

/**
 * @file series2cf.hpp
 * @brief C-fraction extraction c_0 + a_1 x/(b_1 + a_2 x/(b_2 + ...)).
 *
 * Scheme: r_0 = f, b_0 = f(0). At step k the residual r_{k-1} - b_{k-1}
 * must start at x^1 with coefficient p/q (lowest terms, q > 0). Then
 * a_k = p, r_k = a_k x/(r_{k-1} - b_{k-1}) and b_k = r_k(0), which equals q.
 * Each step consumes one coefficient, so n steps need f through x^n.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numerics.hpp"
#include "series.hpp"

namespace cfgen {

struct StepPair {
    Integer a;   // partial numerator multiplier
    Rational b;  // partial denominator constant
    friend bool operator==(const StepPair&, const StepPair&) = default;
};

struct CFraction {
    Rational c0;
    std::vector<StepPair> steps;
    bool terminated = false;  // the residual vanished within the truncation
};

/// Raised when a residual starts at x^2 or later: no step of the form a x/(b + ...) exists.
class cfraction_shape_error : public shape_error {
public:
    cfraction_shape_error(std::size_t step, std::size_t residual_order)
        : shape_error("step " + std::to_string(step) + ": residual has order " + std::to_string(residual_order) +
                      " >= 2; no linear partial numerator"),
          step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

inline CFraction expand_cfraction(const Series& f, std::size_t depth) {
    if (f.order() < depth)
        throw truncation_error("series known through x^" + std::to_string(f.order()) + ", " +
                               std::to_string(depth) + " steps need x^" + std::to_string(depth));
    CFraction out;
    out.c0 = f[0];
    Series r = f;
    Rational b = out.c0;
    for (std::size_t k = 1; k <= depth; ++k) {
        Series residual = r;
        residual[0] -= b;
        const Order ord = series_order(residual);
        if (ord.at_least) {
            out.terminated = true;
            break;
        }
        if (ord.value >= 2) throw cfraction_shape_error(k, ord.value);
        const Rational lead = residual[1];
        // residual / x, one coefficient shorter
        Series shifted(residual.order() - 1);
        for (std::size_t i = 0; i <= shifted.order(); ++i) shifted[i] = residual[i + 1];
        const Integer a = lead.num();
        r = series_reciprocal(shifted).scale(Rational(a));
        b = r[0];
        out.steps.push_back({a, b});
    }
    return out;
}

/// Taylor series of c_0 + a_1 x/(b_1 + ... + a_n x/b_n), evaluated bottom-up.
inline Series reconstruct(const Rational& c0, const std::vector<StepPair>& steps, std::size_t order) {
    Series value(order);
    value[0] = c0;
    if (steps.empty()) return value;
    Series tail(order);
    tail[0] = steps.back().b;
    for (std::size_t k = steps.size(); k-- > 1;) {
        // tail <- b_{k-1} + a_k x / tail
        if (tail[0].is_zero()) throw division_by_zero();
        Series num(order);
        if (order >= 1) num[1] = Rational(steps[k].a);
        Series next = series_div(num, tail);
        next[0] += steps[k - 1].b;
        tail = std::move(next);
    }
    if (tail[0].is_zero()) throw division_by_zero();
    Series num(order);
    if (order >= 1) num[1] = Rational(steps.front().a);
    Series result = series_div(num, tail);
    result[0] += c0;
    return result;
}

inline Series reconstruct(const CFraction& cfr, std::size_t order) { return reconstruct(cfr.c0, cfr.steps, order); }

}  // namespace cfgen
