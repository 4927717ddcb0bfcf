#pragma once

/**
 * @file cf.hpp
 * @brief Generalized continued fractions with polynomial partial terms.
 *
 *   head + num_1/(den_1 + num_2/(den_2 + ...))
 *
 * Partial numerators are stored signed, so every fraction uses the same
 * recurrence
 *
 *   P_n = den_n P_{n-1} + num_n P_{n-2},   Q_n likewise,
 *
 * with P_{-1} = 1, Q_{-1} = 0, P_0 = head, Q_0 = 1 unless the fraction
 * overrides them. A fraction written with "-" between levels therefore
 * stores the negated displayed numerator.
 *
 * In matrix form (head 1; 1 0)(den_1 1; num_1 0)...(den_n 1; num_n 0)
 * = (P_n P_{n-1}; Q_n Q_{n-1}).
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numerics.hpp"
#include "poly.hpp"
#include "series.hpp"

namespace cfgen {

struct PartialTerm {
    Poly num;  // signed partial numerator
    Poly den;  // partial denominator
    friend bool operator==(const PartialTerm&, const PartialTerm&) = default;
};

/// Coefficients of the pure shape
///   1 - h_1 y/(g_1 + h_1 y - g_1 h_2 y/(g_2 + h_2 y - ...)),  y = x^power,
/// i.e. den_n = g_n + h_n y and num_n = -g_{n-1} h_n y with g_0 = 1.
/// Index 0 of `h` is unused.
struct GHForm {
    std::vector<Rational> g;
    std::vector<Rational> h;
    std::size_t power = 1;
};

enum class DisplaySign { minus, plus };

/// How Q_n and P_n are compared against the target series f.
enum class DefectContract {
    standard,    // Q_n f - P_n
    reciprocal,  // Q_n - P_n f
};

/// Required order of vanishing at index n: slope*n + intercept.
struct DefectLaw {
    std::size_t slope = 1;
    std::size_t intercept = 1;
    std::size_t at(std::size_t n) const { return slope * n + intercept; }
};

enum class CFShape {
    pure_gh,      // exactly the GHForm shape
    transformed,  // a linear fractional image of a pure_gh fraction
    irregular,
};

struct InitialConditions {
    Poly p_prev{1};
    Poly q_prev;
    Poly p0;
    Poly q0{1};
};

struct CFMeta {
    std::string family;  // family id, e.g. "bernoulli"
    std::string params;  // canonical "N=1,lambda=0" style parameter text
    DisplaySign display_sign = DisplaySign::minus;
    CFShape shape = CFShape::irregular;
    std::optional<GHForm> gh;
    DefectContract contract = DefectContract::standard;
    DefectLaw law;
};

class CFExpansion {
public:
    CFExpansion() = default;
    CFExpansion(Poly head, std::vector<PartialTerm> terms, CFMeta meta = {})
        : head_(std::move(head)), meta_(std::move(meta)) {
        init_ = {Poly(1), Poly(), head_, Poly(1)};
        for (auto& t : terms) {
            if (t.num.is_zero()) {
                terminated_ = true;
                break;
            }
            terms_.push_back(std::move(t));
        }
    }

    const Poly& head() const { return head_; }
    const std::vector<PartialTerm>& terms() const { return terms_; }
    const CFMeta& meta() const { return meta_; }
    CFMeta& meta() { return meta_; }
    const InitialConditions& initial() const { return init_; }
    void set_initial(InitialConditions init) { init_ = std::move(init); }

    /// Levels available (head excluded).
    std::size_t depth() const { return terms_.size(); }
    /// A zero partial numerator was met; the fraction is a finite rational function.
    bool terminated() const { return terminated_; }
    void mark_terminated() { terminated_ = true; }

private:
    Poly head_;
    std::vector<PartialTerm> terms_;
    bool terminated_ = false;
    InitialConditions init_;
    CFMeta meta_;
};

struct ConvergentPair {
    std::size_t index = 0;
    Poly P;
    Poly Q;
    friend bool operator==(const ConvergentPair&, const ConvergentPair&) = default;
};

/// Convergents 0..depth by the three-term recurrence.
inline std::vector<ConvergentPair> convergents(const CFExpansion& cf, std::size_t depth) {
    if (depth > cf.depth()) {
        if (cf.terminated()) throw terminated_error(depth, cf.depth());
        throw truncation_error("fraction was built with " + std::to_string(cf.depth()) +
                               " levels, " + std::to_string(depth) + " requested");
    }
    std::vector<ConvergentPair> out;
    out.reserve(depth + 1);
    Poly p_prev = cf.initial().p_prev;
    Poly q_prev = cf.initial().q_prev;
    Poly p = cf.initial().p0;
    Poly q = cf.initial().q0;
    out.push_back({0, p, q});
    for (std::size_t n = 1; n <= depth; ++n) {
        const PartialTerm& t = cf.terms()[n - 1];
        Poly p_next = t.den * p + t.num * p_prev;
        Poly q_next = t.den * q + t.num * q_prev;
        p_prev = std::exchange(p, std::move(p_next));
        q_prev = std::exchange(q, std::move(q_next));
        out.push_back({n, p, q});
    }
    return out;
}

/// P_n = g_1...g_n,  Q_n = g_1...g_n Σ_{j<=n} (h_1...h_j)/(g_1...g_j) y^j.
inline std::vector<ConvergentPair> closed_form_convergents(const std::vector<Rational>& g,
                                                           const std::vector<Rational>& h, std::size_t depth,
                                                           std::size_t power = 1) {
    if (g.size() <= depth || h.size() <= depth)
        throw truncation_error("closed form needs g and h through index " + std::to_string(depth));
    std::vector<ConvergentPair> out;
    out.reserve(depth + 1);
    Rational g_prod(1);
    Rational h_prod(1);
    std::vector<Rational> ratio_sum{Rational(1)};
    for (std::size_t n = 0; n <= depth; ++n) {
        if (n > 0) {
            g_prod *= g[n];
            h_prod *= h[n];
            ratio_sum.push_back(h_prod / g_prod);
        }
        const Poly partial = Poly(ratio_sum).substitute_power(power);
        out.push_back({n, Poly(g_prod), partial.scale(g_prod)});
    }
    return out;
}

/// Order of Q_n f - P_n (or Q_n - P_n f under the reciprocal contract).
/// Throws when f is too short to certify the fraction's defect law at n.
inline Order approx_defect(const CFExpansion& cf, const Series& f, std::size_t n) {
    const std::size_t required = cf.meta().law.at(n);
    if (f.order() + 1 < required)
        throw truncation_error("target truncated at x^" + std::to_string(f.order()) + ", need x^" +
                               std::to_string(required - 1) + " to certify index " + std::to_string(n));
    const ConvergentPair pair = convergents(cf, n).back();
    const Series P(pair.P, f.order());
    const Series Q(pair.Q, f.order());
    const Series residual = cf.meta().contract == DefectContract::standard ? Q * f - P : Q - P * f;
    return series_order(residual);
}

/// Checks P_n Q_{n-1} - P_{n-1} Q_n = (P_0 Q_{-1} - P_{-1} Q_0) Π_{k<=n} (-num_k)
/// for every consecutive pair in `pairs` (which must start at index 0).
inline bool determinant_check(const std::vector<ConvergentPair>& pairs, const CFExpansion& cf) {
    const InitialConditions& init = cf.initial();
    Poly expected = init.p0 * init.q_prev - init.p_prev * init.q0;
    Poly p_prev = init.p_prev;
    Poly q_prev = init.q_prev;
    for (const auto& pair : pairs) {
        if (pair.index > 0) {
            if (pair.index > cf.depth()) return false;
            expected = expected * -cf.terms()[pair.index - 1].num;
        }
        if (pair.P * q_prev - p_prev * pair.Q != expected) return false;
        p_prev = pair.P;
        q_prev = pair.Q;
    }
    return true;
}

inline Rational eval_convergent(const ConvergentPair& pair, const Rational& x0) {
    const Rational q = pair.Q(x0);
    if (q.is_zero())
        throw pole_error("convergent " + std::to_string(pair.index) + " has a pole at x = " + x0.to_string());
    return pair.P(x0) / q;
}

/// Taylor expansion of P/Q through x^order.
inline Series convergent_taylor(const ConvergentPair& pair, std::size_t order) {
    if (pair.Q[0].is_zero())
        throw pole_error("convergent " + std::to_string(pair.index) + " has Q(0) = 0; no Taylor expansion");
    return series_div(Series(pair.P, order), Series(pair.Q, order));
}

/// Human-readable nested form, showing `levels` levels.
inline std::string render(const CFExpansion& cf, std::size_t levels, const char* var = "x") {
    levels = std::min(levels, cf.depth());
    std::string tail;
    for (std::size_t k = levels; k-- > 0;) {
        const PartialTerm& t = cf.terms()[k];
        const bool negative = t.num.lowest_coeff().sign() < 0;
        const Poly shown = negative ? -t.num : t.num;
        const bool more = k + 1 < levels || (k + 1 == levels && k + 1 < cf.depth());
        std::string inner = t.den.to_string(var);
        if (!tail.empty()) inner += tail;
        else if (more) inner += " ...";
        tail = std::string(negative ? " - " : " + ") + "(" + shown.to_string(var) + ")/(" + inner + ")";
    }
    if (cf.head().is_zero() && tail.starts_with(" + ")) return tail.substr(3);
    if (cf.head().is_zero() && tail.starts_with(" - ")) return "-" + tail.substr(3);
    return cf.head().to_string(var) + tail;
}

}  // namespace cfgen
