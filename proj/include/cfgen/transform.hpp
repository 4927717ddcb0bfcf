#pragma once

/**
 * @file transform.hpp
 * @brief Linear fractional maps β(v) = (a v + b)/(c v + d) acting on continued fractions.
 *
 * β acts on the convergent matrix (P_n P_{n-1}; Q_n Q_{n-1}) by left
 * multiplication. For a fraction with constant head a_0, let
 * C = c a_0 + d and Δ = ad - bc. The image fraction is
 *
 *   head  (a a_0 + b)/C
 *   den_1  C den_1 + c num_1
 *   num_1  (Δ/C) num_1
 *   num_2  C num_2
 *
 * with every other term unchanged. For the pure (g,h) shape this is
 * head (a+b)/(c+d), den_1 = (c+d) g_1 + d h_1 x, displayed numerators
 * ((ad-bc)/(c+d)) h_1 x and (c+d) g_1 h_2 x.
 */

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cf.hpp"
#include "errors.hpp"
#include "numerics.hpp"
#include "poly.hpp"
#include "series.hpp"

namespace cfgen {

struct LFTCoeffs {
    Rational a{1};
    Rational b;
    Rational c;
    Rational d{1};

    Rational det() const { return a * d - b * c; }
    /// (d, -b; -c, a)
    LFTCoeffs inverse() const { return {d, -b, -c, a}; }
};

/// 2x2 matrix of polynomials, row-major.
struct PolyMatrix {
    std::array<Poly, 4> e;

    const Poly& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
        return {{x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0), x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
                 x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0), x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1)}};
    }
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    Poly det() const { return e[0] * e[3] - e[1] * e[2]; }

    static PolyMatrix of(const LFTCoeffs& t) { return {{Poly(t.a), Poly(t.b), Poly(t.c), Poly(t.d)}}; }
    /// (a_0 1; 1 0)
    static PolyMatrix head_step(const Poly& head) { return {{head, Poly(1), Poly(1), Poly()}}; }
    /// (den 1; num 0); its determinant is -num.
    static PolyMatrix step(const PartialTerm& t) { return {{t.den, Poly(1), t.num, Poly()}}; }
};

inline PolyMatrix step_product(const CFExpansion& cf, std::size_t n) {
    PolyMatrix m = PolyMatrix::head_step(cf.head());
    for (std::size_t k = 0; k < n; ++k) m = m * PolyMatrix::step(cf.terms()[k]);
    return m;
}

/// Image of `cf` under t. Accepts the pure (g,h) shape and fractions already
/// produced by this function; other shapes raise shape_error.
inline CFExpansion lft_transform(const CFExpansion& cf, const LFTCoeffs& t) {
    if (cf.meta().shape == CFShape::irregular)
        throw shape_error("linear fractional transform needs a (g,h)-shape fraction; " + cf.meta().family +
                          " is irregular");
    if (!cf.head().is_constant()) throw shape_error("transform needs a constant head");
    const Rational delta = t.det();
    if (delta.is_zero()) throw usage_error("degenerate map: ad - bc = 0");
    const Rational a0 = cf.head()[0];
    const Rational C = t.c * a0 + t.d;
    if (C.is_zero()) throw usage_error("head undefined: c*a0 + d = 0");

    std::vector<PartialTerm> terms = cf.terms();
    if (!terms.empty()) {
        PartialTerm& first = terms[0];
        first.den = first.den.scale(C) + first.num.scale(t.c);
        first.num = first.num.scale(delta / C);
    }
    if (terms.size() >= 2) terms[1].num = terms[1].num.scale(C);

    CFMeta meta = cf.meta();
    meta.shape = CFShape::transformed;
    meta.gh.reset();
    meta.params += (meta.params.empty() ? "" : ",") + std::string("lft=") + t.a.to_string() + ":" +
                   t.b.to_string() + ":" + t.c.to_string() + ":" + t.d.to_string();
    CFExpansion out(Poly((t.a * a0 + t.b) / C), std::move(terms), std::move(meta));
    if (cf.terminated()) out.mark_terminated();
    return out;
}

inline Rational lft_apply_value(const LFTCoeffs& t, const Rational& v) {
    const Rational den = t.c * v + t.d;
    if (den.is_zero()) throw pole_error("c*v + d = 0 at v = " + v.to_string());
    return (t.a * v + t.b) / den;
}

inline Series lft_apply_value(const LFTCoeffs& t, const Series& v) {
    Series num = v.scale(t.a);
    num[0] += t.b;
    Series den = v.scale(t.c);
    den[0] += t.d;
    if (den[0].is_zero()) throw pole_error("c*v(0) + d = 0; image is not a power series");
    return series_div(num, den);
}

/// Verifies  t · (a_0 1;1 0)(den_1 1;num_1 0)...(den_k 1;num_k 0)
///        =  the same product for lft_transform(cf, t)
/// for k = 0..depth. The identity is entry-wise from k = 2 on; at k = 1 it
/// holds for the first column (the convergent), and at k = 0 the two
/// columns agree up to the factor c a_0 + d.
inline bool matrix_product_check(const CFExpansion& cf, const LFTCoeffs& t, std::size_t depth) {
    if (depth > cf.depth()) return false;
    const CFExpansion image = lft_transform(cf, t);
    const PolyMatrix T = PolyMatrix::of(t);
    PolyMatrix lhs = T * PolyMatrix::head_step(cf.head());
    PolyMatrix rhs = PolyMatrix::head_step(image.head());
    for (std::size_t k = 0; k <= depth; ++k) {
        if (k > 0) {
            lhs = lhs * PolyMatrix::step(cf.terms()[k - 1]);
            rhs = rhs * PolyMatrix::step(image.terms()[k - 1]);
        }
        if (k >= 2) {
            if (lhs != rhs) return false;
        } else if (k == 1) {
            if (lhs(0, 0) != rhs(0, 0) || lhs(1, 0) != rhs(1, 0)) return false;
        } else {
            if (lhs(0, 0) * rhs(1, 0) != lhs(1, 0) * rhs(0, 0)) return false;
        }
    }
    return true;
}

/// P̃ (c P + d Q) = Q̃ (a P + b Q) for one pair of convergents.
inline bool convergent_image_check(const ConvergentPair& original, const ConvergentPair& image, const LFTCoeffs& t) {
    const Poly lhs = image.P * (original.P.scale(t.c) + original.Q.scale(t.d));
    const Poly rhs = image.Q * (original.P.scale(t.a) + original.Q.scale(t.b));
    return lhs == rhs;
}

}  // namespace cfgen
