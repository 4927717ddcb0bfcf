#pragma once

/**
 * @file families.hpp
 * @brief One continued fraction builder per number family.
 *
 * Each builder returns a CFExpansion whose metadata carries its defect law
 * and comparison contract; target_series() returns the generating function
 * the fraction is supposed to expand, computed from the hypergeometric
 * coefficient streams (never from the fraction itself).
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cf.hpp"
#include "errors.hpp"
#include "numerics.hpp"
#include "poly.hpp"
#include "sequences.hpp"
#include "series.hpp"
#include "series2cf.hpp"

namespace cfgen {

enum class FamilyId {
    arctan,
    bernoulli,
    cauchy,
    cauchy_interleaved,
    euler,
    euler2,
    harmonic,
    zeta,
    ogf_bernoulli,
    ogf_cauchy,
};

inline constexpr std::array<std::pair<std::string_view, FamilyId>, 10> family_names{{
    {"arctan", FamilyId::arctan},
    {"bernoulli", FamilyId::bernoulli},
    {"cauchy", FamilyId::cauchy},
    {"cauchy_interleaved", FamilyId::cauchy_interleaved},
    {"euler", FamilyId::euler},
    {"euler2", FamilyId::euler2},
    {"harmonic", FamilyId::harmonic},
    {"zeta", FamilyId::zeta},
    {"ogf_bernoulli", FamilyId::ogf_bernoulli},
    {"ogf_cauchy", FamilyId::ogf_cauchy},
}};

inline std::string_view family_name(FamilyId id) {
    for (const auto& [name, v] : family_names)
        if (v == id) return name;
    return "?";
}

inline FamilyId parse_family(std::string_view name) {
    for (const auto& [n, v] : family_names)
        if (n == name) return v;
    throw usage_error("unknown family \"" + std::string(name) + "\"");
}

/// Family id plus every parameter any family uses; unused fields are ignored.
struct FamilySpec {
    FamilyId id = FamilyId::bernoulli;
    long N = 1;
    Rational lambda;
    long m = 1;
    Rational a{1};
    Rational b{1};
    long s = 2;

    /// Throws usage_error naming the violated invariant.
    void validate() const {
        switch (id) {
        case FamilyId::bernoulli:
        case FamilyId::euler:
        case FamilyId::euler2:
            if (N < 0) throw usage_error(std::string(family_name(id)) + " requires N >= 0");
            break;
        case FamilyId::cauchy:
        case FamilyId::cauchy_interleaved:
            if (N < 1) throw usage_error(std::string(family_name(id)) + " requires N >= 1");
            break;
        case FamilyId::harmonic:
            if (m < 1) throw usage_error("harmonic requires m >= 1");
            if (a.sign() <= 0 || b.sign() <= 0) throw usage_error("harmonic requires a > 0 and b > 0");
            break;
        case FamilyId::zeta:
            if (s < 2) throw usage_error("zeta requires integer s >= 2");
            break;
        default: break;
        }
    }

    /// Canonical parameter text, only the parameters the family uses.
    std::string params_text() const {
        switch (id) {
        case FamilyId::bernoulli:
        case FamilyId::cauchy: return "N=" + std::to_string(N) + ",lambda=" + lambda.to_string();
        case FamilyId::cauchy_interleaved:
        case FamilyId::euler:
        case FamilyId::euler2: return "N=" + std::to_string(N);
        case FamilyId::harmonic:
            return "m=" + std::to_string(m) + ",a=" + a.to_string() + ",b=" + b.to_string();
        case FamilyId::zeta: return "s=" + std::to_string(s);
        default: return "";
        }
    }

    std::string label() const {
        const std::string p = params_text();
        return std::string(family_name(id)) + (p.empty() ? "" : "(" + p + ")");
    }
};

namespace detail {

inline CFMeta make_meta(const FamilySpec& spec, DisplaySign sign, DefectLaw law,
                        DefectContract contract = DefectContract::standard) {
    CFMeta meta;
    meta.family = std::string(family_name(spec.id));
    meta.params = spec.params_text();
    meta.display_sign = sign;
    meta.law = law;
    meta.contract = contract;
    return meta;
}

/// Builds 1 - h_1 y/(g_1 + h_1 y - g_1 h_2 y/(...)) from g_0..g_depth, h_1..h_depth.
inline CFExpansion from_gh(GHForm form, CFMeta meta) {
    const std::size_t depth = form.g.size() - 1;
    const Poly y = Poly::monomial(Rational(1), form.power);
    std::vector<PartialTerm> terms;
    terms.reserve(depth);
    for (std::size_t n = 1; n <= depth; ++n) {
        terms.push_back({y.scale(-form.g[n - 1] * form.h[n]), Poly(form.g[n]) + y.scale(form.h[n])});
    }
    meta.shape = CFShape::pure_gh;
    meta.gh = std::move(form);
    return CFExpansion(Poly(1), std::move(terms), std::move(meta));
}

inline GHForm gh_bernoulli(long N, const Rational& lambda, std::size_t depth) {
    GHForm f;
    f.g.push_back(Rational(1));
    f.h.push_back(Rational());
    for (std::size_t n = 1; n <= depth; ++n) {
        const Rational shift(N + static_cast<long>(n) - 1);
        f.g.push_back(shift + Rational(1));
        f.h.push_back(Rational(1) - shift * lambda);
    }
    return f;
}

inline GHForm gh_cauchy(long N, const Rational& lambda, std::size_t depth) {
    GHForm f;
    f.g.push_back(Rational(1));
    f.h.push_back(Rational());
    for (std::size_t n = 1; n <= depth; ++n) {
        const Rational shift(N + static_cast<long>(n) - 1);
        f.g.push_back(shift + Rational(1));
        f.h.push_back(lambda - shift);
    }
    return f;
}

inline GHForm gh_arctan(std::size_t depth) {
    GHForm f;
    f.g.push_back(Rational(1));
    f.h.push_back(Rational());
    for (std::size_t n = 1; n <= depth; ++n) {
        f.g.push_back(Rational(2 * n + 1));
        f.h.push_back(-Rational(2 * n - 1));
    }
    return f;
}

inline GHForm gh_euler(EulerKind kind, long N, std::size_t depth) {
    GHForm f;
    f.power = 2;
    f.g.push_back(Rational(1));
    f.h.push_back(Rational());
    const long shift = kind == EulerKind::first ? 0 : 1;
    for (std::size_t n = 1; n <= depth; ++n) {
        const long top = 2 * N + 2 * static_cast<long>(n) + shift;
        f.g.push_back(Rational(top * (top - 1)));
        f.h.push_back(Rational(1));
    }
    return f;
}

}  // namespace detail

inline CFExpansion build_arctan(std::size_t depth) {
    FamilySpec spec{FamilyId::arctan};
    return detail::from_gh(detail::gh_arctan(depth), detail::make_meta(spec, DisplaySign::plus, {1, 1}));
}

inline CFExpansion build_bernoulli(long N, const Rational& lambda, std::size_t depth) {
    FamilySpec spec{FamilyId::bernoulli, N, lambda};
    spec.validate();
    return detail::from_gh(detail::gh_bernoulli(N, lambda, depth),
                           detail::make_meta(spec, DisplaySign::minus, {1, 1}));
}

inline CFExpansion build_cauchy(long N, const Rational& lambda, std::size_t depth) {
    FamilySpec spec{FamilyId::cauchy, N, lambda};
    spec.validate();
    return detail::from_gh(detail::gh_cauchy(N, lambda, depth), detail::make_meta(spec, DisplaySign::minus, {1, 1}));
}

/// Both kinds live in y = x^2: defect law 2n+2 in x.
inline CFExpansion build_euler(EulerKind kind, long N, std::size_t depth) {
    FamilySpec spec{kind == EulerKind::first ? FamilyId::euler : FamilyId::euler2, N};
    spec.validate();
    return detail::from_gh(detail::gh_euler(kind, N, depth), detail::make_meta(spec, DisplaySign::minus, {2, 2}));
}

/// Σ_{n>=1} h_n^(m)(a,b) x^n
///   = x/(b^m(1-x) - b^(2m) x(1-x)/((a+b)^m + b^m x - (a+b)^(2m) x/(...)))
inline CFExpansion build_harmonic(long m, const Rational& a, const Rational& b, std::size_t depth) {
    FamilySpec spec{FamilyId::harmonic};
    spec.m = m;
    spec.a = a;
    spec.b = b;
    spec.validate();
    const Poly x = Poly::x();
    const Poly one_minus_x = Poly{Rational(1), Rational(-1)};
    // base(k) = (k a + b)^m
    const auto base = [&](long k) { return (Rational(k) * a + b).pow(m); };
    std::vector<PartialTerm> terms;
    for (std::size_t n = 1; n <= depth; ++n) {
        const long k = static_cast<long>(n);
        if (n == 1) {
            terms.push_back({x, one_minus_x.scale(base(0))});
        } else if (n == 2) {
            terms.push_back({(x * one_minus_x).scale(-base(0) * base(0)), Poly(base(1)) + x.scale(base(0))});
        } else {
            const Rational prev = base(k - 2);
            terms.push_back({x.scale(-prev * prev), Poly(base(k - 1)) + x.scale(prev)});
        }
    }
    return CFExpansion(Poly(), std::move(terms), detail::make_meta(spec, DisplaySign::minus, {1, 1}));
}

/// 1/(x + x^2/(2^s - 2^(2s) x/(3^s + 2^s x - 3^(2s) x/(...)))).
/// The comparison contract is Q_m - P_m f̂ with f̂ = Σ x^k/k^s.
inline CFExpansion build_zeta(long s, std::size_t depth) {
    FamilySpec spec{FamilyId::zeta};
    spec.s = s;
    spec.validate();
    const Poly x = Poly::x();
    const auto pw = [&](long k) { return Rational(ipow(k, static_cast<unsigned long>(s))); };
    std::vector<PartialTerm> terms;
    for (std::size_t n = 1; n <= depth; ++n) {
        const long k = static_cast<long>(n);
        if (n == 1) {
            terms.push_back({Poly(1), x});
        } else if (n == 2) {
            terms.push_back({x * x, Poly(pw(2))});
        } else {
            const Rational prev = pw(k - 1);
            terms.push_back({x.scale(-prev * prev), Poly(pw(k)) + x.scale(prev)});
        }
    }
    return CFExpansion(Poly(), std::move(terms),
                       detail::make_meta(spec, DisplaySign::minus, {1, 1}, DefectContract::reciprocal));
}

/// 1 + Nx/(N+1 + 1²x/(N+2 + (N+1)²x/(N+3 + 2²x/(N+4 + (N+2)²x/(...))))).
inline CFExpansion build_cauchy_interleaved(long N, std::size_t depth) {
    FamilySpec spec{FamilyId::cauchy_interleaved, N};
    spec.validate();
    std::vector<PartialTerm> terms;
    for (std::size_t j = 1; j <= depth; ++j) {
        long mult = 0;
        if (j == 1)
            mult = N;
        else if (j % 2 == 0)
            mult = static_cast<long>(j / 2) * static_cast<long>(j / 2);
        else
            mult = (N + static_cast<long>(j / 2)) * (N + static_cast<long>(j / 2));
        terms.push_back({Poly::monomial(Rational(mult), 1), Poly(Rational(N + static_cast<long>(j)))});
    }
    return CFExpansion(Poly(1), std::move(terms), detail::make_meta(spec, DisplaySign::plus, {1, 1}));
}

/// 1/(1 + x/(2/1 - x/(3 + 2x/(2/2 - 2x/(5 + 3x/(2/3 - ...)))))).
/// Level 1 is 1/1; level 2k is (k x)/(2/k), level 2k+1 is (-k x)/(2k+1).
/// The convergent with n levels matches Σ B_n x^n through x^(n-1).
inline CFExpansion build_ogf_bernoulli(std::size_t depth) {
    FamilySpec spec{FamilyId::ogf_bernoulli};
    std::vector<PartialTerm> terms;
    for (std::size_t j = 1; j <= depth; ++j) {
        const long k = static_cast<long>(j / 2);
        if (j == 1)
            terms.push_back({Poly(1), Poly(1)});
        else if (j % 2 == 0)
            terms.push_back({Poly::monomial(Rational(k), 1), Poly(Rational(2, k))});
        else
            terms.push_back({Poly::monomial(Rational(-k), 1), Poly(Rational(2 * k + 1))});
    }
    return CFExpansion(Poly(), std::move(terms), detail::make_meta(spec, DisplaySign::plus, {1, 0}));
}

/// Target generating function of a family, through x^order.
inline Series target_series(const FamilySpec& spec, std::size_t order) {
    spec.validate();
    switch (spec.id) {
    case FamilyId::arctan: {
        Series s(order);
        for (std::size_t i = 0; i <= order; ++i) s[i] = Rational(i % 2 == 0 ? 1 : -1) / Rational(2 * i + 1);
        return series_reciprocal(s);
    }
    case FamilyId::bernoulli: return series_reciprocal(hyp2f1_coeffs(BernoulliHyp{spec.N, spec.lambda}, order));
    case FamilyId::cauchy: return series_reciprocal(hyp2f1_coeffs(CauchyHyp{spec.N, spec.lambda}, order));
    case FamilyId::cauchy_interleaved: return series_reciprocal(hyp2f1_coeffs(CauchyHyp{spec.N, Rational()}, order));
    case FamilyId::euler: return series_reciprocal(hyp1f2_coeffs(EulerKind::first, spec.N, order));
    case FamilyId::euler2: return series_reciprocal(hyp1f2_coeffs(EulerKind::second, spec.N, order));
    case FamilyId::harmonic: {
        Series inner(order);
        for (std::size_t k = 1; k <= order; ++k)
            inner[k] = Rational(1) / (Rational(k - 1) * spec.a + spec.b).pow(spec.m);
        return inner * stock_series(StockSeries::geom, order);
    }
    case FamilyId::zeta: {
        Series s(order);
        for (std::size_t k = 1; k <= order; ++k) s[k] = Rational(1) / Rational(ipow(k, static_cast<unsigned long>(spec.s)));
        return s;
    }
    case FamilyId::ogf_bernoulli: {
        const auto b = named_numbers(NamedFamily::bernoulli, order);
        return Series(b, order);
    }
    case FamilyId::ogf_cauchy: {
        const auto c = named_numbers(NamedFamily::cauchy, order);
        return Series(c, order);
    }
    }
    throw usage_error("unknown family");
}

/// C-fraction 1 + a_1 x/(b_1 + a_2 x/(b_2 + ...)) of Σ c_n x^n, extracted
/// from the series with the lowest-terms convention of expand_cfraction.
inline CFExpansion build_ogf_cauchy(std::size_t depth) {
    FamilySpec spec{FamilyId::ogf_cauchy};
    const CFraction cfr = expand_cfraction(target_series(spec, depth + 1), depth);
    std::vector<PartialTerm> terms;
    for (const auto& st : cfr.steps) terms.push_back({Poly::monomial(Rational(st.a), 1), Poly(st.b)});
    CFExpansion cf(Poly(cfr.c0), std::move(terms), detail::make_meta(spec, DisplaySign::plus, {1, 1}));
    if (cfr.terminated) cf.mark_terminated();
    return cf;
}

inline CFExpansion build(const FamilySpec& spec, std::size_t depth) {
    spec.validate();
    switch (spec.id) {
    case FamilyId::arctan: return build_arctan(depth);
    case FamilyId::bernoulli: return build_bernoulli(spec.N, spec.lambda, depth);
    case FamilyId::cauchy: return build_cauchy(spec.N, spec.lambda, depth);
    case FamilyId::cauchy_interleaved: return build_cauchy_interleaved(spec.N, depth);
    case FamilyId::euler: return build_euler(EulerKind::first, spec.N, depth);
    case FamilyId::euler2: return build_euler(EulerKind::second, spec.N, depth);
    case FamilyId::harmonic: return build_harmonic(spec.m, spec.a, spec.b, depth);
    case FamilyId::zeta: return build_zeta(spec.s, depth);
    case FamilyId::ogf_bernoulli: return build_ogf_bernoulli(depth);
    case FamilyId::ogf_cauchy: return build_ogf_cauchy(depth);
    }
    throw usage_error("unknown family");
}

/// Explicit convergent at index n for families whose fraction is not in
/// pure (g,h) shape but whose convergents have a known closed form:
///   zeta:     P_n = (n!)^s,                Q_n = (n!)^s Σ_{k<=n} x^k/k^s
///   harmonic: P_n = ((b|a)^(n))^m Σ_{k<=n} x^k/((k-1)a+b)^m,  Q_n = ((b|a)^(n))^m (1-x)
/// Defined for n >= 1.
inline std::optional<ConvergentPair> explicit_convergent(const FamilySpec& spec, std::size_t n) {
    if (n == 0) return std::nullopt;
    if (spec.id == FamilyId::zeta) {
        const auto us = static_cast<unsigned long>(spec.s);
        const Rational scale(ipow(factorial(n), us));
        std::vector<Rational> cs(n + 1);
        for (std::size_t k = 1; k <= n; ++k) cs[k] = scale / Rational(ipow(k, us));
        return ConvergentPair{n, Poly(scale), Poly(std::move(cs))};
    }
    if (spec.id == FamilyId::harmonic) {
        const Rational scale = gen_rising(spec.b, spec.a, n).pow(spec.m);
        std::vector<Rational> cs(n + 1);
        for (std::size_t k = 1; k <= n; ++k) cs[k] = scale / (Rational(k - 1) * spec.a + spec.b).pow(spec.m);
        return ConvergentPair{n, Poly(std::move(cs)), Poly{scale, -scale}};
    }
    return std::nullopt;
}

/// Families whose convergents have Taylor expansions to compare; zeta
/// convergents have Q(0) = 0 and are compared only through the contract.
inline bool has_taylor_convergents(FamilyId id) { return id != FamilyId::zeta; }

/// The parameter grid used by `verify --all` and the property suites:
/// N <= 4, λ ∈ {0, 1/2, -1/3, 1/N}, m <= 3, a, b ∈ {1, 2, 1/2}, s ∈ {2, 3, 7}.
inline std::vector<FamilySpec> parameter_grid() {
    std::vector<FamilySpec> out;
    out.push_back({FamilyId::arctan});
    const auto lambdas = [](long N) {
        std::vector<Rational> ls{Rational(0), Rational(1, 2), Rational(-1, 3)};
        if (N > 0) {
            const Rational inv(1, N);
            bool seen = false;
            for (const auto& l : ls) seen = seen || l == inv;
            if (!seen) ls.push_back(inv);
        }
        return ls;
    };
    for (long N = 0; N <= 4; ++N)
        for (const auto& l : lambdas(N)) out.push_back({FamilyId::bernoulli, N, l});
    for (long N = 1; N <= 4; ++N)
        for (const auto& l : lambdas(N)) out.push_back({FamilyId::cauchy, N, l});
    for (long N = 1; N <= 4; ++N) out.push_back({FamilyId::cauchy_interleaved, N});
    for (long N = 0; N <= 4; ++N) out.push_back({FamilyId::euler, N});
    for (long N = 0; N <= 4; ++N) out.push_back({FamilyId::euler2, N});
    const std::array<Rational, 3> ab{Rational(1), Rational(2), Rational(1, 2)};
    for (long m = 1; m <= 3; ++m)
        for (const auto& a : ab)
            for (const auto& b : ab) {
                FamilySpec s{FamilyId::harmonic};
                s.m = m;
                s.a = a;
                s.b = b;
                out.push_back(s);
            }
    for (long s : {2L, 3L, 7L}) {
        FamilySpec spec{FamilyId::zeta};
        spec.s = s;
        out.push_back(spec);
    }
    out.push_back({FamilyId::ogf_bernoulli});
    out.push_back({FamilyId::ogf_cauchy});
    return out;
}

/// Enclosure [lo, hi] of 1/ζ(s) from Σ_{k<=terms} 1/k^s in fixed point with
/// `guard` decimal digits, plus integral bounds on the tail:
///   1/((s-1)(K+1)^(s-1)) <= Σ_{k>K} 1/k^s <= 1/((s-1)K^(s-1)).
inline std::pair<Rational, Rational> reciprocal_zeta_enclosure(long s, unsigned long terms, unsigned long guard) {
    const Integer scale = ipow(10, guard);
    const auto us = static_cast<unsigned long>(s);
    Integer floor_sum = 0;
    for (unsigned long k = 1; k <= terms; ++k) {
        Integer q;
        const Integer d = ipow(k, us);
        mpz_fdiv_q(q.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
        floor_sum += q;
    }
    // each floor loses < 1 unit in the last place
    const Rational partial_lo(floor_sum, scale);
    const Rational partial_hi(Integer(floor_sum + terms), scale);
    const Rational tail_lo = Rational(1) / Rational(Integer((s - 1) * ipow(terms + 1, us - 1)));
    const Rational tail_hi = Rational(1) / Rational(Integer((s - 1) * ipow(terms, us - 1)));
    const Rational zeta_lo = partial_lo + tail_lo;
    const Rational zeta_hi = partial_hi + tail_hi;
    return {Rational(1) / zeta_hi, Rational(1) / zeta_lo};
}

}  // namespace cfgen
