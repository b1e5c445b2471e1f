//---------------------------------------------------------------------------//
// Copyright 2026 the bornscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bornscat/quadrature.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace bornscat
{
//---------------------------------------------------------------------------//
//! Result of a quadrature call.
struct QuadResult
{
    double value{0};
    double est_err{0};  //!< absolute error estimate, >= 0
    long nodes{0};      //!< count of integrand evaluations
    //! where a semi-infinite integral was cut; 0 when not applicable
    double truncation_radius{0};
};

//---------------------------------------------------------------------------//
/*!
 * One-sided variable transform applied at the lower endpoint.
 *
 * sqrt_left substitutes x = a + u^2, which regularizes integrable endpoint
 * behavior such as 1/sqrt(x - a) or log(x - a) factors (the K0 kernel).
 */
enum class EndpointTransform
{
    none,
    sqrt_left,
};

//! Tuning knobs shared by the quadrature engines.
struct QuadOptions
{
    double tol_abs_floor = 1e-14;  //!< absolute convergence floor
    int max_intervals = 100000;    //!< subdivision limit before giving up
    int max_periods = 200000;      //!< oscillatory segment limit
    EndpointTransform transform = EndpointTransform::none;
};

namespace detail
{
//---------------------------------------------------------------------------//
// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Positive abscissae only; the rule is symmetric.  Standard table.
inline constexpr double gk15_xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double gk15_wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double gk15_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEval
{
    double value;
    double err;     //!< Gauss/Kronrod discrepancy, inflated QUADPACK-style
    double resabs;  //!< integral of |f|, for round-off floors
};

//---------------------------------------------------------------------------//
/*!
 * Evaluate one Gauss-Kronrod 7-15 panel on [a, b].
 *
 * The error estimate follows the standard practice of inflating small
 * Gauss/Kronrod differences through (200 d / resasc)^{3/2}: the raw
 * difference systematically underestimates the true error of the Kronrod
 * value, and the inflation restores an honest (conservative) bound.
 */
template<class F>
PanelEval gk15_panel(F&& f, double a, double b, long& nodes)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();

    double centr = 0.5 * (a + b);
    double hlgth = 0.5 * (b - a);

    double fv1[7];
    double fv2[7];
    double fc = f(centr);
    double resg = fc * gk15_wg[3];
    double resk = fc * gk15_wgk[7];
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j)
    {
        double absc = hlgth * gk15_xgk[j];
        fv1[j] = f(centr - absc);
        fv2[j] = f(centr + absc);
        double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1)
        {
            resg += gk15_wg[j / 2] * fsum;
        }
        resk += gk15_wgk[j] * fsum;
        resabs += gk15_wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    nodes += 15;

    double reskh = resk * 0.5;
    double resasc = gk15_wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
    {
        resasc += gk15_wgk[j]
                  * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }

    double ah = std::abs(hlgth);
    resabs *= ah;
    resasc *= ah;

    PanelEval out;
    out.value = resk * hlgth;
    out.resabs = resabs;
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0 && err != 0)
    {
        err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
    }
    if (resabs > uflow / (50 * eps))
    {
        err = std::max(eps * 50 * resabs, err);
    }
    out.err = err;
    return out;
}

//! Work item for the global-adaptive refinement loop.
struct Segment
{
    double lo, hi;
    double value, err, resabs;
    int map;  //!< integrand chart: 0 = identity, 1 = sqrt-left head

    bool operator<(const Segment& o) const { return err < o.err; }
};

//---------------------------------------------------------------------------//
/*!
 * Globally adaptive refinement over a pre-seeded segment list.
 *
 * Repeatedly bisects the segment with the largest error until the summed
 * error meets max(tol * |sum|, floor).  All segments share the chart
 * dispatcher; charts let a transformed head coexist with a raw tail under a
 * single error target.
 */
template<class Chart>
QuadResult refine(Chart&& chart,
                  std::vector<Segment> seed,
                  double tol,
                  const QuadOptions& opt,
                  long& nodes)
{
    std::priority_queue<Segment> heap(seed.begin(), seed.end());
    double total = 0;
    double total_err = 0;
    for (const auto& s : seed)
    {
        total += s.value;
        total_err += s.err;
    }

    int intervals = static_cast<int>(seed.size());
    while (total_err > std::max(tol * std::abs(total), opt.tol_abs_floor))
    {
        if (intervals >= opt.max_intervals || heap.empty())
        {
            throw convergence_error(
                "adaptive quadrature: subdivision limit reached before "
                "meeting the requested tolerance");
        }
        Segment worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi))
        {
            // interval no longer splittable in double precision: accept its
            // error contribution as irreducible and move on
            if (heap.empty()
                || heap.top().err
                       <= opt.tol_abs_floor / std::max(1, intervals))
            {
                break;
            }
            continue;
        }
        auto fm = [&](double x) { return chart(worst.map, x); };
        PanelEval left = gk15_panel(fm, worst.lo, mid, nodes);
        PanelEval right = gk15_panel(fm, mid, worst.hi, nodes);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(Segment{worst.lo, mid, left.value, left.err, left.resabs,
                          worst.map});
        heap.push(Segment{mid, worst.hi, right.value, right.err, right.resabs,
                          worst.map});
        ++intervals;
    }

    QuadResult out;
    out.value = total;
    out.est_err = total_err;
    out.nodes = nodes;
    return out;
}

}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Adaptive Gauss-Kronrod integration of f over [a, b].
 *
 * Accepts infinite endpoints.  Semi-infinite integrals are truncated where
 * the running tail estimate falls below a tenth of the error target, with
 * the cut reported in truncation_radius; the truncated tail bound is folded
 * into est_err.  tol is relative, floored by opt.tol_abs_floor.
 *
 * Integrable lower-endpoint singularities (inverse square root, logarithm)
 * are handled by requesting EndpointTransform::sqrt_left.
 *
 * Throws convergence_error when the subdivision limit is reached and
 * domain_error for an empty or inverted interval.
 */
template<class F>
QuadResult
integrate_adaptive(F&& f, double a, double b, double tol, QuadOptions opt = {})
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (std::isnan(a) || std::isnan(b) || !(a < b))
    {
        throw domain_error("adaptive quadrature: requires a < b");
    }
    if (!(tol > 0))
    {
        throw domain_error("adaptive quadrature: tolerance must be > 0");
    }

    // doubly infinite: split at the origin and reflect the left half
    if (a == -inf && b == inf)
    {
        QuadOptions half = opt;
        half.transform = EndpointTransform::none;
        auto reflected = [&](double x) { return f(-x); };
        QuadResult pos = integrate_adaptive(f, 0.0, inf, 0.5 * tol, half);
        QuadResult neg
            = integrate_adaptive(reflected, 0.0, inf, 0.5 * tol, half);
        QuadResult out;
        out.value = pos.value + neg.value;
        out.est_err = pos.est_err + neg.est_err;
        out.nodes = pos.nodes + neg.nodes;
        out.truncation_radius
            = std::max(pos.truncation_radius, neg.truncation_radius);
        return out;
    }
    // left-infinite only: reflect onto a semi-infinite interval
    if (a == -inf)
    {
        auto reflected = [&](double x) { return f(-x); };
        QuadOptions half = opt;
        half.transform = EndpointTransform::none;
        QuadResult r = integrate_adaptive(reflected, -b, inf, tol, half);
        return r;
    }

    long nodes = 0;
    auto chart = [&](int map, double x) -> double {
        if (map == 1)
        {
            return f(a + x * x) * 2 * x;
        }
        return f(x);
    };

    std::vector<detail::Segment> seed;
    double truncation_radius = 0;
    double tail_bound = 0;

    if (b == inf)
    {
        // transformed (or raw) head panel on [a, a+1], then tail panels of
        // doubling length until two consecutive panels are negligible
        double head_end = a + 1;
        if (opt.transform == EndpointTransform::sqrt_left)
        {
            detail::PanelEval p = detail::gk15_panel(
                [&](double u) { return chart(1, u); }, 0.0, 1.0, nodes);
            seed.push_back({0.0, 1.0, p.value, p.err, p.resabs, 1});
        }
        else
        {
            detail::PanelEval p = detail::gk15_panel(
                [&](double x) { return chart(0, x); }, a, head_end, nodes);
            seed.push_back({a, head_end, p.value, p.err, p.resabs, 0});
        }

        double running = std::abs(seed.back().value);
        double lo = head_end;
        double len = 1;
        int quiet = 0;
        for (int k = 0; k < 90; ++k)
        {
            double hi = lo + len;
            detail::PanelEval p = detail::gk15_panel(
                [&](double x) { return chart(0, x); }, lo, hi, nodes);
            seed.push_back({lo, hi, p.value, p.err, p.resabs, 0});
            running += std::abs(p.value);
            double thresh
                = 0.1
                  * std::max(tol * std::max(running,
                                            std::numeric_limits<double>::min()),
                             opt.tol_abs_floor);
            if (std::abs(p.value) + p.err < thresh)
            {
                if (++quiet >= 2)
                {
                    truncation_radius = hi;
                    tail_bound = std::abs(p.value) + p.err;
                    break;
                }
            }
            else
            {
                quiet = 0;
            }
            lo = hi;
            len *= 2;
            if (k == 89)
            {
                throw convergence_error(
                    "adaptive quadrature: integrand tail does not decay on "
                    "the semi-infinite interval");
            }
        }
    }
    else
    {
        if (opt.transform == EndpointTransform::sqrt_left)
        {
            double u_hi = std::sqrt(b - a);
            detail::PanelEval p = detail::gk15_panel(
                [&](double u) { return chart(1, u); }, 0.0, u_hi, nodes);
            seed.push_back({0.0, u_hi, p.value, p.err, p.resabs, 1});
        }
        else
        {
            detail::PanelEval p = detail::gk15_panel(
                [&](double x) { return chart(0, x); }, a, b, nodes);
            seed.push_back({a, b, p.value, p.err, p.resabs, 0});
        }
    }

    QuadResult out = detail::refine(chart, std::move(seed), tol, opt, nodes);
    out.est_err += tail_bound;
    out.truncation_radius = truncation_radius;
    return out;
}

//---------------------------------------------------------------------------//
//! Kernel selector for oscillatory integration.
enum class OscKind
{
    sine,
    cosine,
};

//! Integration domain for oscillatory integration.
enum class OscDomain
{
    half_line,  //!< [0, inf)
    full_line,  //!< (-inf, inf)
};

//---------------------------------------------------------------------------//
/*!
 * Oscillatory integral of g(x) * sin(qx) or g(x) * cos(qx).
 *
 * Strategy: split the domain at the kernel zeros into half-period segments,
 * integrate each segment adaptively, and accelerate the alternating sequence
 * of partial sums by iterated averaging (Euler transform).  This converges
 * for amplitudes decaying as slowly as 1/x times a bounded function, where
 * the raw partial sums converge only conditionally.
 *
 * full_line folds the domain: sin picks out the odd part g(x) - g(-x), cos
 * the even part g(x) + g(-x).
 *
 * q = 0 with the sine kernel returns exactly zero; with the cosine kernel it
 * degrades to plain adaptive integration of g.
 *
 * est_err combines the per-segment quadrature errors with the acceleration
 * residual.  Throws convergence_error when the partial sums fail to settle
 * within opt.max_periods segments.
 */
template<class G>
QuadResult integrate_oscillatory(G&& g,
                                 double q,
                                 OscKind kind,
                                 OscDomain domain,
                                 double tol,
                                 QuadOptions opt = {})
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (std::isnan(q) || q < 0)
    {
        throw domain_error("oscillatory quadrature: frequency must be >= 0");
    }
    if (!(tol > 0))
    {
        throw domain_error("oscillatory quadrature: tolerance must be > 0");
    }

    if (q == 0)
    {
        if (kind == OscKind::sine)
        {
            return QuadResult{};  // sin(0 * x) == 0 identically
        }
        if (domain == OscDomain::half_line)
        {
            return integrate_adaptive(g, 0.0, inf, tol, opt);
        }
        return integrate_adaptive(g, -inf, inf, tol, opt);
    }

    // fold the full line onto [0, inf)
    auto amp = [&](double x) -> double {
        if (domain == OscDomain::full_line)
        {
            return kind == OscKind::cosine ? g(x) + g(-x) : g(x) - g(-x);
        }
        return g(x);
    };
    auto integrand = [&](double x) -> double {
        return kind == OscKind::cosine ? amp(x) * std::cos(q * x)
                                       : amp(x) * std::sin(q * x);
    };

    constexpr double pi = std::numbers::pi;
    double first = kind == OscKind::cosine ? 0.5 * pi / q : pi / q;
    double step = pi / q;

    // iterated averaging window over trailing partial sums
    constexpr std::size_t window = 48;
    std::vector<double> sums;
    sums.reserve(window + 1);

    auto averaged = [&]() -> double {
        std::vector<double> a = sums;
        while (a.size() > 1)
        {
            for (std::size_t i = 0; i + 1 < a.size(); ++i)
            {
                a[i] = 0.5 * (a[i] + a[i + 1]);
            }
            a.pop_back();
        }
        return a[0];
    };

    long nodes = 0;
    double partial = 0;
    double seg_err_sum = 0;
    double prev_diag = 0;
    double diag = 0;
    double diag_diff = std::numeric_limits<double>::infinity();
    double prev_diag_diff = diag_diff;
    double last_term = 0;
    double hi = 0;
    bool settled = false;

    QuadOptions seg_opt = opt;
    seg_opt.transform = EndpointTransform::none;
    seg_opt.max_intervals = 2000;

    for (int n = 0; n < opt.max_periods; ++n)
    {
        double lo = hi;
        hi = (n == 0) ? first : lo + step;
        QuadResult seg
            = integrate_adaptive(integrand, lo, hi, 0.25 * tol, seg_opt);
        nodes += seg.nodes;
        seg_err_sum += seg.est_err;
        partial += seg.value;
        last_term = seg.value;

        sums.push_back(partial);
        if (sums.size() > window)
        {
            sums.erase(sums.begin());
        }
        prev_diag = diag;
        diag = averaged();
        prev_diag_diff = diag_diff;
        diag_diff = std::abs(diag - prev_diag);

        double scale = std::max(std::abs(diag), std::abs(partial));
        double target = std::max(tol * scale, opt.tol_abs_floor);
        if (n >= 3 && std::abs(seg.value) + seg.est_err < 0.1 * target)
        {
            settled = true;
            break;
        }
        if (n >= 7 && diag_diff < 0.25 * target
            && prev_diag_diff < 0.25 * target)
        {
            settled = true;
            break;
        }
    }
    if (!settled)
    {
        throw convergence_error(
            "oscillatory quadrature: partial sums failed the decay test "
            "within the configured segment budget");
    }

    int levels = static_cast<int>(sums.size()) - 1;
    double accel_resid
        = std::max(2 * diag_diff,
                   std::abs(last_term)
                       * std::pow(0.5, 0.5 * std::max(levels, 1)));

    QuadResult out;
    out.value = diag;
    out.est_err = seg_err_sum + accel_resid;
    out.nodes = nodes;
    out.truncation_radius = hi;
    return out;
}

//---------------------------------------------------------------------------//
//! Power structure assumed for the limit model in extrapolate_to_zero.
enum class ExtrapolationModel
{
    even_powers,  //!< value is smooth in lambda^2 (screened Coulomb shape)
    odd_powers,   //!< fallback: smooth in lambda itself
};

//! Result of the lambda -> 0 limit extrapolation.
struct ExtrapolationReport
{
    std::vector<std::pair<double, double>> samples;  //!< (lambda, value)
    double extrapolated{0};
    int order_used{0};  //!< polynomial order in the model variable
    double est_err{0};  //!< difference of the last two extrapolation levels
};

namespace detail
{
//---------------------------------------------------------------------------//
// Incremental extrapolation tableaus evaluated at x = 0.  Both return the
// final diagonal entry plus the difference of the last two diagonal entries;
// `ok` reports whether at least two diagonal levels were available.
struct TableauResult
{
    double value{0};
    double diff{std::numeric_limits<double>::infinity()};
    int levels{0};
    bool ok{false};
};

inline TableauResult
neville_zero(const std::vector<double>& xs, const std::vector<double>& ys)
{
    std::size_t n = xs.size();
    std::vector<double> prev;
    TableauResult out;
    double diag_prev = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        std::vector<double> row{ys[i]};
        row.reserve(i + 1);
        for (std::size_t k = 1; k <= i; ++k)
        {
            double corr = (row[k - 1] - prev[k - 1]) * xs[i]
                          / (xs[i - k] - xs[i]);
            row.push_back(row[k - 1] + corr);
        }
        if (i > 0)
        {
            out.diff = std::abs(row.back() - diag_prev);
            out.ok = true;
        }
        diag_prev = row.back();
        prev = std::move(row);
    }
    out.value = diag_prev;
    out.levels = static_cast<int>(n);
    return out;
}

/*
 * Rational (Bulirsch-Stoer) extrapolation.  Exact for values of the form
 * c / (a + x), which is precisely the screened-Coulomb amplitude as a
 * function of x = lambda^2; polynomial extrapolation cannot reach full
 * tolerance on that shape when x spans decades relative to a.
 *
 * A vanishing inner denominator means the tableau has already reproduced
 * the data exactly; the last completed diagonal is returned in that case.
 */
inline TableauResult
rational_zero(const std::vector<double>& xs, const std::vector<double>& ys)
{
    std::size_t n = xs.size();
    std::vector<double> prev;  // row i-1
    TableauResult out;
    double diag_prev = 0;
    bool have_prev = false;
    for (std::size_t i = 0; i < n; ++i)
    {
        std::vector<double> row{ys[i]};
        row.reserve(i + 1);
        bool aborted = false;
        for (std::size_t k = 1; k <= i; ++k)
        {
            double num = row[k - 1] - prev[k - 1];
            if (num == 0)
            {
                row.push_back(row[k - 1]);
                continue;
            }
            double den2 = row[k - 1] - (k >= 2 ? prev[k - 2] : 0.0);
            if (den2 == 0)
            {
                aborted = true;
                break;
            }
            double d = (xs[i - k] / xs[i]) * (1 - num / den2) - 1;
            if (d == 0)
            {
                aborted = true;
                break;
            }
            row.push_back(row[k - 1] + num / d);
        }
        if (aborted)
        {
            out.levels = static_cast<int>(i);
            return out;  // value/diff already hold the last completed level
        }
        if (have_prev)
        {
            out.diff = std::abs(row.back() - diag_prev);
            out.ok = true;
        }
        diag_prev = row.back();
        out.value = diag_prev;
        have_prev = true;
        prev = std::move(row);
    }
    out.levels = static_cast<int>(n);
    return out;
}

}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Extrapolate a geometric-ladder sample sequence to lambda = 0.
 *
 * The model variable is x = lambda^2 (even_powers, the default) or lambda
 * (odd_powers).  Two Richardson-style tableaus are built side by side, one
 * polynomial (Neville) and one rational (Bulirsch-Stoer); the path whose
 * last two diagonal levels agree best is reported.  The rational path is
 * the one that converges on the screened-Coulomb shape c/(q^2 + lambda^2);
 * the polynomial path covers data that is polynomial in the model variable.
 *
 * est_err is the difference of the last two levels of the chosen tableau,
 * floored at a few ulps of the result.
 */
inline ExtrapolationReport
extrapolate_to_zero(std::vector<std::pair<double, double>> samples,
                    ExtrapolationModel model = ExtrapolationModel::even_powers)
{
    if (samples.size() < 3)
    {
        throw domain_error("extrapolation: need at least 3 ladder samples");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(samples.size());
    ys.reserve(samples.size());
    double prev_lambda = std::numeric_limits<double>::infinity();
    for (const auto& [lambda, value] : samples)
    {
        if (!(lambda > 0) || !(lambda < prev_lambda))
        {
            throw domain_error(
                "extrapolation: ladder must be strictly decreasing with all "
                "lambda > 0 (degenerate ladder)");
        }
        if (!std::isfinite(value))
        {
            throw domain_error("extrapolation: sample values must be finite");
        }
        prev_lambda = lambda;
        xs.push_back(model == ExtrapolationModel::even_powers
                         ? lambda * lambda
                         : lambda);
        ys.push_back(value);
    }

    detail::TableauResult poly = detail::neville_zero(xs, ys);
    detail::TableauResult rat = detail::rational_zero(xs, ys);

    bool use_rational = rat.ok && (!poly.ok || rat.diff <= poly.diff);
    const detail::TableauResult& best = use_rational ? rat : poly;

    ExtrapolationReport out;
    out.samples = std::move(samples);
    out.extrapolated = best.value;
    out.order_used = std::max(best.levels - 1, 0);
    double ulp_floor = 4 * std::numeric_limits<double>::epsilon()
                       * std::abs(best.value);
    out.est_err = std::max(best.ok ? best.diff : 0.0, ulp_floor);
    return out;
}

}  // namespace bornscat
