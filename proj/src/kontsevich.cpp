#include "linkbook/kontsevich.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "linkbook/errors.hpp"

namespace linkbook {

namespace {

constexpr double kPi = 3.14159265358979323846;

double factorial(int m) {
    double f = 1.0;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
}

void check_path(const CrossingPath& p) {
    if (p.degree < 1) throw ValidationError("crossing degree must be >= 1");
    if (!(p.lambda > 0.0)) throw ValidationError("lambda must be positive");
}

} // namespace

std::complex<double> crossing_coefficient_closed(const CrossingPath& p) {
    check_path(p);
    const double s = p.xtype == CrossingType::plus ? 1.0 : -1.0;
    const double sigma = p.orientation == RelOrientation::same ? 1.0 : -1.0;
    // (log lambda + s i pi) / (2 pi i) = s/2 - i log(lambda)/(2 pi)
    const std::complex<double> w(s * 0.5, -std::log(p.lambda) / (2.0 * kPi));
    std::complex<double> pw(1.0, 0.0);
    for (int k = 0; k < p.degree; ++k) pw *= w;
    double sign = (p.degree % 2 == 0 || sigma > 0) ? 1.0 : -1.0;
    return pw * (sign / factorial(p.degree));
}

namespace {

// Cumulative antiderivative chain on a uniform grid: stage k integrates
// g * F_{k-1} by the trapezoid rule; the caller refines and extrapolates.
std::complex<double> simplex_chain(const CrossingPath& p, int segments) {
    const double s = p.xtype == CrossingType::plus ? 1.0 : -1.0;
    const double h = 1.0 / segments;
    // dlog of the path: log-linear separation, linear winding
    auto g = [&](double t) {
        (void)t;
        return std::complex<double>(std::log(p.lambda), s * kPi);
    };
    std::vector<std::complex<double>> cur(segments + 1, 1.0), next(segments + 1);
    for (int stage = 0; stage < p.degree; ++stage) {
        next[0] = 0.0;
        std::complex<double> prev = g(0.0) * cur[0];
        for (int i = 1; i <= segments; ++i) {
            std::complex<double> fi = g(i * h) * cur[i];
            next[i] = next[i - 1] + 0.5 * h * (prev + fi);
            prev = fi;
        }
        cur = next;
    }
    return cur[segments];
}

} // namespace

std::complex<double> simplex_integral_numeric(const CrossingPath& p, double tol) {
    check_path(p);
    if (p.degree > 4) throw ValidationError("numeric simplex integration handles degree <= 4");
    const double sigma = p.orientation == RelOrientation::same ? 1.0 : -1.0;
    const std::complex<double> two_pi_i(0.0, 2.0 * kPi);
    std::complex<double> scale = 1.0;
    for (int k = 0; k < p.degree; ++k) scale *= sigma / two_pi_i;

    std::complex<double> prev = simplex_chain(p, 64);
    for (int segments = 128; segments <= (1 << 22); segments *= 2) {
        std::complex<double> cur = simplex_chain(p, segments);
        // trapezoid converges at h^2: one Richardson step
        std::complex<double> extrap = (4.0 * cur - prev) / 3.0;
        if (std::abs(cur - prev) <= tol * std::max(1e-30, std::abs(cur)))
            return scale * extrap;
        prev = cur;
    }
    throw ValidationError("simplex quadrature failed to converge within budget");
}

// --- detect-lemma integral ---------------------------------------------

double SeparationPath::log_at(double t) const {
    if (knots.size() < 1) throw ValidationError("separation path needs knots");
    if (t <= knots.front().first) return std::log(knots.front().second);
    if (t >= knots.back().first) return std::log(knots.back().second);
    for (size_t k = 1; k < knots.size(); ++k) {
        if (t > knots[k].first) continue;
        double t0 = knots[k - 1].first, t1 = knots[k].first;
        double l0 = std::log(knots[k - 1].second), l1 = std::log(knots[k].second);
        return l0 + (l1 - l0) * (t - t0) / (t1 - t0);
    }
    return std::log(knots.back().second);
}

double SeparationPath::dlog_at(double t) const {
    if (knots.size() < 2) return 0.0;
    if (t < knots.front().first || t > knots.back().first) return 0.0;
    for (size_t k = 1; k < knots.size(); ++k) {
        if (t < knots[k].first || k + 1 == knots.size()) {
            double t0 = knots[k - 1].first, t1 = knots[k].first;
            double l0 = std::log(knots[k - 1].second), l1 = std::log(knots[k].second);
            return (l1 - l0) / (t1 - t0);
        }
    }
    return 0.0;
}

namespace {

void check_profile(const WindingProfile& w, const SeparationPath& zp) {
    if (w.groups.empty()) throw ValidationError("winding profile needs at least one group");
    if (w.breaks.size() != w.groups.size() + 1)
        throw ValidationError("breakpoints must number one more than the groups");
    for (size_t k = 1; k < w.breaks.size(); ++k)
        if (!(w.breaks[k] > w.breaks[k - 1]))
            throw ValidationError("breakpoints must be strictly increasing");
    for (const auto& [eps, n] : w.groups) {
        if (eps != 1 && eps != -1) throw ValidationError("group winding sign must be +-1");
        if (n < 1) throw ValidationError("group needs at least one half-twist");
    }
    if (zp.knots.empty()) throw ValidationError("separation path needs knots");
    for (const auto& [t, v] : zp.knots)
        if (!(v > 0.0)) throw ValidationError("separation must stay positive");
    for (size_t k = 1; k < zp.knots.size(); ++k)
        if (!(zp.knots[k].first > zp.knots[k - 1].first))
            throw ValidationError("separation knots must be strictly increasing in time");
}

// time average of log separation over [a, b]; exact for the piecewise-linear
// log, and exactly the constant when the path is flat there
double mean_log(const SeparationPath& zp, double a, double b) {
    std::vector<double> cuts{a};
    for (const auto& [t, v] : zp.knots)
        if (t > a && t < b) cuts.push_back(t);
    cuts.push_back(b);
    bool flat = true;
    double first = zp.log_at(a);
    double acc = 0.0;
    for (size_t k = 1; k < cuts.size(); ++k) {
        double la = zp.log_at(cuts[k - 1]), lb = zp.log_at(cuts[k]);
        if (la != first || lb != first) flat = false;
        acc += (cuts[k] - cuts[k - 1]) * 0.5 * (la + lb);
    }
    return flat ? first : acc / (b - a);
}

} // namespace

std::complex<double> detect_integral_closed(const WindingProfile& w,
                                            const SeparationPath& zp) {
    check_profile(w, zp);
    const size_t m = w.groups.size();
    double total = 0.0;  // sum with the (2 pi)^-2 i^-1 prefactor left out
    double wound = 0.0;  // mu * sum_{l<k} eps_l n_l pi
    for (size_t k = 0; k < m; ++k) {
        double a = w.breaks[k], b = w.breaks[k + 1];
        double rate = w.mu * w.groups[k].first * w.groups[k].second * kPi;
        total += wound * (zp.log_at(b) - zp.log_at(a));
        total += rate * (zp.log_at(b) - mean_log(zp, a, b));
        wound += rate;
    }
    // overall/( (2 pi)^2 i ) = -i * overall / (4 pi^2)
    return std::complex<double>(0.0, -w.overall * total / (4.0 * kPi * kPi));
}

std::complex<double> detect_integral_numeric(const WindingProfile& w,
                                             const SeparationPath& zp, double tol) {
    check_profile(w, zp);
    const double t0 = w.breaks.front(), t1 = w.breaks.back();

    // segment grid aligned with every breakpoint and separation knot
    std::vector<double> cuts{t0, t1};
    for (double b : w.breaks)
        if (b > t0 && b < t1) cuts.push_back(b);
    for (const auto& [t, v] : zp.knots)
        if (t > t0 && t < t1) cuts.push_back(t);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto theta_rate = [&](double t) {
        for (size_t k = 0; k < w.groups.size(); ++k)
            if (t < w.breaks[k + 1] || k + 1 == w.groups.size())
                return w.groups[k].first * w.groups[k].second * kPi /
                       (w.breaks[k + 1] - w.breaks[k]);
        return 0.0;
    };

    // two stages: theta by cumulative integration of its rate, then the outer
    // integral of dlog z' x theta
    auto evaluate = [&](int refine) {
        double theta = 0.0, outer = 0.0;
        for (size_t c = 1; c < cuts.size(); ++c) {
            double h = (cuts[c] - cuts[c - 1]) / refine;
            for (int i = 0; i < refine; ++i) {
                double a = cuts[c - 1] + i * h, b = a + h;
                double mid = 0.5 * (a + b);
                double th_a = theta;
                double th_b = theta + theta_rate(mid) * h;
                outer += zp.dlog_at(mid) * 0.5 * (th_a + th_b) * h;
                theta = th_b;
            }
        }
        return outer;
    };

    double prev = evaluate(1);
    for (int refine = 2; refine <= (1 << 20); refine *= 2) {
        double cur = evaluate(refine);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) {
            double total = w.mu * cur;
            return std::complex<double>(0.0, -w.overall * total / (4.0 * kPi * kPi));
        }
        prev = cur;
    }
    throw ValidationError("detect quadrature failed to converge within budget");
}

} // namespace linkbook
