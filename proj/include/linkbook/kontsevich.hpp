#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace linkbook {

enum class CrossingType { plus, minus };
enum class RelOrientation { same, opposite };

/// Parameters of a crossing-group path: two strands wind by +-pi while their
/// separation scales from 1 to lambda, log-linearly in time on [0, 1].
struct CrossingPath {
    int degree = 1;                                      // m >= 1
    double lambda = 1.0;                                 // > 0
    RelOrientation orientation = RelOrientation::same;
    CrossingType xtype = CrossingType::plus;
};

/// Closed form (1/m!) (sigma/(2 pi i))^m (log lambda + s i pi)^m, with
/// sigma = +-1 for same/opposite orientation and s = +-1 for the crossing type.
std::complex<double> crossing_coefficient_closed(const CrossingPath& p);

/// The m-fold iterated integral over the simplex t1 < ... < tm of the
/// dlog integrand chain, evaluated by cumulative quadrature with grid
/// refinement until the relative change drops below tol. Degree <= 4.
std::complex<double> simplex_integral_numeric(const CrossingPath& p, double tol);

/// theta(t) winds by eps_k * n_k * pi on each group segment
/// [t_{k-1}, t_k]; breaks has m+1 strictly increasing entries.
struct WindingProfile {
    std::vector<std::pair<int, int>> groups;  // (eps_k, n_k), n_k >= 1
    std::vector<double> breaks;               // t_0 < t_1 < ... < t_m
    int mu = 1;                               // relative orientation of the two strands
    int overall = 1;                          // circle-to-strand chord orientation sign
};

/// Strictly positive separation of the detecting chord, log-linear between
/// knots (t strictly increasing).
struct SeparationPath {
    std::vector<std::pair<double, double>> knots;  // (t, value)

    double log_at(double t) const;
    double dlog_at(double t) const;  // slope of log value (right-continuous)
};

/// The purely imaginary summand I of the degree-two thread integral,
/// in closed form. Exactly zero for constant separation.
std::complex<double> detect_integral_closed(const WindingProfile& w,
                                            const SeparationPath& zp);

/// Two-level quadrature of the theta-dependent part of the iterated integral;
/// agrees with the closed form within tol.
std::complex<double> detect_integral_numeric(const WindingProfile& w,
                                             const SeparationPath& zp, double tol);

} // namespace linkbook
