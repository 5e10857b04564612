#ifndef EXLAB_SPECTRAL_HPP
#define EXLAB_SPECTRAL_HPP

#include <vector>

#include "exlab/graph.hpp"

namespace exlab {

struct SpectralResult {
    double rho = 0.0;                 // Perron root estimate (final Rayleigh quotient)
    std::vector<double> vec;          // per-vertex entries, max entry 1, zero off the winning component
    double residual = 0.0;            // max_v |rho * x_v - sum_{u ~ v} x_u|
    double certified_lower = 0.0;     // Rayleigh quotient of vec: a true lower bound on rho(G)
    bool converged = true;
    long long iterations = 0;
};

inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kDefaultTieTol = 1e-9;

// Power iteration on A+I per connected component from the all-ones vector,
// stopping when successive Rayleigh quotients differ by less than tol and the
// eigen-equation residual is small; the component with the largest root wins.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol);
SpectralResult spectral_radius(const AdjView& g, double tol = kDefaultTol);

// 2 sum_{uv in E} x_u x_v / sum_v x_v^2; a lower bound on rho for any
// nonnegative nonzero x.
double rayleigh(const Graph& g, const std::vector<double>& x);

double eigen_residual(const Graph& g, const SpectralResult& r);

// Perron root of K_clique v K_p(parts) from the equitable-partition quotient
// matrix (one class per nonempty part plus the clique), symmetrized by class
// sizes and driven by the same power-iteration discipline.
double quotient_rho(int clique, const std::vector<int>& parts, double tol = kDefaultTol);

enum class RhoOrder { Less, Equal, Greater };

// Compares Perron roots; differences below tie_tol are ties unless one side's
// certified lower bound clears the other's estimate plus residual.
RhoOrder compare_rho(const Graph& g, const Graph& h, double tie_tol = kDefaultTieTol,
                     double tol = kDefaultTol);

} // namespace exlab

#endif
