#include "exlab/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>

#include "exlab/errors.hpp"

namespace exlab {

namespace {

constexpr long long kIterationCap = 1'000'000;

void matvec(const AdjView& g, const std::vector<double>& x, std::vector<double>& out) {
    for (int v = 0; v < g.n; ++v) {
        double s = 0.0;
        const std::uint64_t* row = g.row(v);
        for (int w = 0; w < g.stride; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                s += x[(w << 6) + b];
            }
        }
        out[v] = s;
    }
}

struct ComponentRun {
    double rho = 0.0;
    std::vector<double> vec;
    double residual = 0.0;
    bool converged = true;
    long long iterations = 0;
};

// Power iteration on (A+I) restricted to one component's support. The shift
// keeps the iteration from cycling on bipartite components.
ComponentRun run_component(const AdjView& g, const std::vector<int>& support, double tol) {
    const int n = g.n;
    const double resid_target = 1e-12 * std::max(1, n);
    std::vector<double> x(n, 0.0), ax(n, 0.0);
    for (int v : support) x[v] = 1.0;

    ComponentRun out;
    double prev = -1.0;
    for (long long it = 0; it < kIterationCap; ++it) {
        matvec(g, x, ax);
        double num = 0.0, den = 0.0, resid = 0.0;
        for (int v : support) {
            num += x[v] * ax[v];
            den += x[v] * x[v];
        }
        double rho = num / den;
        for (int v : support) resid = std::max(resid, std::abs(rho * x[v] - ax[v]));
        out.rho = rho;
        out.residual = resid;
        out.iterations = it + 1;
        if (it > 0 && std::abs(rho - prev) < tol && resid <= resid_target) {
            out.converged = true;
            break;
        }
        out.converged = false;
        prev = rho;
        double mx = 0.0;
        for (int v : support) {
            x[v] += ax[v]; // (A+I) x
            mx = std::max(mx, x[v]);
        }
        for (int v : support) x[v] /= mx;
    }
    double mx = 0.0;
    for (int v : support) mx = std::max(mx, x[v]);
    for (int v : support) x[v] /= mx;
    out.vec = std::move(x);
    return out;
}

std::vector<std::vector<int>> view_components(const AdjView& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n, false);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            const std::uint64_t* row = g.row(u);
            for (int w = 0; w < g.stride; ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    int b = std::countr_zero(bits);
                    bits &= bits - 1;
                    int v = (w << 6) + b;
                    if (!seen[v]) {
                        seen[v] = true;
                        stack.push_back(v);
                    }
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace

SpectralResult spectral_radius(const AdjView& g, double tol) {
    if (g.n < 1) throw ValidationError("spectral_radius needs at least one vertex");
    if (tol <= 0) throw ValidationError("tolerance must be positive");

    SpectralResult best;
    best.vec.assign(g.n, 0.0);
    bool first = true;
    for (const auto& comp : view_components(g)) {
        ComponentRun run = run_component(g, comp, tol);
        best.iterations += run.iterations;
        if (first || run.rho > best.rho) {
            best.rho = run.rho;
            best.residual = run.residual;
            best.converged = run.converged;
            best.vec = std::move(run.vec);
            first = false;
        }
    }
    // Rayleigh quotient of the returned vector, recomputed directly.
    std::vector<double> ax(g.n, 0.0);
    matvec(g, best.vec, ax);
    double num = 0.0, den = 0.0;
    for (int v = 0; v < g.n; ++v) {
        num += best.vec[v] * ax[v];
        den += best.vec[v] * best.vec[v];
    }
    best.certified_lower = num / den;

#ifndef NDEBUG
    long long degsum = 0;
    int dmax = 0;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        degsum += d;
        dmax = std::max(dmax, d);
    }
    assert(best.rho >= static_cast<double>(degsum) / g.n - 1e-9);
    assert(best.rho <= dmax + 1e-9);
#endif
    return best;
}

SpectralResult spectral_radius(const Graph& g, double tol) {
    return spectral_radius(g.view(), tol);
}

double rayleigh(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.order())
        throw ValidationError("vector length must equal the vertex count");
    double den = 0.0;
    for (double v : x) den += v * v;
    if (den == 0.0) throw ValidationError("rayleigh quotient of the zero vector");
    double num = 0.0;
    for (auto [u, v] : g.edges()) num += 2.0 * x[u] * x[v];
    return num / den;
}

double eigen_residual(const Graph& g, const SpectralResult& r) {
    if (static_cast<int>(r.vec.size()) != g.order())
        throw ValidationError("vector length must equal the vertex count");
    std::vector<double> ax(g.order(), 0.0);
    matvec(g.view(), r.vec, ax);
    double resid = 0.0;
    for (int v = 0; v < g.order(); ++v)
        resid = std::max(resid, std::abs(r.rho * r.vec[v] - ax[v]));
    return resid;
}

double quotient_rho(int clique, const std::vector<int>& parts, double tol) {
    if (clique < 0) throw ValidationError("clique size must be nonnegative");
    if (parts.empty()) throw ValidationError("quotient_rho needs at least one part");
    for (int s : parts)
        if (s < 0) throw ValidationError("part sizes must be nonnegative");
    if (tol <= 0) throw ValidationError("tolerance must be positive");

    std::vector<double> size; // class sizes: nonempty parts, then the clique
    std::vector<double> diag; // within-class degree
    for (int s : parts)
        if (s > 0) {
            size.push_back(s);
            diag.push_back(0.0);
        }
    if (clique > 0) {
        size.push_back(clique);
        diag.push_back(clique - 1);
    }
    const int m = static_cast<int>(size.size());
    if (m == 0) return 0.0;
    if (m == 1) return diag[0];

    // Symmetrized quotient matrix: S[a][b] = sqrt(size_a * size_b) off the
    // diagonal (all distinct classes are fully joined), within-class degree on it.
    std::vector<double> s(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            s[a * m + b] = a == b ? diag[a] : std::sqrt(size[a] * size[b]);

    std::vector<double> x(m, 1.0), sx(m, 0.0);
    double prev = -1.0, rho = 0.0;
    for (long long it = 0; it < kIterationCap; ++it) {
        for (int a = 0; a < m; ++a) {
            double acc = 0.0;
            for (int b = 0; b < m; ++b) acc += s[a * m + b] * x[b];
            sx[a] = acc;
        }
        double num = 0.0, den = 0.0, resid = 0.0;
        for (int a = 0; a < m; ++a) {
            num += x[a] * sx[a];
            den += x[a] * x[a];
        }
        rho = num / den;
        for (int a = 0; a < m; ++a) resid = std::max(resid, std::abs(rho * x[a] - sx[a]));
        if (it > 0 && std::abs(rho - prev) < tol && resid <= 1e-12 * m) break;
        prev = rho;
        double mx = 0.0;
        for (int a = 0; a < m; ++a) {
            x[a] += sx[a];
            mx = std::max(mx, std::abs(x[a]));
        }
        for (int a = 0; a < m; ++a) x[a] /= mx;
    }
    return rho;
}

RhoOrder compare_rho(const Graph& g, const Graph& h, double tie_tol, double tol) {
    if (tie_tol <= 0) throw ValidationError("tie tolerance must be positive");
    SpectralResult a = spectral_radius(g, tol);
    SpectralResult b = spectral_radius(h, tol);
    if (!a.converged || !b.converged)
        throw VerificationError("compare_rho: power iteration did not converge");
    double diff = a.rho - b.rho;
    if (diff >= tie_tol) return RhoOrder::Greater;
    if (diff <= -tie_tol) return RhoOrder::Less;
    if (a.certified_lower > b.rho + b.residual) return RhoOrder::Greater;
    if (b.certified_lower > a.rho + a.residual) return RhoOrder::Less;
    return RhoOrder::Equal;
}

} // namespace exlab
