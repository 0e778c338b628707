#include "fitefrac/sfde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fitefrac/rlops.hpp"
#include "fitefrac/specfn.hpp"

namespace fitefrac {

CoefficientSet::CoefficientSet(Coefficient G_, Coefficient Q_, Coefficient R_, Coefficient V_,
                               double a, double c)
    : G(std::move(G_)), Q(std::move(Q_)), R(std::move(R_)), V(std::move(V_)) {
    sup_G = G.sup_abs(a, c);
    sup_R = R.sup_abs(a, c);
    if (!std::isfinite(sup_G) || !std::isfinite(sup_R)) {
        throw DomainError("coefficient set: G and R must be bounded on [a, c]");
    }
    m = std::max(sup_G, sup_R);
}

std::string to_string(SolvePath path) { return path == SolvePath::Picard ? "picard" : "marching"; }

SolveFailure::SolveFailure(const std::string& what, SolveReport partial)
    : ConvergenceError(what, partial.iterations,
                       partial.increments.size() >= 2
                           ? partial.increments.back() / partial.increments[partial.increments.size() - 2]
                           : 0.0),
      partial_(std::make_shared<const SolveReport>(std::move(partial))) {}

namespace {

// Node data shared by both schemes. Everything is in regularized form: with
// gamma = 1 - alpha, W = (t-a)^gamma f and the forcing terms enter as (t-a)^gamma Q.
struct Discretization {
    Discretization(const CoefficientSet& coeffs, const Order& order, const GradedGrid& grid)
        : op(grid, order.gamma(), order.gamma()) {
        const std::size_t size = grid.size();
        G.resize(size);
        R.resize(size);
        Qr.resize(size);
        Vr.resize(size);
        factor.resize(size);
        const double inv_gamma = 1.0 / specfn::gamma_fn(order.alpha());
        for (std::size_t j = 0; j < size; ++j) {
            const double t = grid.node(j);
            const double weight = std::pow(t - grid.a(), order.gamma());
            G[j] = coeffs.G(t);
            R[j] = coeffs.R(t);
            Qr[j] = weight * coeffs.Q(t);
            Vr[j] = weight * coeffs.V(t);
            factor[j] = weight * inv_gamma * op.scale();
        }
    }

    KernelOperator op;
    std::vector<double> G, R, Qr, Vr;
    std::vector<double> factor;  // (t_i - a)^gamma / Gamma(alpha) * L^(1 - 2 gamma)
};

double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
    double d = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) d = std::max(d, std::abs(x[j] - y[j]));
    return d;
}

// One application of the coupled integral map.
void picard_map(const Discretization& disc, double f_a, double g_a, const std::vector<double>& wf,
                const std::vector<double>& wg, std::vector<double>& out_f, std::vector<double>& out_g,
                std::vector<double>& uf, std::vector<double>& ug) {
    const std::size_t size = wf.size();
    for (std::size_t k = 0; k < size; ++k) {
        ug[k] = disc.G[k] * wg[k] + disc.Qr[k];
        uf[k] = disc.R[k] * wf[k] + disc.Vr[k];
    }
    out_f[0] = f_a;
    out_g[0] = g_a;
    for (std::size_t i = 1; i < size; ++i) {
        const double* w = disc.op.weights(i);
        double sf = 0.0, sg = 0.0;
        for (std::size_t k = 0; k <= i; ++k) {
            sf += w[k] * ug[k];
            sg += w[k] * uf[k];
        }
        out_f[i] = f_a + disc.factor[i] * sf;
        out_g[i] = g_a + disc.factor[i] * sg;
    }
}

struct PicardOutcome {
    std::vector<double> wf, wg;
    std::vector<double> increments;
    int iterations = 0;
    bool converged = false;
};

PicardOutcome run_picard(const Discretization& disc, double f_a, double g_a, std::size_t size,
                         const SolveOptions& opts) {
    constexpr double kDivergence = 1e100;
    PicardOutcome out;
    out.wf.assign(size, f_a);
    out.wg.assign(size, g_a);
    std::vector<double> nf(size), ng(size), uf(size), ug(size);
    for (int it = 1; it <= opts.max_iter; ++it) {
        picard_map(disc, f_a, g_a, out.wf, out.wg, nf, ng, uf, ug);
        const double inc = std::max(max_abs_diff(nf, out.wf), max_abs_diff(ng, out.wg));
        out.wf.swap(nf);
        out.wg.swap(ng);
        out.iterations = it;
        out.increments.push_back(inc);
        if (!std::isfinite(inc) || inc > kDivergence) break;
        if (inc <= opts.tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

// Causal scheme: at node i the history sums are known and the two current
// regularized values solve a 2x2 linear system.
void run_marching(const Discretization& disc, double f_a, double g_a, std::vector<double>& wf,
                  std::vector<double>& wg) {
    const std::size_t size = disc.G.size();
    wf.assign(size, 0.0);
    wg.assign(size, 0.0);
    std::vector<double> ug(size), uf(size);
    wf[0] = f_a;
    wg[0] = g_a;
    ug[0] = disc.G[0] * g_a + disc.Qr[0];
    uf[0] = disc.R[0] * f_a + disc.Vr[0];
    for (std::size_t i = 1; i < size; ++i) {
        const double* w = disc.op.weights(i);
        double hf = 0.0, hg = 0.0;
        for (std::size_t k = 0; k < i; ++k) {
            hf += w[k] * ug[k];
            hg += w[k] * uf[k];
        }
        const double cw = disc.factor[i] * w[i];
        const double r1 = f_a + disc.factor[i] * hf + cw * disc.Qr[i];
        const double r2 = g_a + disc.factor[i] * hg + cw * disc.Vr[i];
        const double a12 = -cw * disc.G[i];
        const double a21 = -cw * disc.R[i];
        const double det = 1.0 - a12 * a21;
        if (std::abs(det) < 1e-14) {
            throw ConvergenceError("marching: singular local system at node " + std::to_string(i),
                                   static_cast<int>(i), 0.0);
        }
        wf[i] = (r1 - a12 * r2) / det;
        wg[i] = (r2 - a21 * r1) / det;
        ug[i] = disc.G[i] * wg[i] + disc.Qr[i];
        uf[i] = disc.R[i] * wf[i] + disc.Vr[i];
    }
}

double defect(const Discretization& disc, double f_a, double g_a, const std::vector<double>& wf,
              const std::vector<double>& wg) {
    const std::size_t size = wf.size();
    std::vector<double> nf(size), ng(size), uf(size), ug(size);
    picard_map(disc, f_a, g_a, wf, wg, nf, ng, uf, ug);
    double d = 0.0;
    for (std::size_t j = 1; j < size; ++j) {
        d = std::max(d, std::max(std::abs(nf[j] - wf[j]), std::abs(ng[j] - wg[j])));
    }
    return d;
}

}  // namespace

SolveReport solve_system(const CoefficientSet& coeffs, const Order& order, double f_a, double g_a,
                         const GradedGrid& grid, const SolveOptions& opts) {
    if (!(opts.tol > 0.0)) throw DomainError("solve_system: tol must be positive");
    if (opts.max_iter < 1) throw DomainError("solve_system: max_iter must be at least 1");
    if (!std::isfinite(f_a) || !std::isfinite(g_a)) {
        throw DomainError("solve_system: initial data must be finite");
    }
    const Discretization disc(coeffs, order, grid);
    const double gamma = order.gamma();

    auto make_report = [&](std::vector<double> wf, std::vector<double> wg) {
        return SolveReport{WeightedFn(gamma, grid, std::move(wf)), WeightedFn(gamma, grid, std::move(wg)), 0, 0.0, SolvePath::Picard, true, {}};
    };

    if (opts.method != SolveMethod::Marching) {
        PicardOutcome pic = run_picard(disc, f_a, g_a, grid.size(), opts);
        const bool finite = std::all_of(pic.wf.begin(), pic.wf.end(), [](double v) { return std::isfinite(v); }) &&
                            std::all_of(pic.wg.begin(), pic.wg.end(), [](double v) { return std::isfinite(v); });
        if (pic.converged || opts.method == SolveMethod::Picard) {
            if (!finite) {
                // Keep the partial report constructible.
                std::fill(pic.wf.begin(), pic.wf.end(), 0.0);
                std::fill(pic.wg.begin(), pic.wg.end(), 0.0);
            }
            const double res = finite ? defect(disc, f_a, g_a, pic.wf, pic.wg)
                                      : std::numeric_limits<double>::infinity();
            SolveReport report = make_report(std::move(pic.wf), std::move(pic.wg));
            report.iterations = pic.iterations;
            report.residual = res;
            report.path = SolvePath::Picard;
            report.converged = pic.converged;
            report.increments = std::move(pic.increments);
            if (!pic.converged) {
                throw SolveFailure("picard iteration did not reach tol " + std::to_string(opts.tol) +
                                       " within " + std::to_string(opts.max_iter) + " iterations",
                                   std::move(report));
            }
            return report;
        }
    }

    std::vector<double> wf, wg;
    run_marching(disc, f_a, g_a, wf, wg);
    const double res = defect(disc, f_a, g_a, wf, wg);
    SolveReport report = make_report(std::move(wf), std::move(wg));
    report.iterations = 1;
    report.residual = res;
    report.path = SolvePath::Marching;
    report.converged = true;
    return report;
}

double residual(const CoefficientSet& coeffs, const Order& order, const SolveReport& report) {
    const GradedGrid& grid = report.f.grid();
    if (!grid.same_as(report.g.grid())) {
        throw DomainError("residual: f and g live on different grids");
    }
    const Discretization disc(coeffs, order, grid);
    const std::vector<double> wf(report.f.reg().begin(), report.f.reg().end());
    const std::vector<double> wg(report.g.reg().begin(), report.g.reg().end());
    return defect(disc, report.f.f_a(), report.g.f_a(), wf, wg);
}

SolveReport solve_fite(const Coefficient& P, const Order& order, double f_a, double g_a,
                       const GradedGrid& grid, const SolveOptions& opts) {
    if (P.range(grid.a(), grid.c()).second < 0.0) {
        throw DomainError("solve_fite: P must be non-negative on [a, c]");
    }
    const Coefficient minus_p = P.negated();
    const CoefficientSet coeffs(Coefficient::constant(1.0), Coefficient::constant(0.0), minus_p,
                                Coefficient::constant(0.0), grid.a(), grid.c());
    return solve_system(coeffs, order, f_a, g_a, grid, opts);
}

SolveReport solve_relax_osc(double P, const Coefficient& V, const Order& order, double f_a,
                            double g_a, const GradedGrid& grid, const SolveOptions& opts) {
    if (!(P > 0.0) || !std::isfinite(P)) {
        throw DomainError("solve_relax_osc: P must be a positive constant");
    }
    const CoefficientSet coeffs(Coefficient::constant(1.0), Coefficient::constant(0.0),
                                Coefficient::constant(-P), V, grid.a(), grid.c());
    return solve_system(coeffs, order, f_a, g_a, grid, opts);
}

}  // namespace fitefrac
