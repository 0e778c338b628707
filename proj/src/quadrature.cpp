#include "fitefrac/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <map>
#include <mutex>
#include <tuple>

#include "fitefrac/specfn.hpp"

namespace fitefrac::quad {

GaussRule gauss_jacobi(std::size_t points, double right_exp, double left_exp) {
    if (points == 0) {
        throw DomainError("gauss_jacobi: need at least one point");
    }
    if (!(right_exp > -1.0 && left_exp > -1.0)) {
        throw DomainError("gauss_jacobi: exponents must exceed -1");
    }
    const double al = right_exp;
    const double be = left_exp;
    const auto n = static_cast<Eigen::Index>(points);

    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
    diag(0) = (be - al) / (al + be + 2.0);
    for (Eigen::Index k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double s = 2.0 * kk + al + be;
        diag(k) = (be * be - al * al) / (s * (s + 2.0));
        const double num = 4.0 * kk * (kk + al) * (kk + be) * (kk + al + be);
        const double den = s * s * (s + 1.0) * (s - 1.0);
        sub(k - 1) = std::sqrt(num / den);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw QuadratureError("gauss_jacobi: eigenvalue iteration failed");
    }

    const double mu0 = std::exp((al + be + 1.0) * std::log(2.0) + specfn::log_gamma(al + 1.0) +
                                specfn::log_gamma(be + 1.0) - specfn::log_gamma(al + be + 2.0));
    GaussRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    return rule;
}

GaussRule gauss_legendre(std::size_t points) { return gauss_jacobi(points, 0.0, 0.0); }

std::shared_ptr<const KernelRules> KernelRules::get(double beta, double gamma) {
    static std::mutex mutex;
    static std::map<std::pair<double, double>, std::shared_ptr<const KernelRules>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{beta, gamma}];
    if (!slot) {
        auto rules = std::make_shared<KernelRules>();
        rules->beta = beta;
        rules->gamma = gamma;
        rules->legendre16 = gauss_legendre(16);
        rules->legendre8 = gauss_legendre(8);
        rules->left16 = gauss_jacobi(16, 0.0, -gamma);
        rules->right16 = gauss_jacobi(16, -beta, 0.0);
        slot = std::move(rules);
    }
    return slot;
}

SingularKernel::SingularKernel(double a, double t, double beta, double gamma)
    : a_(a), t_(t), beta_(beta), gamma_(gamma) {
    if (!(t > a)) {
        throw DomainError("SingularKernel: need t > a");
    }
    if (!(beta >= 0.0 && beta < 1.0 && gamma >= 0.0 && gamma < 1.0)) {
        throw DomainError("SingularKernel: exponents must lie in [0, 1)");
    }
    rules_ = KernelRules::get(beta, gamma);
}

ProductWeights::ProductWeights(std::size_t n, double r, double beta, double gamma, Basis basis)
    : n_(n), r_(r), beta_(beta), gamma_(gamma), data_(offset(n + 1), 0.0) {
    const bool ramp = basis == Basis::Ramp;
    std::vector<double> nodes(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        nodes[j] = std::pow(static_cast<double>(j) / static_cast<double>(n), r);
    }
    nodes[n] = 1.0;

    // Far cells use an 8-point Legendre rule with the i-independent part of the
    // integrand (left weight factor and hat functions) tabulated once per cell.
    const auto rules = KernelRules::get(beta, gamma);
    const GaussRule& g8 = rules->legendre8;
    constexpr std::size_t P = 8;
    std::vector<double> far_s(n * P), far_left(n * P), far_right(n * P);
    std::vector<char> left_far(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const double x0 = nodes[k];
        const double h = nodes[k + 1] - x0;
        left_far[k] = (gamma == 0.0 || x0 >= 4.0 * h) ? 1 : 0;
        if (!left_far[k]) continue;
        for (std::size_t g = 0; g < P; ++g) {
            const double s = x0 + 0.5 * h * (g8.nodes[g] + 1.0);
            const double base = 0.5 * h * g8.weights[g] * (gamma == 0.0 ? 1.0 : std::pow(s, -gamma));
            const double theta = (s - x0) / h;
            far_s[k * P + g] = s;
            far_left[k * P + g] = ramp ? base * s : base * (1.0 - theta);
            far_right[k * P + g] = ramp ? 0.0 : base * theta;
        }
    }

    for (std::size_t i = 1; i <= n; ++i) {
        double* w = data_.data() + offset(i);
        const double ti = nodes[i];
        const SingularKernel kernel(0.0, ti, beta, gamma);
        for (std::size_t k = 0; k < i; ++k) {
            const double x0 = nodes[k];
            const double x1 = nodes[k + 1];
            const double h = x1 - x0;
            if (left_far[k] && (beta == 0.0 || ti - x1 >= 4.0 * h)) {
                double ml = 0.0, mr = 0.0;
                const std::size_t base = k * P;
                for (std::size_t g = 0; g < P; ++g) {
                    const double kern = beta == 0.0 ? 1.0 : std::pow(ti - far_s[base + g], -beta);
                    ml += far_left[base + g] * kern;
                    mr += far_right[base + g] * kern;
                }
                w[k] += ml;
                if (!ramp) w[k + 1] += mr;
            } else {
                const auto m = kernel.linear_moments(x0, x1);
                if (ramp) {
                    w[k] += x0 * m[0] + h * m[1];
                } else {
                    w[k] += m[0] - m[1];
                    w[k + 1] += m[1];
                }
            }
        }
    }
}

std::shared_ptr<const ProductWeights> ProductWeights::get(std::size_t n, double r, double beta,
                                                          double gamma, Basis basis) {
    using Key = std::tuple<std::size_t, double, double, double, Basis>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const ProductWeights>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(Key{n, r, beta, gamma, basis});
        if (it != cache.end()) return it->second;
    }
    // Built outside the lock; a concurrent duplicate build yields identical weights.
    auto built = std::make_shared<const ProductWeights>(n, r, beta, gamma, basis);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(Key{n, r, beta, gamma, basis}, std::move(built));
    return it->second;
}

}  // namespace fitefrac::quad
