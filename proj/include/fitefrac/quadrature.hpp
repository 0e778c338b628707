#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "fitefrac/error.hpp"

namespace fitefrac::quad {

/// Nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1 - x)^right_exp (1 + x)^left_exp, exponents > -1.
/// Built with the Golub-Welsch eigenvalue method.
GaussRule gauss_jacobi(std::size_t points, double right_exp, double left_exp);

/// Gauss-Legendre rule (Jacobi with both exponents zero).
GaussRule gauss_legendre(std::size_t points);

/// The three rules used for the kernel (s - a)^-gamma (t - s)^-beta on one piece:
/// plain Legendre and the two one-sided Jacobi rules. Shared and immutable.
struct KernelRules {
    double beta;
    double gamma;
    GaussRule legendre16;
    GaussRule legendre8;
    GaussRule left16;   // weight (1 + x)^-gamma
    GaussRule right16;  // weight (1 - x)^-beta

    static std::shared_ptr<const KernelRules> get(double beta, double gamma);
};

/// Integrates (s - a)^-gamma (t - s)^-beta phi(s) over [lo, hi], a <= lo < hi <= t.
///
/// The interval is split until every piece is at least its own width away from
/// any singular point not sitting on one of its endpoints. Pieces touching a
/// singular endpoint use the matching Gauss-Jacobi rule, all others Gauss-Legendre.
class SingularKernel {
public:
    SingularKernel(double a, double t, double beta, double gamma);

    double a() const { return a_; }
    double t() const { return t_; }

    template <std::size_t M, typename Phi>
    std::array<double, M> integrate_multi(double lo, double hi, Phi&& phi) const;

    template <typename Phi>
    double integrate(double lo, double hi, Phi&& phi) const {
        return integrate_multi<1>(lo, hi, [&](double s) { return std::array<double, 1>{phi(s)}; })[0];
    }

    /// Moments {int K, int K (s - lo)/(hi - lo)} over [lo, hi].
    std::array<double, 2> linear_moments(double lo, double hi) const {
        const double h = hi - lo;
        return integrate_multi<2>(lo, hi, [lo, h](double s) {
            return std::array<double, 2>{1.0, (s - lo) / h};
        });
    }

private:
    double a_;
    double t_;
    double beta_;
    double gamma_;
    std::shared_ptr<const KernelRules> rules_;

    static constexpr int kMaxPieces = 4000;
};

template <std::size_t M, typename Phi>
std::array<double, M> SingularKernel::integrate_multi(double lo, double hi, Phi&& phi) const {
    if (!(lo >= a_ && hi <= t_ && lo < hi)) {
        throw DomainError("SingularKernel: need a <= lo < hi <= t");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    const bool sing_a = gamma_ > 0.0;
    const bool sing_t = beta_ > 0.0;

    std::array<double, M> total{};
    std::vector<std::pair<double, double>> stack{{lo, hi}};
    int pieces = 0;
    while (!stack.empty()) {
        auto [x0, x1] = stack.back();
        stack.pop_back();
        if (++pieces > kMaxPieces) {
            throw QuadratureError("SingularKernel: piece budget exhausted near a singular point");
        }
        const double width = x1 - x0;
        const bool left_sing = sing_a && x0 == a_;
        const bool right_sing = sing_t && x1 == t_;
        const double d_left = (!sing_a || left_sing) ? inf : x0 - a_;
        const double d_right = (!sing_t || right_sing) ? inf : t_ - x1;

        if ((left_sing && right_sing) || std::min(d_left, d_right) < width) {
            const double mid = 0.5 * (x0 + x1);
            if (!(mid > x0 && mid < x1)) {
                throw QuadratureError("SingularKernel: piece collapsed below machine resolution");
            }
            stack.emplace_back(x0, mid);
            stack.emplace_back(mid, x1);
            continue;
        }

        const double half = 0.5 * width;
        const double centre = 0.5 * (x0 + x1);
        const GaussRule* rule = nullptr;
        double scale = half;
        if (left_sing) {
            rule = &rules_->left16;
            scale = std::pow(half, 1.0 - gamma_);
        } else if (right_sing) {
            rule = &rules_->right16;
            scale = std::pow(half, 1.0 - beta_);
        } else {
            rule = &rules_->legendre16;
        }
        for (std::size_t g = 0; g < rule->nodes.size(); ++g) {
            const double x = rule->nodes[g];
            const double s = centre + half * x;
            double kern = 1.0;
            if (sing_a && !left_sing) kern *= std::pow(s - a_, -gamma_);
            if (sing_t && !right_sing) kern *= std::pow(t_ - s, -beta_);
            const double wk = scale * rule->weights[g] * kern;
            const std::array<double, M> v = phi(s);
            for (std::size_t m = 0; m < M; ++m) total[m] += wk * v[m];
        }
    }
    return total;
}

/// Product-integration weights for the kernel (s - a)^-gamma (t_i - s)^-beta on the
/// normalized grid sigma_j = (j/n)^r of [0, 1]:
///   int_0^{sigma_i} sigma^-gamma (sigma_i - sigma)^-beta u(sigma) d sigma ~= sum_k w_ik u_k
/// for u piecewise linear between nodes. For an interval of length L the weights
/// scale by L^(1 - beta - gamma).
///
/// The Ramp basis instead stores per-cell moments
///   M_ik = int_{sigma_k}^{sigma_k+1} sigma^(1-gamma) (sigma_i - sigma)^-beta d sigma,  k < i,
/// which scale by L^(2 - beta - gamma).
class ProductWeights {
public:
    enum class Basis { Hat, Ramp };

    ProductWeights(std::size_t n, double r, double beta, double gamma, Basis basis = Basis::Hat);

    std::size_t cells() const { return n_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }

    /// Weights w_i0..w_ii of row i (row 0 is the single zero weight).
    const double* row(std::size_t i) const { return data_.data() + offset(i); }

    /// Shared cached instance.
    static std::shared_ptr<const ProductWeights> get(std::size_t n, double r, double beta, double gamma,
                                                     Basis basis = Basis::Hat);

private:
    static std::size_t offset(std::size_t i) { return i * (i + 1) / 2; }

    std::size_t n_;
    double r_;
    double beta_;
    double gamma_;
    std::vector<double> data_;
};

}  // namespace fitefrac::quad
