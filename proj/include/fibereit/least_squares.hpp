#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>

namespace fibereit {

struct FitOptions {
    int max_iterations = 200;
    double relative_cost_tol = 1e-10;
    double lambda0 = 1e-3;
    double jacobian_step = 1e-7;
};

struct FitOutcome {
    Eigen::VectorXd params;
    Eigen::MatrixXd covariance;  // (J^T J)^-1 at the solution
    double chi2 = 0.0;           // sum of squared residuals
    int iterations = 0;
    bool converged = false;
    int n_residuals = 0;
};

struct FitFailure : std::runtime_error {
    explicit FitFailure(const std::string& what, double residual_norm = 0.0)
        : std::runtime_error(what), residual_norm(residual_norm) {}
    double residual_norm;
};

/// Damped least squares (Levenberg-Marquardt) with a forward-difference
/// Jacobian. Residuals are expected pre-weighted (r_i = (model-data)/sigma),
/// in which case `covariance` is directly the parameter covariance.
inline FitOutcome levenberg_marquardt(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residuals,
    Eigen::VectorXd x, const FitOptions& opt = {}) {
    using Eigen::MatrixXd;
    using Eigen::VectorXd;

    const int n = static_cast<int>(x.size());
    VectorXd r = residuals(x);
    const int m = static_cast<int>(r.size());
    if (m < n) throw FitFailure("levenberg_marquardt: fewer residuals than parameters");

    double cost = 0.5 * r.squaredNorm();
    double lambda = opt.lambda0;
    FitOutcome out;
    out.n_residuals = m;

    auto jacobian = [&](const VectorXd& p, const VectorXd& r0) {
        MatrixXd J(m, n);
        for (int j = 0; j < n; ++j) {
            double h = opt.jacobian_step * std::max(1.0, std::abs(p[j]));
            VectorXd q = p;
            q[j] += h;
            J.col(j) = (residuals(q) - r0) / h;
        }
        return J;
    };

    bool converged = false;
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        MatrixXd J = jacobian(x, r);
        MatrixXd JtJ = J.transpose() * J;
        VectorXd g = J.transpose() * r;
        bool stepped = false;
        for (int tries = 0; tries < 30; ++tries) {
            MatrixXd A = JtJ;
            for (int k = 0; k < n; ++k) A(k, k) += lambda * std::max(JtJ(k, k), 1e-12);
            VectorXd step = A.ldlt().solve(-g);
            VectorXd xt = x + step;
            VectorXd rt = residuals(xt);
            double ct = 0.5 * rt.squaredNorm();
            if (std::isfinite(ct) && ct < cost) {
                double rel = (cost - ct) / std::max(cost, 1e-300);
                x = xt;
                r = rt;
                cost = ct;
                lambda = std::max(lambda / 4.0, 1e-12);
                stepped = true;
                if (rel < opt.relative_cost_tol) converged = true;
                break;
            }
            lambda *= 8.0;
        }
        if (!stepped) {
            // no downhill step found at any damping: treat as converged
            converged = true;
            break;
        }
        if (converged) break;
    }

    Eigen::MatrixXd J = jacobian(x, r);
    Eigen::MatrixXd JtJ = J.transpose() * J;
    out.params = x;
    out.covariance = JtJ.completeOrthogonalDecomposition().pseudoInverse();
    out.chi2 = r.squaredNorm();
    out.iterations = it;
    out.converged = converged;
    return out;
}

}  // namespace fibereit
