#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

namespace reqvar {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct BfgsOptions {
    int max_iterations = 400;
    double gradient_tolerance = 1e-2;  // infinity norm
    double fd_step = 1e-4;             // central-difference step in the optimizer's coordinates
};

struct BfgsResult {
    Eigen::VectorXd x;
    double f = 0.0;
    Eigen::VectorXd gradient;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
    std::string status;
};

Eigen::VectorXd central_gradient(const Objective& f, const Eigen::VectorXd& x, double h, int* evaluations = nullptr);

// Central-difference Hessian; diagonal from the three-point rule, off-diagonals
// from the four-point cross rule.
Eigen::MatrixXd central_hessian(const Objective& f, const Eigen::VectorXd& x, double h);

// Quasi-Newton minimization with the BFGS inverse-Hessian update, an Armijo
// backtracking line search and finite-difference gradients. Non-finite objective
// values are treated as +infinity by the line search.
BfgsResult minimize_bfgs(const Objective& f, const Eigen::VectorXd& x0, const BfgsOptions& options = {});

}  // namespace reqvar
