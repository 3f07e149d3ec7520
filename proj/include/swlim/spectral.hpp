#pragma once
// Power iteration, Collatz-Wielandt certification (exact and outward-rounded),
// Perron-Frobenius hypothesis validation, stationary distributions, and the
// analytic Av(213) certificate.

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swlim/quotient.hpp"

namespace swlim {

struct PFReport {
  bool strongly_connected = false;  // the hub component covers every vertex
  bool hub_component_strongly_connected = false;
  bool has_loop = false;  // some vertex in the hub component has a self-edge
  std::vector<int> dropped;  // vertices outside the hub component
};
PFReport validate_pf_hypotheses(const std::vector<std::vector<std::pair<int, Rational>>>& out,
                                int hub);
PFReport validate_pf_hypotheses(const QuotientGraph& q);

struct PowerResult {
  double lambda = 0;        // successive-norm ratio at the last step
  double lambda_upper = 0;  // max_i (Av)_i / v_i: rigorous upper bound on rho
  double lambda_lower = 0;  // min_i (Av)_i / v_i (float, uncertified)
  Eigen::VectorXd v;        // final normalised vector (sup-norm 1)
  int iters = 0;
  bool converged = false;
};

// op(v, u): u = push-forward of v. Starts from all ones; renormalises each
// step; stops when successive norm-ratio estimates differ by < tol.
PowerResult power_iteration(int dim,
                            const std::function<void(const std::vector<double>&,
                                                     std::vector<double>&)>& op,
                            double tol = 1e-12, int max_iters = 200000);

PowerResult power_iteration_quotient(const QuotientGraph& q, double tol = 1e-12,
                                     int max_iters = 200000);
PowerResult power_iteration_graph(const AvoiderGraph& g, double tol = 1e-12,
                                  int max_iters = 200000);

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double d);

// Exact CW: rho = min over supported i of (vA)_i / v_i with rational weights.
// v entries are doubles (dyadic rationals), converted exactly.
Rational certify_collatz_wielandt(const QuotientGraph& q, const Eigen::VectorXd& v);
Rational certify_collatz_wielandt_graph(const AvoiderGraph& g, const Eigen::VectorXd& v);

// Outward-rounded CW for the implicit operators: returns a double that is a
// guaranteed lower bound on min_i (Av)_i / v_i (FE_DOWNWARD evaluation;
// divisions by upward-rounded T). Implemented in certified.cpp, which is
// compiled with -frounding-math.
double certify_cw_implicit_A(const ImplicitAOp& op, const std::vector<double>& v);
double certify_cw_implicit_B(const ImplicitBOp& op, const std::vector<double>& v);

struct BoundCertificate {
  std::string pattern;
  std::string quotient_kind;
  int cutoff = 0;
  double lambda_estimate = 0;   // rigorous upper function value (max ratio)
  Rational rho_certified = 0;   // guaranteed lower bound on the PF eigenvalue
  int iterations = 0;
  double tolerance = 0;
  std::string vector_digest;    // FNV-1a over the vector's byte image
  std::string arithmetic;       // "exact-rational" | "outward-rounded-double"
  bool conditional = false;     // 1324 weighted quotient: cites Conjecture 1
  std::string note;
};
std::string digest_vector(const std::vector<double>& v);
void write_certificate(std::ostream& os, const BoundCertificate& c);

// Exact alpha(N) = 4 - 2^{N-1}/3^{N-2}: the truncated coordinate sum of the
// paper's infinite-chain Collatz-Wielandt vector. Certifies L(213) >= alpha;
// see the repo README for why this is not a cutoff-graph CW value.
BoundCertificate analytic_213_certificate(int N);
Rational alpha_213(int N);

enum class StepRule { uniform_out_degree, paper_variant };
struct StationaryResult {
  Eigen::VectorXd sigma;  // sums to 1
  double residual = 0;    // max-norm of sigma P - sigma
  int iters = 0;
};
// sigma P = sigma on the hub SCC of g; rule chooses P row weights
// (mult/outdeg, or 1/|tau| per edge as the paper writes, renormalised).
StationaryResult stationary_distribution(const AvoiderGraph& g, StepRule rule,
                                         double tol = 1e-13, int max_iters = 500000);

double dense_spectral_radius(const Eigen::MatrixXd& A);

}  // namespace swlim
