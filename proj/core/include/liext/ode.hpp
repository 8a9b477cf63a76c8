#pragma once

#include "liext/lie_algebra.hpp"

#include <functional>
#include <vector>

namespace liext {

/// One classical 4th-order step of y' = f(t, y).
template <class State, class F>
State rk4_step(const F& f, double t, double h, const State& y) {
  State k1 = f(t, y);
  State k2 = f(t + h / 2, State(y + (h / 2) * k1));
  State k3 = f(t + h / 2, State(y + (h / 2) * k2));
  State k4 = f(t + h, State(y + h * k3));
  return y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
}

/// Uniform samples of a vector-valued function on [a,b], read back through
/// the declared piecewise-linear interpolation rule.
class SampledVec {
public:
  SampledVec() : a_(0), b_(1) {}
  SampledVec(std::vector<Vec> samples, double a = 0.0, double b = 1.0);
  Vec at(double t) const;
  int segments() const { return static_cast<int>(samples_.size()) - 1; }
  const std::vector<Vec>& samples() const { return samples_; }
  double a() const { return a_; }
  double b() const { return b_; }

private:
  std::vector<Vec> samples_;
  double a_, b_;
};

/// Same for matrix-valued functions.
class SampledMat {
public:
  SampledMat() : a_(0), b_(1) {}
  SampledMat(std::vector<Mat> samples, double a = 0.0, double b = 1.0);
  Mat at(double t) const;
  int segments() const { return static_cast<int>(samples_.size()) - 1; }
  const std::vector<Mat>& samples() const { return samples_; }

private:
  std::vector<Mat> samples_;
  double a_, b_;
};

struct FlowTable {
  std::vector<Mat> nodes;  // Y(t_i), i = 0..steps
  std::vector<Mat> halves; // Y(t_i + h/2), i = 0..steps-1
};

/// Y' = A(t) Y, Y(a) = Y0, two RK4 substeps of h/2 per reported step so the
/// half-node states come out of the same pass.
FlowTable flow_table(const std::function<Mat(double)>& A, const Mat& Y0, double a, double b, int steps);

/// Endpoint of the same solve (single RK4 step per node).
Mat flow_endpoint(const std::function<Mat(double)>& A, const Mat& Y0, double a, double b, int steps);

/// Y' = A(t) Y together with the inverse flow Z' = -Z A(t), both from the
/// identity on [0, steps*h], half nodes included.
struct FlowPairTable {
  std::vector<Mat> F, Fh; // Y at nodes / half nodes
  std::vector<Mat> G, Gh; // Z = Y^{-1}
};
FlowPairTable flow_pair_table(const std::function<Mat(double)>& A, int n, double h, int steps);

/// Automorphism obtained by flowing a time-dependent derivation, Psi' = D(t) Psi
/// with Psi(t0) = id. Samples are uniform on [t0, t1] and interpolated linearly;
/// each one must satisfy the Leibniz identity within contract_tol.
Mat derivation_flow(const LieAlgebra& L, const std::vector<Mat>& D_samples, double t0, double t1,
                    int steps, double contract_tol = 1e-8);

/// 4th-order differentiation of uniform samples (5-point stencils, one-sided
/// at the edges). Falls back to 2nd order when fewer than five samples exist.
std::vector<Vec> differentiate_samples(const std::vector<Vec>& f, double h);

/// 2nd-order stencil at one node: central inside, one-sided at the edges.
Vec central_difference(const std::vector<Vec>& f, int j, double h);

/// Composite Simpson over uniform segments given node and half-node values.
Vec simpson(const std::vector<Vec>& nodes, const std::vector<Vec>& halves, double h);

} // namespace liext
