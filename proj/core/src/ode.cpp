#include "liext/ode.hpp"

#include <cmath>

namespace liext {

namespace {

template <class T>
T interp(const std::vector<T>& samples, double a, double b, double t) {
  const int nseg = static_cast<int>(samples.size()) - 1;
  if (nseg == 0) return samples[0];
  double u = (t - a) / (b - a) * nseg;
  int i = static_cast<int>(std::floor(u));
  if (i < 0) i = 0;
  if (i >= nseg) i = nseg - 1;
  double w = u - i;
  return (1.0 - w) * samples[i] + w * samples[i + 1];
}

} // namespace

SampledVec::SampledVec(std::vector<Vec> samples, double a, double b)
    : samples_(std::move(samples)), a_(a), b_(b) {
  if (samples_.empty()) throw ContractViolation("empty sample family");
}

Vec SampledVec::at(double t) const { return interp(samples_, a_, b_, t); }

SampledMat::SampledMat(std::vector<Mat> samples, double a, double b)
    : samples_(std::move(samples)), a_(a), b_(b) {
  if (samples_.empty()) throw ContractViolation("empty sample family");
}

Mat SampledMat::at(double t) const { return interp(samples_, a_, b_, t); }

FlowTable flow_table(const std::function<Mat(double)>& A, const Mat& Y0, double a, double b, int steps) {
  if (steps < 1) throw ContractViolation("flow needs at least one step");
  FlowTable out;
  out.nodes.reserve(steps + 1);
  out.halves.reserve(steps);
  const double h = (b - a) / steps;
  auto rhs = [&](double t, const Mat& y) { return Mat(A(t) * y); };
  Mat y = Y0;
  out.nodes.push_back(y);
  for (int i = 0; i < steps; ++i) {
    double t = a + i * h;
    y = rk4_step(rhs, t, h / 2, y);
    out.halves.push_back(y);
    y = rk4_step(rhs, t + h / 2, h / 2, y);
    out.nodes.push_back(y);
  }
  return out;
}

Mat flow_endpoint(const std::function<Mat(double)>& A, const Mat& Y0, double a, double b, int steps) {
  if (steps < 1) throw ContractViolation("flow needs at least one step");
  const double h = (b - a) / steps;
  auto rhs = [&](double t, const Mat& y) { return Mat(A(t) * y); };
  Mat y = Y0;
  for (int i = 0; i < steps; ++i) y = rk4_step(rhs, a + i * h, h, y);
  return y;
}

FlowPairTable flow_pair_table(const std::function<Mat(double)>& A, int n, double h, int steps) {
  FlowPairTable out;
  out.F.reserve(steps + 1);
  out.G.reserve(steps + 1);
  out.Fh.reserve(steps);
  out.Gh.reserve(steps);
  Mat F = Mat::Identity(n, n), G = Mat::Identity(n, n);
  out.F.push_back(F);
  out.G.push_back(G);
  auto frhs = [&](double t, const Mat& y) { return Mat(A(t) * y); };
  auto grhs = [&](double t, const Mat& y) { return Mat(-y * A(t)); };
  for (int i = 0; i < steps; ++i) {
    double t = i * h;
    F = rk4_step(frhs, t, h / 2, F);
    G = rk4_step(grhs, t, h / 2, G);
    out.Fh.push_back(F);
    out.Gh.push_back(G);
    F = rk4_step(frhs, t + h / 2, h / 2, F);
    G = rk4_step(grhs, t + h / 2, h / 2, G);
    out.F.push_back(F);
    out.G.push_back(G);
  }
  return out;
}

Mat derivation_flow(const LieAlgebra& L, const std::vector<Mat>& D_samples, double t0, double t1,
                    int steps, double contract_tol) {
  if (D_samples.empty()) throw ContractViolation("derivation flow needs samples");
  for (const Mat& d : D_samples)
    if (derivation_residual(L, d) > contract_tol)
      throw ContractViolation("flow sample is not a derivation");
  SampledMat D(D_samples, std::min(t0, t1), std::max(t0, t1));
  return flow_endpoint([&](double t) { return D.at(t); }, Mat::Identity(L.dim(), L.dim()), t0, t1, steps);
}

std::vector<Vec> differentiate_samples(const std::vector<Vec>& f, double h) {
  const int M = static_cast<int>(f.size()) - 1;
  std::vector<Vec> out(f.size());
  if (M < 1) throw ContractViolation("cannot differentiate fewer than two samples");
  if (M < 4) {
    for (int j = 0; j <= M; ++j) out[j] = central_difference(f, j, h);
    return out;
  }
  const double s = 1.0 / (12.0 * h);
  out[0] = s * (-25 * f[0] + 48 * f[1] - 36 * f[2] + 16 * f[3] - 3 * f[4]);
  out[1] = s * (-3 * f[0] - 10 * f[1] + 18 * f[2] - 6 * f[3] + f[4]);
  for (int j = 2; j <= M - 2; ++j)
    out[j] = s * (f[j - 2] - 8 * f[j - 1] + 8 * f[j + 1] - f[j + 2]);
  out[M - 1] = -s * (-3 * f[M] - 10 * f[M - 1] + 18 * f[M - 2] - 6 * f[M - 3] + f[M - 4]);
  out[M] = -s * (-25 * f[M] + 48 * f[M - 1] - 36 * f[M - 2] + 16 * f[M - 3] - 3 * f[M - 4]);
  return out;
}

Vec central_difference(const std::vector<Vec>& f, int j, double h) {
  const int M = static_cast<int>(f.size()) - 1;
  if (M == 1) return (f[1] - f[0]) / h;
  if (j == 0) return (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
  if (j == M) return (3 * f[M] - 4 * f[M - 1] + f[M - 2]) / (2 * h);
  return (f[j + 1] - f[j - 1]) / (2 * h);
}

Vec simpson(const std::vector<Vec>& nodes, const std::vector<Vec>& halves, double h) {
  Vec acc = Vec::Zero(nodes[0].size());
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    acc += (h / 6.0) * (nodes[i] + 4 * halves[i] + nodes[i + 1]);
  return acc;
}

} // namespace liext
