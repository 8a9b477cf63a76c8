#include "liext/cochain.hpp"

#include <Eigen/SVD>

namespace liext {

bool is_representation(const LieAlgebra& L, const Representation& rep) {
  const int n = L.dim();
  if (static_cast<int>(rep.rho.size()) != n) return false;
  for (const RatMat& r : rep.rho)
    if (r.rows() != rep.dim || r.cols() != rep.dim) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMat comm(rep.dim, rep.dim);
      RatMat ab = rep.rho[i] * rep.rho[j];
      RatMat ba = rep.rho[j] * rep.rho[i];
      for (int r = 0; r < rep.dim; ++r)
        for (int c = 0; c < rep.dim; ++c) comm(r, c) = ab(r, c) - ba(r, c);
      for (int r = 0; r < rep.dim; ++r)
        for (int c = 0; c < rep.dim; ++c) {
          Rat want(0);
          for (int k = 0; k < n; ++k) {
            Rat cijk = L.c_rat(i, j, k);
            if (cijk != 0) want += cijk * rep.rho[k](r, c);
          }
          if (comm(r, c) != want) return false;
        }
    }
  return true;
}

Representation adjoint_rep(const LieAlgebra& L) {
  Representation rep;
  rep.dim = L.dim();
  std::vector<Rat> x(L.dim(), Rat(0));
  for (int i = 0; i < L.dim(); ++i) {
    std::fill(x.begin(), x.end(), Rat(0));
    x[i] = 1;
    rep.rho.push_back(ad(L, x));
  }
  return rep;
}

Cochain::Cochain(int n, int degree, int coeff_dim)
    : n_(n), degree_(degree), m_(coeff_dim),
      coeffs_(static_cast<std::size_t>(binomial(n, degree)) * coeff_dim, Scalar(0)) {}

std::vector<Rat> Cochain::flat() const {
  std::vector<Rat> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i].value();
  return v;
}

Cochain Cochain::from_flat(int n, int degree, int coeff_dim, const std::vector<Rat>& v) {
  Cochain c(n, degree, coeff_dim);
  if (v.size() != static_cast<std::size_t>(c.size()))
    throw ContractViolation("cochain coefficient array has wrong length");
  for (std::size_t i = 0; i < v.size(); ++i) c.coeffs_[i] = Scalar(v[i]);
  return c;
}

RatMat ce_differential(const LieAlgebra& L, const std::optional<Representation>& rep, int k) {
  const int n = L.dim();
  if (k < 0 || k > n) throw ContractViolation("cochain degree out of range");
  const int m = rep ? rep->dim : 1;
  if (rep && !is_representation(L, *rep))
    throw ContractViolation("coefficients are not a representation");

  const auto rows_subsets = subsets(n, k + 1);
  const auto cols_count = binomial(n, k) * m;
  RatMat d(static_cast<int>(rows_subsets.size()) * m, static_cast<int>(cols_count));
  if (k == n) return d; // map into the zero space

  for (std::size_t tr = 0; tr < rows_subsets.size(); ++tr) {
    const IndexSubset& T = rows_subsets[tr];
    // action terms
    if (rep) {
      for (int i = 0; i <= k; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        IndexSubset S = erase_at(T, i);
        std::int64_t sr = subset_rank(n, S);
        const RatMat& r = rep->rho[T[i]];
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            if (r(a, b) != 0)
              d(static_cast<int>(tr) * m + a, static_cast<int>(sr) * m + b) += sign * r(a, b);
      }
    }
    // bracket terms
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        const int sij = ((i + j) % 2 == 0) ? 1 : -1;
        IndexSubset R = erase_at(erase_at(T, j), i);
        for (int l = 0; l < n; ++l) {
          Rat cl = L.c_rat(T[i], T[j], l);
          if (cl == 0) continue;
          auto ins = insert_with_sign(R, l);
          if (!ins) continue;
          std::int64_t sr = subset_rank(n, ins->second);
          Rat f = Rat(sij * ins->first) * cl;
          for (int a = 0; a < m; ++a)
            d(static_cast<int>(tr) * m + a, static_cast<int>(sr) * m + a) += f;
        }
      }
  }
  return d;
}

namespace {

int svd_rank(const RatMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Mat a(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).convert_to<double>();
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  double cut = 1e-10 * s(0);
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

} // namespace

std::vector<int> cohomology_dims(const LieAlgebra& L, const std::optional<Representation>& rep) {
  const int n = L.dim();
  const int m = rep ? rep->dim : 1;
  const bool exact = L.mode() == Mode::exact;
  std::vector<int> ranks(n + 1, 0); // rank of d_k for k = 0..n (d_n = 0)
  for (int k = 0; k < n; ++k) {
    RatMat d = ce_differential(L, rep, k);
    ranks[k] = exact ? rank(d) : svd_rank(d);
  }
  std::vector<int> betti(n + 1);
  for (int k = 0; k <= n; ++k) {
    int dim_k = static_cast<int>(binomial(n, k)) * m;
    int prev = (k == 0) ? 0 : ranks[k - 1];
    betti[k] = dim_k - ranks[k] - prev;
  }
  return betti;
}

RatMat exterior_power_action(const RatMat& D, int n, int l) {
  const auto basis = subsets(n, l);
  RatMat out(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const IndexSubset& S = basis[col];
    for (int pos = 0; pos < l; ++pos) {
      IndexSubset R = erase_at(S, pos);
      for (int mrow = 0; mrow < n; ++mrow) {
        Rat dm = D(mrow, S[pos]);
        if (dm == 0) continue;
        auto ins = insert_with_sign(R, mrow);
        if (!ins) continue;
        out(static_cast<int>(subset_rank(n, ins->second)), static_cast<int>(col)) +=
            Rat(ins->first) * dm;
      }
    }
  }
  return out;
}

RatMat exterior_power_coaction(const RatMat& D, int n, int l) {
  RatMat a = exterior_power_action(D, n, l).transposed();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
  return a;
}

} // namespace liext
