#include "testutil.hpp"

#include <doctest.h>

using namespace liext;
namespace tu = liext::testutil;

namespace {

// brute-force cyclic Jacobi sums, written directly against the definition
double exhaustive_jacobi_defect(const LieAlgebra& L) {
  const int n = L.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Rat acc(0);
          for (int l = 0; l < n; ++l)
            acc += L.c_rat(i, j, l) * L.c_rat(l, k, m) + L.c_rat(j, k, l) * L.c_rat(l, i, m) +
                   L.c_rat(k, i, l) * L.c_rat(l, j, m);
          worst = std::max(worst, std::abs(acc.convert_to<double>()));
        }
  return worst;
}

std::vector<Rat> basis_vec(int n, int i) {
  std::vector<Rat> v(n, Rat(0));
  v[i] = 1;
  return v;
}

} // namespace

TEST_SUITE("liealg") {

TEST_CASE("jacobi: abelian plane is accepted") {
  CHECK(check_jacobi(abelian(2)).ok);
}

TEST_CASE("jacobi: so(3) passes the exhaustive oracle") {
  LieAlgebra L = so3();
  CHECK(exhaustive_jacobi_defect(L) == 0.0);
  auto rep = check_jacobi(L);
  CHECK(rep.ok);
  CHECK(rep.max_residual == 0.0);
}

TEST_CASE("jacobi: tampered so(3) is rejected at the right entry") {
  // raw tensor with c[0][1][2] = 2 but c[1][0][2] = -1: scaling one entry of
  // the antisymmetric pair breaks the structure at (0,1,2)
  LieAlgebra good = so3();
  std::vector<Scalar> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c.push_back(good.c(i, j, k));
  c[(0 * 3 + 1) * 3 + 2] = Scalar(2);
  LieAlgebra L(3, {"e1", "e2", "e3"}, c);

  // the exhaustive oracle: antisymmetry defect max |c_ijk + c_jik|
  double anti = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        anti = std::max(anti, std::abs((L.c_rat(i, j, k) + L.c_rat(j, i, k)).convert_to<double>()));
  CHECK(anti == 1.0);

  auto rep = check_jacobi(L);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());
  bool found = false;
  for (const auto& v : rep.violations) found = found || (v.i == 0 && v.j == 1 && v.k == 2);
  CHECK(found);
}

TEST_CASE("jacobi: a genuinely non-Jacobi four-dimensional table is rejected") {
  // [e1,e2] = e4 and [e3,e4] = e1: the cyclic sum on (e1,e2,e3) collapses to
  // [[e1,e2],e3] = [e4,e3] = -e1, a nonzero defect
  LieAlgebra L = LieAlgebra::from_brackets(
      4, {}, {{0, 1, 3, Scalar(1)}, {2, 3, 0, Scalar(1)}});
  CHECK(exhaustive_jacobi_defect(L) > 0.0);
  auto rep = check_jacobi(L);
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (const auto& v : rep.violations) found = found || (v.i == 0 && v.j == 1 && v.k == 2);
  CHECK(found);
}

TEST_CASE("bracket: structure constant contraction and antisymmetry") {
  LieAlgebra L = so3();
  auto r = L.bracket(basis_vec(3, 0), basis_vec(3, 1));
  CHECK(r == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
  CHECK(L.bracket(basis_vec(3, 1), basis_vec(3, 1)) == std::vector<Rat>(3, Rat(0)));
  LieAlgebra A = abelian(2);
  CHECK(A.bracket(basis_vec(2, 0), basis_vec(2, 1)) == std::vector<Rat>(2, Rat(0)));

  tu::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> x(3);
    for (auto& c : x) c = rng.small_rat();
    CHECK(L.bracket(x, x) == std::vector<Rat>(3, Rat(0)));
  }
}

TEST_CASE("ce differential: abelian vanishes, so(3) degree one, top degree") {
  LieAlgebra A = abelian(2);
  for (int k = 0; k < 2; ++k) CHECK(rank(ce_differential(A, std::nullopt, k)) == 0);

  LieAlgebra L = so3();
  RatMat d1 = ce_differential(L, std::nullopt, 1);
  // (d e^1)(e2, e3) = -e^1([e2, e3]) = -1; row rank of {1,2} is 2
  CHECK(d1(2, 0) == Rat(-1));
  CHECK(ce_differential(L, std::nullopt, 3).rows() == 0);
}

TEST_CASE("ce differential: d composed with d vanishes, trivial and adjoint coefficients") {
  for (const LieAlgebra& L : {so3(), heisenberg3(), sl2(), aff1(), direct_sum(so3(), abelian(2))}) {
    for (int k = 0; k + 1 < L.dim(); ++k) {
      RatMat dd = ce_differential(L, std::nullopt, k + 1) * ce_differential(L, std::nullopt, k);
      CHECK(dd.is_zero());
    }
    Representation ar = adjoint_rep(L);
    REQUIRE(is_representation(L, ar));
    for (int k = 0; k + 1 < L.dim(); ++k) {
      RatMat dd = ce_differential(L, ar, k + 1) * ce_differential(L, ar, k);
      CHECK(dd.is_zero());
    }
  }
}

TEST_CASE("ce differential: non-representation coefficients are rejected") {
  LieAlgebra L = so3();
  Representation bad;
  bad.dim = 3;
  bad.rho.assign(3, RatMat::identity(3));
  CHECK_THROWS_AS(ce_differential(L, bad, 1), ContractViolation);
}

TEST_CASE("cohomology dims: frozen oracles and the independent rank route") {
  CHECK(cohomology_dims(abelian(2)) == std::vector<int>{1, 2, 1});
  CHECK(cohomology_dims(so3()) == std::vector<int>{1, 0, 0, 1});
  CHECK(cohomology_dims(heisenberg3()) == std::vector<int>{1, 2, 2, 1});
  for (const LieAlgebra& L : {abelian(2), so3(), heisenberg3(), sl2(), aff1()})
    CHECK(cohomology_dims(L) == tu::betti_reference(L));
}

TEST_CASE("cohomology dims: Euler characteristic vanishes") {
  for (const LieAlgebra& L : {abelian(3), so3(), heisenberg3(), sl2(), direct_sum(sl2(), so3())}) {
    auto b = cohomology_dims(L);
    int chi = 0;
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? b[k] : -b[k]);
    CHECK(chi == 0);
  }
}

TEST_CASE("derivations: zero, inner, identity") {
  LieAlgebra L = so3();
  CHECK(is_derivation(L, RatMat(3, 3)));
  CHECK(is_derivation(L, ad(L, basis_vec(3, 2))));
  CHECK_FALSE(is_derivation(L, RatMat::identity(3)));
}

TEST_CASE("ad: abelian kills everything, so(3) rotation block, morphism property") {
  LieAlgebra A = abelian(2);
  CHECK(ad(A, basis_vec(2, 0)).is_zero());

  LieAlgebra L = so3();
  RatMat ad3 = ad(L, basis_vec(3, 2));
  // [e3, e1] = e2 and [e3, e2] = -e1
  CHECK(ad3(1, 0) == Rat(1));
  CHECK(ad3(0, 1) == Rat(-1));
  CHECK(ad3(2, 2) == Rat(0));

  tu::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> x(3), y(3);
    for (auto& c : x) c = rng.small_rat();
    for (auto& c : y) c = rng.small_rat();
    RatMat lhs = ad(L, L.bracket(x, y));
    RatMat axy = ad(L, x) * ad(L, y);
    RatMat ayx = ad(L, y) * ad(L, x);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(lhs(i, j) == axy(i, j) - ayx(i, j));
  }
}

TEST_CASE("center: abelian, so(3), heisenberg") {
  CHECK(center(abelian(2)).cols() == 2);
  CHECK(center(so3()).cols() == 0);
  RatMat z = center(heisenberg3());
  REQUIRE(z.cols() == 1);
  CHECK(z(0, 0) != 0);
  CHECK(z(1, 0) == 0);
  CHECK(z(2, 0) == 0);
}

TEST_CASE("derivation flow: identity, closed-form rotation, reversibility") {
  LieAlgebra L = so3();
  const int n = 3;

  Mat zero = Mat::Zero(n, n);
  Mat id_flow = derivation_flow(L, {zero, zero}, 0.0, 1.0, 64);
  CHECK((id_flow - Mat::Identity(n, n)).lpNorm<Eigen::Infinity>() == 0.0);

  Mat ad3 = ad_d(L, Vec::Unit(3, 2));
  double theta = 0.8;
  Mat flow = derivation_flow(L, {ad3, ad3, ad3}, 0.0, theta, 512);
  Mat expect = Mat::Identity(3, 3);
  expect(0, 0) = std::cos(theta);
  expect(1, 1) = std::cos(theta);
  expect(0, 1) = -std::sin(theta);
  expect(1, 0) = std::sin(theta);
  CHECK((flow - expect).lpNorm<Eigen::Infinity>() < 1e-12);

  // bracket preservation of the automorphism
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Vec lhs = flow * L.bracket(Vec(Vec::Unit(3, i)), Vec(Vec::Unit(3, j)));
      Vec rhs = L.bracket(Vec(flow.col(i)), Vec(flow.col(j)));
      CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() < 1e-12);
    }

  Mat there = derivation_flow(L, {ad3, ad3}, 0.0, 1.0, 256);
  Mat back = derivation_flow(L, {ad3, ad3}, 1.0, 0.0, 256);
  CHECK((back * there - Mat::Identity(3, 3)).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("derivation flow: non-derivation samples violate the contract") {
  LieAlgebra L = so3();
  CHECK_THROWS_AS(derivation_flow(L, {Mat::Identity(3, 3)}, 0.0, 1.0, 8), ContractViolation);
}

TEST_CASE("scalar: parsing, modes, zero tests") {
  Scalar a = Scalar::parse_rational("3/4");
  CHECK(a.value() == Rat(3) / 4);
  CHECK(a.is_exact());
  Scalar b = Scalar::approx(0.5);
  CHECK_FALSE((a * b).is_exact());
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar::approx(1e-12).is_zero(1e-10));
  CHECK_FALSE(Scalar::approx(1e-12).is_zero(1e-14));
  CHECK_THROWS_AS(Scalar::parse_rational("x/y"), std::invalid_argument);
}

TEST_CASE("algebra structural errors") {
  CHECK_THROWS_AS(LieAlgebra::from_brackets(2, {}, {{0, 0, 1, Scalar(1)}}), ContractViolation);
  CHECK_THROWS_AS(LieAlgebra::from_brackets(2, {}, {{0, 3, 1, Scalar(1)}}), ContractViolation);
  LieAlgebra L = so3();
  CHECK_THROWS_AS(L.bracket(std::vector<Rat>(2, Rat(0)), std::vector<Rat>(3, Rat(0))),
                  ContractViolation);
}

} // TEST_SUITE
