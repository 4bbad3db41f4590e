#include "doctest.h"
#include "su2holo/hamiltonian.hpp"
#include "su2holo/spectrum.hpp"

#include <algorithm>
#include <random>

using namespace su2holo;

TEST_CASE("aux quantities at reference points") {
  SUBCASE("B = 0 limit") {
    const AuxQuantities q = aux_quantities(0.0, 1.0);
    CHECK(q.a == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(q.a_prime == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(q.k == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(q.l == doctest::Approx(8.0).epsilon(1e-14));
  }
  SUBCASE("L vanishes at B = 2g") {
    CHECK(aux_quantities(2.0, 1.0).l == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("quarter-period root") {
    const AuxQuantities q = aux_quantities(1.9587, 1.0);
    CHECK(std::abs(q.a - 0.25) < 1e-3);
    CHECK(std::abs(std::cos(2.0 * q.a * M_PI)) < 1e-3);
  }
}

TEST_CASE("axis normalization identity (2gB^3)^2 + L^2 = K^2") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ub(0.05, 4.0), ug(0.5, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double b = ub(rng), g = ug(rng);
    const AuxQuantities q = aux_quantities(b, g);
    const double lhs = std::pow(2.0 * g * b * b * b, 2) + q.l * q.l;
    CHECK(std::abs(lhs - q.k * q.k) <= 1e-12 * q.k * q.k);
    CHECK(q.a_prime > 0.0);
    CHECK(q.k > 0.0);
  }
}

TEST_CASE("closed-form eigenvalues contain the degenerate pairs") {
  const SystemParams p{1.0, 0.5, 1.7, 0.3};
  const auto s = closed_form_eigenvalues(p);
  CHECK(std::count_if(s.sorted.begin(), s.sorted.end(),
                      [](double e) { return std::abs(e) < 1e-14; }) == 2);
  CHECK(std::count_if(s.sorted.begin(), s.sorted.end(), [&](double e) {
          return std::abs(e + p.j) < 1e-14;
        }) == 2);
}

TEST_CASE("closed-form eigenvalues at J = 0 limit of the formula") {
  // construction-only check of the nondegenerate branch at J -> 0, B = 0
  SystemParams p{1.0, 1e-300, 0.0, 0.0};
  const auto s = closed_form_eigenvalues(p);
  int plus = 0, minus = 0;
  for (double e : s.nondegenerate) {
    if (std::abs(e - std::sqrt(2.0)) < 1e-12) ++plus;
    if (std::abs(e + std::sqrt(2.0)) < 1e-12) ++minus;
  }
  CHECK(plus == 2);
  CHECK(minus == 2);
}

TEST_CASE("closed vs numeric eigenvalues at a generic point") {
  const SystemParams p{1.0, 0.3, 1.2, 0.4};
  const auto closed = closed_form_eigenvalues(p);
  const auto frame = numeric_eigendecomposition(build_hamiltonian(p));
  for (int i = 0; i < 8; ++i)
    CHECK(std::abs(frame.energies(i) - closed.sorted[i]) < 1e-10);
}

TEST_CASE("degenerate states are orthonormal eigenvectors") {
  const double g = 1.0;
  const DegenerateStates st = closed_form_degenerate_states(1.0, 0.3, g);
  CHECK(std::abs(st.chi1.norm() - 1.0) < 1e-12);
  CHECK(std::abs(st.chi2.norm() - 1.0) < 1e-12);
  CHECK(std::abs(st.chi1.dot(st.chi2)) < 1e-12);
  CHECK(std::abs(st.chi3.dot(st.chi4)) < 1e-12);

  const SystemParams p{g, 0.7, 1.5, 1.1};
  const Matrix8 h = build_hamiltonian(p);
  const DegenerateStates s2 = closed_form_degenerate_states(p.b, p.phi, g);
  CHECK((h * s2.chi1).norm() < 1e-10);
  CHECK((h * s2.chi2).norm() < 1e-10);
  CHECK((h * s2.chi3 + p.j * s2.chi3).norm() < 1e-10);
  CHECK((h * s2.chi4 + p.j * s2.chi4).norm() < 1e-10);
}

TEST_CASE("chi3 is parameter independent") {
  const DegenerateStates a = closed_form_degenerate_states(0.3, 0.1, 0.8);
  const DegenerateStates b = closed_form_degenerate_states(3.1, 2.9, 1.7);
  CHECK((a.chi3 - b.chi3).norm() < 1e-15);
}

TEST_CASE("B = 0 input returns the well-defined limit states") {
  const DegenerateStates st = closed_form_degenerate_states(0.0, 0.7, 1.0);
  CHECK(std::abs(std::abs(st.chi1(basis_index(0, 0, 0))) - 1.0) < 1e-14);
  CHECK(std::abs(std::abs(st.chi2(basis_index(1, 1, 1))) - 1.0) < 1e-14);
}

TEST_CASE("degeneracy grouping") {
  SUBCASE("zero matrix is one group of eight") {
    const auto frame = numeric_eigendecomposition(Matrix8::Zero());
    REQUIRE(frame.groups.size() == 1);
    CHECK(frame.groups[0].size() == 8);
  }
  SUBCASE("generic point has sizes {2,2,1,1,1,1}") {
    const SystemParams p{1.0, 0.3, 1.0, 0.0};
    const auto frame = numeric_eigendecomposition(build_hamiltonian(p));
    std::vector<std::size_t> sizes;
    for (const auto& grp : frame.groups) sizes.push_back(grp.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 1, 2, 2});
  }
}

TEST_CASE("numeric zero-group projector matches the closed-form states") {
  const SystemParams p{1.0, 0.5, 1.3, 0.8};
  const auto frame = numeric_eigendecomposition(build_hamiltonian(p));
  int zero_group = -1;
  for (std::size_t gi = 0; gi < frame.groups.size(); ++gi)
    if (std::abs(frame.energies(frame.groups[gi].front())) < 1e-9)
      zero_group = static_cast<int>(gi);
  REQUIRE(zero_group >= 0);

  const DegenerateStates st = closed_form_degenerate_states(p.b, p.phi, p.g);
  const Matrix8 proj_closed =
      st.chi1 * st.chi1.adjoint() + st.chi2 * st.chi2.adjoint();
  const Matrix8 proj_num = frame.group_projector(zero_group);
  CHECK((proj_closed - proj_num).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("projector is gauge covariant") {
  const DegenerateStates st = closed_form_degenerate_states(1.1, 0.4, 1.0);
  const Complex phase = std::exp(kI * 0.37);
  const Matrix8 p0 = st.chi1 * st.chi1.adjoint() + st.chi2 * st.chi2.adjoint();
  const Vector8 chi1g = phase * st.chi1;
  const Matrix8 p1 = chi1g * chi1g.adjoint() + st.chi2 * st.chi2.adjoint();
  CHECK((p0 - p1).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("random-point sweep: closed forms against the dense solver") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ug(0.5, 2.0), uj(0.1, 1.0),
      ub(0.1, 4.0), uphi(0.0, 2.0 * M_PI);
  int done = 0;
  while (done < 25) {
    SystemParams p{ug(rng), uj(rng), ub(rng), uphi(rng)};
    if (p.at_forbidden_field(1e-3)) continue;
    ++done;
    const auto closed = closed_form_eigenvalues(p);
    const Matrix8 h = build_hamiltonian(p);
    const auto frame = numeric_eigendecomposition(h);
    for (int i = 0; i < 8; ++i)
      CHECK(std::abs(frame.energies(i) - closed.sorted[i]) < 1e-10);
    const DegenerateStates st = closed_form_degenerate_states(p.b, p.phi, p.g);
    CHECK((h * st.chi1).norm() < 1e-9);
    CHECK((h * st.chi2).norm() < 1e-9);
  }
}

TEST_CASE("level gap") {
  const SystemParams p{1.0, 0.5, 1.0, 0.0};
  CHECK(level_gap(p) == doctest::Approx(0.5).epsilon(1e-12));

  SystemParams pj = p;
  pj.j = 1e-6;
  CHECK(level_gap(pj) < 1e-5);

  SystemParams pphi = p;
  pphi.phi = 1.9;
  CHECK(level_gap(pphi) == doctest::Approx(level_gap(p)).epsilon(1e-14));
}
