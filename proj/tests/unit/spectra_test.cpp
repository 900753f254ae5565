#include <gtest/gtest.h>

#include "lindep/charpoly.hpp"
#include "lindep/errors.hpp"
#include "lindep/root_finder.hpp"
#include "lindep/spectra.hpp"
#include "oracles.hpp"

using namespace lindep;
using spectra::MatrixKind;
using spectra::Real;

namespace {

ExactPoly P(std::vector<long long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return ExactPoly(b);
}

bool close(const Real& a, const Real& b, double tol = 1e-30) {
  return abs(a - b) <= tol * (1 + abs(b));
}

}  // namespace

TEST(Predicted, AdjacencyExamples) {
  EXPECT_EQ(spectra::predicted_adjacency_poly(2, 2), P({0, 0, -3, 0, 1}));
  EXPECT_EQ(spectra::predicted_adjacency_poly(2, 1), P({-1, 0, 1}));
  EXPECT_EQ(spectra::predicted_adjacency_poly(3, 1), P({-2, -3, 0, 1}));
}

TEST(Predicted, LaplacianExamples) {
  EXPECT_EQ(spectra::predicted_laplacian_poly(2, 2), P({0, -4, 9, -6, 1}));
  EXPECT_EQ(spectra::predicted_laplacian_poly(2, 1), P({0, -2, 1}));
  EXPECT_EQ(spectra::predicted_laplacian_poly(3, 1), P({0, 9, -6, 1}));
}

TEST(Predicted, DistanceExamples) {
  EXPECT_EQ(spectra::predicted_distance_poly(2, 1), P({-1, 0, 1}));
  EXPECT_EQ(spectra::predicted_distance_poly(2, 2), P({-3, -4, 1}) * P({2, 1}).pow(2));
  EXPECT_EQ(spectra::predicted_distance_poly(3, 1), P({-2, -3, 0, 1}));
}

TEST(Predicted, TraceCoefficients) {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 3}, {3, 2}, {4, 2}, {5, 3}, {7, 2}, {8, 1}}) {
    const auto a = spectra::predicted_adjacency_poly(q, n);
    const auto d = spectra::predicted_distance_poly(q, n);
    const auto l = spectra::predicted_laplacian_poly(q, n);
    const int deg = a.degree();
    EXPECT_EQ(a.coeff(deg - 1), 0);
    EXPECT_EQ(d.coeff(deg - 1), 0);
    const BigInt qn = boost::multiprecision::pow(BigInt(q), n);
    EXPECT_EQ(l.coeff(deg - 1), -BigInt(q) * (qn - 1));
    EXPECT_EQ(a.degree(), qn);
  }
}

TEST(SpectrumDescription, FactoredForms) {
  const auto a = spectra::spectrum_from_factored_form(2, 2, MatrixKind::adjacency);
  ASSERT_TRUE(a.surd_pair);
  EXPECT_EQ(a.surd_pair->b, 0);
  EXPECT_EQ(a.surd_pair->c, 3);
  ASSERT_EQ(a.integer_roots.size(), 1u);
  EXPECT_EQ(a.integer_roots[0].value, 0);
  EXPECT_EQ(a.integer_roots[0].multiplicity, 2u);

  const auto l = spectra::spectrum_from_factored_form(2, 2, MatrixKind::laplacian);
  EXPECT_FALSE(l.surd_pair);
  EXPECT_EQ(l.integer_roots,
            (std::vector<spectra::IntegerRoot>{{0, 1}, {1, 2}, {4, 1}}));

  const auto d = spectra::spectrum_from_factored_form(3, 1, MatrixKind::distance);
  ASSERT_TRUE(d.surd_pair);
  EXPECT_EQ(d.surd_pair->b, 1);
  EXPECT_EQ(d.surd_pair->c, 2);
  EXPECT_EQ(d.integer_roots, (std::vector<spectra::IntegerRoot>{{-1, 1}}));

  for (auto kind : {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::distance}) {
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 1}, {2, 4}, {3, 3}, {4, 2}, {9, 1}}) {
      const auto s = spectra::spectrum_from_factored_form(q, n, kind);
      EXPECT_EQ(s.to_poly(), spectra::predicted_poly(q, n, kind));
      EXPECT_EQ(s.degree(), static_cast<std::uint64_t>(s.to_poly().degree()));
    }
  }
}

TEST(Energies, Examples) {
  using spectra::spectrum_from_factored_form;
  EXPECT_TRUE(close(spectra::adjacency_energy(spectrum_from_factored_form(2, 1, MatrixKind::adjacency)), 2));
  EXPECT_TRUE(close(spectra::adjacency_energy(spectrum_from_factored_form(2, 2, MatrixKind::adjacency)),
                    2 * sqrt(Real(3))));
  EXPECT_TRUE(close(spectra::adjacency_energy(spectrum_from_factored_form(3, 1, MatrixKind::adjacency)), 4));
  EXPECT_TRUE(close(spectra::distance_energy(spectrum_from_factored_form(2, 1, MatrixKind::distance)), 2));
  EXPECT_TRUE(close(spectra::distance_energy(spectrum_from_factored_form(2, 2, MatrixKind::distance)),
                    4 + 2 * sqrt(Real(7))));
  EXPECT_TRUE(close(spectra::distance_energy(spectrum_from_factored_form(3, 1, MatrixKind::distance)), 4));
}

TEST(Energies, Laplacian) {
  using spectra::spectrum_from_factored_form;
  EXPECT_EQ(spectra::laplacian_energy(spectrum_from_factored_form(2, 1, MatrixKind::laplacian), 1, 2), 2);
  EXPECT_EQ(spectra::laplacian_energy(spectrum_from_factored_form(2, 2, MatrixKind::laplacian), 3, 4), 5);
  EXPECT_EQ(spectra::laplacian_energy(spectrum_from_factored_form(3, 1, MatrixKind::laplacian), 3, 3), 4);
  EXPECT_THROW(spectra::laplacian_energy(spectrum_from_factored_form(2, 2, MatrixKind::adjacency), 3, 4),
               std::exception);
}

TEST(AlgebraicConnectivity, Examples) {
  using spectra::spectrum_from_factored_form;
  EXPECT_EQ(spectra::algebraic_connectivity(spectrum_from_factored_form(2, 2, MatrixKind::laplacian)), 1);
  EXPECT_EQ(spectra::algebraic_connectivity(spectrum_from_factored_form(2, 1, MatrixKind::laplacian)), 2);
  EXPECT_EQ(spectra::algebraic_connectivity(spectrum_from_factored_form(3, 1, MatrixKind::laplacian)), 3);
}

TEST(SpanningTrees, KirchhoffMatchesEnumeration) {
  for (auto [p, k, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 1}, {2, 1, 2}, {3, 1, 1}, {3, 1, 2}, {2, 2, 1}, {5, 1, 1}}) {
    const auto g = graph::build_graph(gf::FieldSpec::make(p, k), n);
    const auto l = graph::laplacian_matrix(g);
    const auto tau = spectra::spanning_trees_kirchhoff(l);
    EXPECT_EQ(tau, oracle::spanning_trees_by_enumeration(g.adjacency));
    for (std::size_t r = 0; r < g.num_vertices(); ++r)
      EXPECT_EQ(spectra::spanning_trees_kirchhoff(l, r), tau);
  }
  const auto g = graph::build_graph(gf::FieldSpec::make(3, 1), 2);
  EXPECT_EQ(spectra::spanning_trees_kirchhoff(graph::laplacian_matrix(g)), 81);
}

TEST(RootFinder, RecoversRootsWithMultiplicity) {
  // (x-2)(x+1)^2 (x^2-3)
  const auto f = P({-2, 1}) * P({1, 1}).pow(2) * P({-3, 0, 1});
  const auto roots = spectra::real_roots(f);
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_TRUE(close(roots[0].value, -sqrt(Real(3))));
  EXPECT_TRUE(close(roots[1].value, -1));
  EXPECT_EQ(roots[1].multiplicity, 2u);
  EXPECT_TRUE(close(roots[2].value, sqrt(Real(3))));
  EXPECT_TRUE(close(roots[3].value, 2));
  EXPECT_THROW(spectra::real_roots(P({1, 0, 1})), std::domain_error);
}

TEST(RootFinder, EnergiesAgreeWithFactoredForm) {
  for (auto [p, k, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
    const auto spec = gf::FieldSpec::make(p, k);
    const auto g = graph::build_graph(spec, n);
    const auto ra = spectra::real_roots(spectra::charpoly_exact(graph::adjacency_matrix(g)));
    const auto rd = spectra::real_roots(spectra::charpoly_exact(graph::distance_matrix(g)));
    EXPECT_TRUE(close(spectra::absolute_deviation_sum(ra),
                      spectra::adjacency_energy(spectra::spectrum_from_factored_form(spec.q, n, MatrixKind::adjacency)),
                      1e-25));
    EXPECT_TRUE(close(spectra::absolute_deviation_sum(rd),
                      spectra::distance_energy(spectra::spectrum_from_factored_form(spec.q, n, MatrixKind::distance)),
                      1e-25));
  }
}

TEST(Format, Decimal) {
  EXPECT_EQ(spectra::to_decimal_string(BigRational(5)), "5");
  EXPECT_EQ(spectra::to_decimal_string(Real(2) * sqrt(Real(3)), 10).substr(0, 8), "3.464101");
  EXPECT_EQ(spectra::matrix_kind_from_string("laplacian"), MatrixKind::laplacian);
  EXPECT_THROW(spectra::matrix_kind_from_string("bogus"), std::invalid_argument);
}

TEST(Format, Json) {
  const auto s = spectra::spectrum_from_factored_form(2, 2, MatrixKind::adjacency);
  const auto j = spectra::to_json(s);
  EXPECT_NE(j.find("surd"), std::string::npos);
}
