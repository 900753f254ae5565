#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "lindep/closedform.hpp"
#include "lindep/errors.hpp"

using namespace lindep;
using closedform::predict_all;

TEST(PrimePower, Decomposition) {
  EXPECT_EQ(closedform::prime_power_decomposition(8), (std::pair<std::uint64_t, std::uint32_t>{2, 3}));
  EXPECT_EQ(closedform::prime_power_decomposition(9), (std::pair<std::uint64_t, std::uint32_t>{3, 2}));
  EXPECT_EQ(closedform::prime_power_decomposition(11), (std::pair<std::uint64_t, std::uint32_t>{11, 1}));
  EXPECT_THROW(closedform::prime_power_decomposition(6), InvalidFieldError);
  EXPECT_THROW(closedform::prime_power_decomposition(1), InvalidFieldError);
  EXPECT_THROW(predict_all(12, 2), InvalidFieldError);
  EXPECT_THROW(predict_all(3, 0), std::invalid_argument);
}

TEST(Predict, FriendshipGraph) {
  const auto p = predict_all(3, 2);
  EXPECT_EQ(p.N, 4);
  EXPECT_EQ(p.size, 12);
  EXPECT_FALSE(p.complete);
  EXPECT_EQ(p.diameter, 2u);
  EXPECT_EQ(p.independence, 4);
  EXPECT_EQ(p.clique, 3u);
  EXPECT_TRUE(p.eulerian);
  EXPECT_EQ(p.edge_connectivity, 2u);
  EXPECT_EQ(p.vertex_connectivity, 1u);
  EXPECT_TRUE(p.planar);
  EXPECT_EQ(p.spanning_trees, 81);
  EXPECT_EQ(p.algebraic_connectivity, 1);
  EXPECT_EQ(p.energy_paper, 8);
  EXPECT_EQ(p.distance_energy_paper, 26);
}

TEST(Predict, LineSpecialisation) {
  const auto k4 = predict_all(4, 1);
  EXPECT_TRUE(k4.complete);
  EXPECT_EQ(k4.diameter, 1u);
  EXPECT_EQ(k4.vertex_connectivity, 3u);
  EXPECT_EQ(k4.algebraic_connectivity, 4);
  EXPECT_EQ(k4.spanning_trees, 16);
  EXPECT_TRUE(k4.planar);
  EXPECT_FALSE(predict_all(5, 1).planar);
}

TEST(Predict, Energies) {
  const auto s = predict_all(2, 2);
  EXPECT_EQ(s.energy_paper, 0);
  EXPECT_EQ(s.distance_energy_paper, 8);
  EXPECT_EQ(s.laplacian_energy_paper, 5);
  EXPECT_LT(abs(s.energy_derived - 2 * sqrt(closedform::Real(3))), 1e-40);
  EXPECT_LT(abs(s.distance_energy_derived - 4 - 2 * sqrt(closedform::Real(7))), 1e-40);
  // Laplacian energy of K_2 and K_3.
  EXPECT_EQ(predict_all(2, 1).laplacian_energy_paper, 2);
  EXPECT_EQ(predict_all(3, 1).laplacian_energy_paper, 4);
}

TEST(Predict, NIdentity) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const auto p = predict_all(q, n);
      EXPECT_EQ(p.N * (q - 1) + 1, boost::multiprecision::pow(BigInt(q), n));
    }
  }
  // Large exponent stays exact.
  EXPECT_EQ(predict_all(2, 40).spanning_trees, 1);
  EXPECT_EQ(predict_all(3, 5).spanning_trees, boost::multiprecision::pow(BigInt(3), 121));
}

TEST(Predict, Json) {
  const auto j = nlohmann::json::parse(closedform::to_json(predict_all(3, 2)));
  EXPECT_EQ(j["spanning_trees"], "81");
  EXPECT_EQ(j["laplacian_energy_paper"].get<std::string>().substr(0, 10), "15.3333333");
  EXPECT_EQ(j["planar"], true);
}
