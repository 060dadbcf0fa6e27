#include <gtest/gtest.h>

#include <cmath>

#include "fete/mesh.hpp"

namespace {

TEST(UniformMesh, SingleElement) {
  const auto mesh = fete::uniform_mesh(1);
  EXPECT_EQ(mesh.nodes(), (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(mesh.scale(0), 2.0);
  EXPECT_EQ(mesh.shift(0), 1.0);
}

TEST(UniformMesh, TwoElements) {
  const auto mesh = fete::uniform_mesh(2);
  EXPECT_EQ(mesh.nodes(), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(mesh.scale(0), 4.0);
  EXPECT_EQ(mesh.scale(1), 4.0);
  EXPECT_EQ(mesh.shift(0), 1.0);
  EXPECT_EQ(mesh.shift(1), 3.0);
}

TEST(UniformMesh, EightElements) {
  const auto mesh = fete::uniform_mesh(8);
  EXPECT_EQ(mesh.nodes().size(), 9u);
  for (std::size_t e = 0; e < 8; ++e) {
    EXPECT_EQ(mesh.scale(e), 16.0);
    EXPECT_EQ(mesh.shift(e), 2.0 * e + 1.0);
  }
}

TEST(UniformMesh, RejectsZeroElements) {
  EXPECT_THROW(fete::uniform_mesh(0), std::invalid_argument);
}

TEST(UniformMesh, EndpointRoundTrip) {
  for (std::size_t count = 1; count <= 1024; ++count) {
    const auto mesh = fete::uniform_mesh(count);
    const auto& t = mesh.nodes();
    ASSERT_EQ(t.front(), 0.0);
    ASSERT_EQ(t.back(), 1.0);
    for (std::size_t e = 0; e < count; ++e) {
      ASSERT_GT(mesh.scale(e), 0.0);
      ASSERT_NEAR(mesh.to_local(e, t[e]), -1.0, 1e-15) << count << "/" << e;
      ASSERT_NEAR(mesh.to_local(e, t[e + 1]), 1.0, 1e-15) << count << "/" << e;
    }
  }
}

TEST(UniformMesh, WidthsSumToOne) {
  for (std::size_t count : {1u, 3u, 7u, 8u, 58u, 256u}) {
    const auto mesh = fete::uniform_mesh(count);
    double sum = 0.0;
    for (std::size_t e = 0; e < count; ++e) sum += mesh.width(e);
    EXPECT_NEAR(sum, 1.0, 1e-15 * count) << count;
  }
}

TEST(UniformMesh, LocalMapIsAffine) {
  const auto mesh = fete::uniform_mesh(5);
  for (std::size_t e = 0; e < 5; ++e) {
    const double mid = 0.5 * (mesh.nodes()[e] + mesh.nodes()[e + 1]);
    EXPECT_NEAR(mesh.to_local(e, mid), 0.0, 1e-14);
    EXPECT_NEAR(mesh.to_local(e, mid), mesh.scale(e) * mid - mesh.shift(e), 1e-13);
    EXPECT_NEAR(mesh.to_global(e, 0.3), (0.3 + mesh.shift(e)) / mesh.scale(e), 1e-16);
  }
}

TEST(TimeMesh, ExplicitNodes) {
  const fete::TimeMesh mesh({0.0, 0.25, 1.0});
  EXPECT_FALSE(mesh.is_uniform());
  EXPECT_EQ(mesh.num_elements(), 2u);
  EXPECT_DOUBLE_EQ(mesh.scale(1), 2.0 / 0.75);
  EXPECT_DOUBLE_EQ(mesh.shift(1), 1.25 / 0.75);
  EXPECT_EQ(mesh.to_local(1, 0.25), -1.0);
  EXPECT_EQ(mesh.to_local(1, 1.0), 1.0);
}

TEST(TimeMesh, InvalidNodes) {
  EXPECT_THROW(fete::TimeMesh({0.0}), std::invalid_argument);
  EXPECT_THROW(fete::TimeMesh({0.1, 1.0}), std::invalid_argument);
  EXPECT_THROW(fete::TimeMesh({0.0, 0.9}), std::invalid_argument);
  EXPECT_THROW(fete::TimeMesh({0.0, 0.5, 0.5, 1.0}), std::invalid_argument);
}

}  // namespace
