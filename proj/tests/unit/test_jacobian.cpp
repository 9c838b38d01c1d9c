#include <doctest.h>

#include "burge/correspondences.hpp"
#include "burge/jacobian.hpp"
#include "burge/random.hpp"

using namespace burge;

using DA = ShapedArray<double>;

TEST_CASE("identity map") {
  const DA w({{1.0, 2.0}, {3.0, 4.0}});
  const auto j = loglog_jacobian(JacobianMap::identity, w);
  CHECK((j - Eigen::MatrixXd::Identity(4, 4)).norm() == doctest::Approx(0.0));
}

TEST_CASE("unimodular on all-ones arrays") {
  CHECK(abs_det(loglog_jacobian(JacobianMap::gburge, DA(Shape::rectangle(2, 2), 1.0))) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(abs_det(loglog_jacobian(JacobianMap::gburge_up, DA(Shape::rectangle(3, 3), 1.0))) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(loglog_jacobian(JacobianMap::gburge_up, DA(Shape::rectangle(3, 3), 1.0)).rows() == 6);
}

TEST_CASE("dual numbers agree with central differences") {
  CounterRng rng(2, 0);
  for (JacobianMap m : {JacobianMap::grsk, JacobianMap::gburge, JacobianMap::gschutz}) {
    const auto w = random_loguniform_array(Shape::rectangle(3, 3), rng);
    const auto jd = loglog_jacobian(m, w, DiffMode::forward_dual);
    const auto jf = loglog_jacobian(m, w, DiffMode::central_difference, 1e-5);
    CHECK((jd - jf).cwiseAbs().maxCoeff() < 10 * 1e-10 + 1e-10);
    CHECK(abs_det(jd) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("log-log derivative of a known entry") {
  // grsk on 1 x 2: t = (w11, w11 w12), so d log t12 / d log w11 = 1.
  const DA w(std::vector<std::vector<double>>{{2.0, 5.0}});
  const auto j = loglog_jacobian(JacobianMap::grsk, w);
  CHECK(j(1, 0) == doctest::Approx(1.0));
  CHECK(j(1, 1) == doctest::Approx(1.0));
  CHECK(j(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("abs_det") {
  Eigen::MatrixXd d(2, 2);
  d << 2, 0, 0, 0.5;
  CHECK(abs_det(d) == doctest::Approx(1.0));
  CHECK(abs_det(Eigen::MatrixXd::Identity(4, 4)) == doctest::Approx(1.0));
  d << 0, 1, 1, 0;
  CHECK(abs_det(d) == doctest::Approx(1.0));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(parse_jacobian_map("rsk-9"), Error);
  CHECK(parse_jacobian_map("gburge") == JacobianMap::gburge);
  DA bad(Shape::rectangle(1, 2), 1.0);
  bad.at(1, 2) = -1.0;
  CHECK_THROWS_AS(loglog_jacobian(JacobianMap::grsk, bad), Error);
}
