#ifndef MCK_SCALAR_HPP_
#define MCK_SCALAR_HPP_

#include <Eigen/Core>
#include <Eigen/LU>
#include <complex>

namespace mck {

using Real = double;
using Complex = std::complex<double>;

using Vec = Eigen::VectorXd;
using VecC = Eigen::VectorXcd;
using Mat3C = Eigen::Matrix3cd;
using Mat2C = Eigen::Matrix2cd;
using Vec3C = Eigen::Vector3cd;
using Vec2C = Eigen::Vector2cd;

template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt3 = 1.7320508075688772935;

// omega = e^{2 pi i/3}, the primitive cube root of unity used throughout.
inline Complex omega() { return Complex(-0.5, 0.5 * kSqrt3); }
inline Complex omega2() { return Complex(-0.5, -0.5 * kSqrt3); }

}  // namespace mck

#endif  // MCK_SCALAR_HPP_
