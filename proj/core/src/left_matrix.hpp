#pragma once

#include <Eigen/Dense>

#include "slicefock/quaternion.hpp"

namespace slicefock::detail {

/// Real 4x4 matrix of q -> g q on (w, x, y, z).
inline Eigen::Matrix4d left_matrix(const Quaternion& g) {
  Eigen::Matrix4d L;
  L << g.w, -g.x, -g.y, -g.z,
       g.x,  g.w, -g.z,  g.y,
       g.y,  g.z,  g.w, -g.x,
       g.z, -g.y,  g.x,  g.w;
  return L;
}

}  // namespace slicefock::detail
