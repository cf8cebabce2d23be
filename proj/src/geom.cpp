#include "emst/geom.hpp"

#include "emst/errors.hpp"

namespace emst {

CwAngleRank cw_angle_rank(Vec2 base, Vec2 cand) {
  if ((base.x == 0.0 && base.y == 0.0) || (cand.x == 0.0 && cand.y == 0.0)) {
    throw InputError("cw_angle_rank: zero-length direction");
  }
  const double c = cross(base, cand);
  if (c < 0.0) return {0, cand};
  if (c > 0.0) return {2, cand};
  return {dot(base, cand) < 0.0 ? 1 : 3, cand};
}

}  // namespace emst
