#pragma once

#include "colligo/arith/ratfun.hpp"
#include "colligo/colligation/colligation.hpp"

namespace colligo::coll {

/// Colligation with alpha = 1 whose characteristic function is w.
///
/// Built from degree-one factors with rational pole and zero, moving to such a
/// factor by a Moebius change of coordinates when none is available.
/// Throws PoleError when w has a pole at 0 and RealizationError when no
/// rational factor can be reached.
Colligation realize(const arith::RatFun& w);

}  // namespace colligo::coll
