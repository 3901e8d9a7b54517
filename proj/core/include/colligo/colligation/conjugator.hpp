#pragma once

#include "colligo/colligation/colligation.hpp"

namespace colligo::coll {

/// For alpha = 1 and diagonal inner blocks with pairwise distinct eigenvalues,
/// returns U with diag(1, U)^{-1} (g o h) diag(1, U) = h o g.
/// Throws GenericityError when the eigenvalues collide or a diagonal factor
/// vanishes or blows up.
QMatrix commutativity_conjugator(const Colligation& g, const Colligation& h);

}  // namespace colligo::coll
