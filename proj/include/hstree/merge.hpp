#pragma once

#include "hstree/hst.hpp"

namespace hstree {

// Combines two HST embeddings whose domains share exactly one point v, with
// no distortion of either side: distances within each input domain are
// preserved exactly, and every cross pair (x,y) ends up at distance at least
// max(d1(x,v), d2(v,y)).
//
// Construction: the shorter root is raised by a unary chain until both roots
// level up; then, walking the two v-to-root paths upward in lockstep, every
// off-path child subtree of the second tree's path node is grafted onto the
// first tree's path node at the same height. The second copy of v's leaf is
// dropped in favor of the first.
HstEmbedding merge_hst(const HstEmbedding& a, const HstEmbedding& b);

}  // namespace hstree
