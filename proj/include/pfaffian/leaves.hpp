#pragma once

#include <string>
#include <vector>

#include "pfaffian/rootsystem.hpp"

namespace pfaffian {

enum class Space { GB, GU };

/// One torus leaf, indexed by a Bruhat-comparable pair v <= u.
struct LeafIndex {
    WeylWord u;
    WeylWord v;
    Space space = Space::GU;
};

/// All ordered pairs (u, v) with v <= u in Bruhat order. The index set is the
/// same for both spaces; only the dimension bookkeeping differs.
std::vector<LeafIndex> enumerate_leaves(const RootSystem& rs, Space space);

/// length(u) - length(v), plus the torus rank for the basic affine space.
int leaf_dimension(const RootSystem& rs, const LeafIndex& l);

std::string leaves_json(const RootSystem& rs, const std::vector<LeafIndex>& leaves);

}  // namespace pfaffian
