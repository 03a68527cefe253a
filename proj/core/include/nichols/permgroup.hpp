#pragma once

#include <vector>

#include "nichols/cyclotomic.hpp"  // BigInt

namespace nichols {

/// Order of the permutation group generated by `gens` (each a permutation of
/// 0..n-1), via a stabilizer chain with Schreier generators.
BigInt permutation_group_order(const std::vector<std::vector<int>>& gens, int n);

}  // namespace nichols
