#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

namespace lcgp {

/// Radical inverse of index in the given base; maps 1, 2, 3, ... into (0, 1).
double radical_inverse(std::uint64_t index, int base);

/// First `count` points of the 2D Halton sequence in the open unit square,
/// starting at integer index skip + 1. Bases must be coprime.
std::vector<Eigen::Vector2d> halton_points(int count, std::pair<int, int> bases = {2, 3},
                                           int skip = 0);

}  // namespace lcgp
