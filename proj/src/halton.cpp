#include "lcgp/halton.hpp"

#include <numeric>
#include <stdexcept>

namespace lcgp {

double radical_inverse(std::uint64_t index, int base) {
  double result = 0.0;
  double digit_weight = 1.0 / base;
  while (index > 0) {
    result += static_cast<double>(index % static_cast<std::uint64_t>(base)) * digit_weight;
    index /= static_cast<std::uint64_t>(base);
    digit_weight /= base;
  }
  return result;
}

std::vector<Eigen::Vector2d> halton_points(int count, std::pair<int, int> bases, int skip) {
  if (count < 0) throw std::invalid_argument("halton_points: count must be >= 0");
  if (bases.first < 2 || bases.second < 2 || std::gcd(bases.first, bases.second) != 1) {
    throw std::invalid_argument("halton_points: bases must be coprime and >= 2");
  }
  std::vector<Eigen::Vector2d> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const std::uint64_t index = static_cast<std::uint64_t>(skip) + 1 + static_cast<std::uint64_t>(k);
    points.emplace_back(radical_inverse(index, bases.first), radical_inverse(index, bases.second));
  }
  return points;
}

}  // namespace lcgp
