#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgcs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

/// Thrown when an input violates an operation's preconditions.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void require_dims(bool cond, const std::string& msg) {
  if (!cond) throw DimensionError(msg);
}

}  // namespace sgcs
