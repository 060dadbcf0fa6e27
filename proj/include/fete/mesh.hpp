#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fete {

class TimeMesh;
TimeMesh uniform_mesh(std::size_t num_elements);

/// Partition of the artificial-time interval [0, 1] into finite elements.
class TimeMesh {
 public:
  /// nodes must be strictly increasing, starting at 0 and ending at 1.
  explicit TimeMesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw std::invalid_argument("TimeMesh: need at least two nodes");
    if (nodes_.front() != 0.0 || nodes_.back() != 1.0) {
      throw std::invalid_argument("TimeMesh: nodes must start at 0 and end at 1");
    }
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
      if (!(nodes_[i] < nodes_[i + 1])) {
        throw std::invalid_argument("TimeMesh: nodes not strictly increasing at index " +
                                    std::to_string(i));
      }
    }
  }

  std::size_t num_elements() const noexcept { return nodes_.size() - 1; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }

  bool is_uniform() const noexcept { return uniform_; }

  double width(std::size_t e) const { return nodes_.at(e + 1) - nodes_.at(e); }

  /// q_e = 2 / (t_{e+1} - t_e); exactly 2E on a uniform mesh.
  double scale(std::size_t e) const {
    if (uniform_) {
      (void)nodes_.at(e + 1);
      return 2.0 * static_cast<double>(num_elements());
    }
    return 2.0 / width(e);
  }

  /// p_e = (t_{e+1} + t_e) / (t_{e+1} - t_e); exactly 2e + 1 on a uniform mesh.
  double shift(std::size_t e) const {
    if (uniform_) {
      (void)nodes_.at(e + 1);
      return 2.0 * static_cast<double>(e) + 1.0;
    }
    return (nodes_.at(e + 1) + nodes_.at(e)) / width(e);
  }

  /// tau = q_e t - p_e, evaluated as ((t - t_e) + (t - t_{e+1})) / (t_{e+1} - t_e) so
  /// that both element endpoints land on -1 and +1 without rounding.
  double to_local(std::size_t e, double t) const {
    const double lo = nodes_.at(e);
    const double hi = nodes_.at(e + 1);
    return ((t - lo) + (t - hi)) / (hi - lo);
  }

  double to_global(std::size_t e, double tau) const { return (tau + shift(e)) / scale(e); }

 private:
  friend TimeMesh uniform_mesh(std::size_t);

  std::vector<double> nodes_;
  bool uniform_ = false;
};

inline TimeMesh uniform_mesh(std::size_t num_elements) {
  if (num_elements < 1) throw std::invalid_argument("uniform_mesh: need at least one element");
  std::vector<double> nodes(num_elements + 1);
  const double count = static_cast<double>(num_elements);
  for (std::size_t i = 0; i <= num_elements; ++i) nodes[i] = static_cast<double>(i) / count;
  TimeMesh mesh(std::move(nodes));
  mesh.uniform_ = true;
  return mesh;
}

}  // namespace fete
