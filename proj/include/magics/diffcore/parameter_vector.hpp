#pragma once

#include <Eigen/Core>
#include <string>
#include <string_view>
#include <vector>

namespace magics::diffcore {

// Flat real vector addressing all weights of one network, organized as an
// ordered list of named, shaped segments. The unit of optimization.
class ParameterVector {
 public:
  struct Segment {
    std::string name;
    std::vector<int> shape;
    int offset{0};
    int size{0};
  };

  ParameterVector() = default;

  // Appends a zero-initialized segment. Throws std::invalid_argument on a
  // duplicate name or non-positive dimension.
  void add_segment(std::string_view name, const std::vector<int>& shape);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.size() == 0; }

  Eigen::VectorXd& values() { return values_; }
  const Eigen::VectorXd& values() const { return values_; }

  const std::vector<Segment>& layout() const { return segments_; }
  bool has_segment(std::string_view name) const;
  const Segment& segment_info(std::string_view name) const;

  Eigen::Ref<Eigen::VectorXd> segment(std::string_view name);
  Eigen::Ref<const Eigen::VectorXd> segment(std::string_view name) const;

  // 2-D segment view (column-major storage of a rows x cols matrix).
  Eigen::Map<Eigen::MatrixXd> matrix(std::string_view name);
  Eigen::Map<const Eigen::MatrixXd> matrix(std::string_view name) const;

  Eigen::VectorXd flatten() const { return values_; }
  // Throws std::invalid_argument if the length does not match the layout.
  void set_flat(const Eigen::VectorXd& flat);

  // Layouts are equal when segment names, order and shapes all match.
  bool same_layout(const ParameterVector& other) const;

 private:
  std::vector<Segment> segments_;
  Eigen::VectorXd values_;
};

}  // namespace magics::diffcore
