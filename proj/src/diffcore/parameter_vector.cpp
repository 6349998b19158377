#include "magics/diffcore/parameter_vector.hpp"

#include <numeric>
#include <stdexcept>

namespace magics::diffcore {

void ParameterVector::add_segment(std::string_view name,
                                  const std::vector<int>& shape) {
  if (has_segment(name)) {
    throw std::invalid_argument("duplicate parameter segment: " + std::string(name));
  }
  int size = 1;
  for (int d : shape) {
    if (d <= 0) throw std::invalid_argument("non-positive segment dimension");
    size *= d;
  }
  Segment seg;
  seg.name = std::string(name);
  seg.shape = shape;
  seg.offset = static_cast<int>(values_.size());
  seg.size = size;
  segments_.push_back(std::move(seg));
  values_.conservativeResize(values_.size() + size);
  values_.tail(size).setZero();
}

bool ParameterVector::has_segment(std::string_view name) const {
  for (const Segment& s : segments_) {
    if (s.name == name) return true;
  }
  return false;
}

const ParameterVector::Segment& ParameterVector::segment_info(
    std::string_view name) const {
  for (const Segment& s : segments_) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown parameter segment: " + std::string(name));
}

Eigen::Ref<Eigen::VectorXd> ParameterVector::segment(std::string_view name) {
  const Segment& s = segment_info(name);
  return values_.segment(s.offset, s.size);
}

Eigen::Ref<const Eigen::VectorXd> ParameterVector::segment(
    std::string_view name) const {
  const Segment& s = segment_info(name);
  return values_.segment(s.offset, s.size);
}

Eigen::Map<Eigen::MatrixXd> ParameterVector::matrix(std::string_view name) {
  const Segment& s = segment_info(name);
  if (s.shape.size() != 2) {
    throw std::invalid_argument("segment is not 2-D: " + std::string(name));
  }
  return {values_.data() + s.offset, s.shape[0], s.shape[1]};
}

Eigen::Map<const Eigen::MatrixXd> ParameterVector::matrix(
    std::string_view name) const {
  const Segment& s = segment_info(name);
  if (s.shape.size() != 2) {
    throw std::invalid_argument("segment is not 2-D: " + std::string(name));
  }
  return {values_.data() + s.offset, s.shape[0], s.shape[1]};
}

void ParameterVector::set_flat(const Eigen::VectorXd& flat) {
  if (flat.size() != values_.size()) {
    throw std::invalid_argument("flat vector length does not match layout");
  }
  values_ = flat;
}

bool ParameterVector::same_layout(const ParameterVector& other) const {
  if (segments_.size() != other.segments_.size()) return false;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].name != other.segments_[i].name) return false;
    if (segments_[i].shape != other.segments_[i].shape) return false;
  }
  return true;
}

}  // namespace magics::diffcore
