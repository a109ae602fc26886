#pragma once

#include "trilink/geometry.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trilink {

/// Raised when a triangle list does not form a linking. Carries the indices
/// of the offending triangles (second == first for single-triangle faults).
class LinkingError : public std::invalid_argument {
 public:
  enum class Reason { WrongCount, OutlinesIntersect };

  LinkingError(Reason reason, std::size_t first, std::size_t second, const std::string& what)
      : std::invalid_argument(what), reason_(reason), first_(first), second_(second) {}

  Reason reason() const { return reason_; }
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  Reason reason_;
  std::size_t first_, second_;
};

/// Two or three non-degenerate triangles with pairwise disjoint outlines.
/// Immutable; "modifications" return new linkings that are re-validated.
class Linking {
 public:
  explicit Linking(std::vector<Triangle> triangles) : triangles_(std::move(triangles)) {
    if (triangles_.size() != 2 && triangles_.size() != 3)
      throw LinkingError(LinkingError::Reason::WrongCount, 0, 0,
                         "a linking has 2 or 3 triangles, got " + std::to_string(triangles_.size()));
    for (std::size_t i = 0; i < triangles_.size(); ++i)
      for (std::size_t j = i + 1; j < triangles_.size(); ++j)
        if (outlines_intersect(triangles_[i], triangles_[j]))
          throw LinkingError(LinkingError::Reason::OutlinesIntersect, i, j,
                             "outlines of triangles " + std::to_string(i) + " and " +
                                 std::to_string(j) + " intersect");
  }

  std::size_t size() const { return triangles_.size(); }
  const Triangle& operator[](std::size_t i) const { return triangles_[i]; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  /// Copy with triangle i replaced; validated like any other linking.
  Linking with_triangle(std::size_t i, Triangle t) const {
    auto tris = triangles_;
    tris.at(i) = std::move(t);
    return Linking(std::move(tris));
  }

  /// Copy with the triangles listed in the given order.
  Linking permuted(const std::vector<std::size_t>& order) const {
    std::vector<Triangle> tris;
    tris.reserve(order.size());
    for (std::size_t i : order) tris.push_back(triangles_.at(i));
    return Linking(std::move(tris));
  }

  friend bool operator==(const Linking&, const Linking&) = default;

 private:
  std::vector<Triangle> triangles_;
};

}  // namespace trilink
