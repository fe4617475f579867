#pragma once

// Data-parallel inner loops. Every kernel has a serial reference path selected
// by Exec::serial; the OpenMP path must return bit-identical results.

#include <vector>

#include "vieta/rational.hpp"

namespace vieta {

enum class Exec { serial, parallel };

namespace kernels {

struct Hyperplane {
  Exponent normal; // primitive
  Integer offset;  // <normal, p> <= offset on every input point

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane& a, const Hyperplane& b) {
    if (a.normal != b.normal) return a.normal <=> b.normal;
    return a.offset.compare(b.offset) <=> 0;
  }
};

// All facet-defining hyperplanes of conv(points) for a full-dimensional
// integer point set in Z^d, found by testing the hyperplane through every
// affinely independent d-subset. Sorted and duplicate-free.
std::vector<Hyperplane> supporting_hyperplanes(const Matrix<Integer>& points, Exec exec);

} // namespace kernels
} // namespace vieta
