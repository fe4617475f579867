#pragma once

#include <string>
#include <vector>

#include "vieta/parse.hpp"
#include "vieta/polytope.hpp"

namespace vieta::test {

inline LaurentPolynomial P(const std::string& text, std::size_t n) { return parse_laurent(text, n); }

inline std::vector<LaurentPolynomial> system_of(std::size_t n, std::initializer_list<const char*> polys) {
  std::vector<LaurentPolynomial> out;
  for (const char* p : polys) out.push_back(parse_laurent(p, n));
  return out;
}

inline Polytope hull_of(std::initializer_list<Exponent> pts) {
  std::vector<Point> ps;
  for (const auto& e : pts) ps.push_back(to_point(e));
  return convex_hull(std::move(ps));
}

inline std::size_t face_with(const Polytope& p, std::initializer_list<Exponent> vertices) {
  std::vector<int> idx;
  for (const auto& v : vertices) idx.push_back(static_cast<int>(*p.vertex_index(to_point(v))));
  std::sort(idx.begin(), idx.end());
  return p.find_face(idx).value();
}

inline std::size_t facet_with_normal(const Polytope& p, const Exponent& normal) {
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    if (p.facets()[i].normal == normal) return i;
  }
  throw std::out_of_range("no facet with that normal");
}

} // namespace vieta::test
