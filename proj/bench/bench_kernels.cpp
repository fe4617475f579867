// Serial vs OpenMP timings for the parallel kernels: facet enumeration,
// Minkowski systems, vertex coefficients and the per-vertex formula loop.
// Usage: bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <omp.h>

#include "vieta/flags.hpp"
#include "vieta/formulas.hpp"
#include "vieta/random.hpp"

using namespace vieta;

namespace {

double best_of(int repeats, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const char* name, int repeats, const std::function<void(Exec)>& body) {
  const double s = best_of(repeats, [&] { body(Exec::serial); });
  const double p = best_of(repeats, [&] { body(Exec::parallel); });
  std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %5.2fx\n", name, s, p, s / p);
}

} // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  Random rng(7);
  std::vector<Point> cloud;
  for (int i = 0; i < 40; ++i) {
    Point p(4);
    for (auto& x : p) x = Rational(rng.uniform(-6, 6));
    cloud.push_back(p);
  }
  row("hull, 40 points in R^4", repeats, [&](Exec e) { convex_hull(cloud, e); });

  std::vector<std::vector<LaurentPolynomial>> systems;
  for (int i = 0; i < 6; ++i) systems.push_back(random_developed_system(rng, 3, 5, 3, 9));

  row("minkowski systems, n=3", repeats, [&](Exec e) {
    for (const auto& s : systems) {
      std::vector<Polytope> polys;
      for (const auto& f : s) polys.push_back(newton_polytope(f));
      MinkowskiSystem ms(std::move(polys), e);
    }
  });

  row("vertex coefficients, n=3", repeats, [&](Exec e) {
    for (const auto& s : systems) SystemInstance sys(s, e);
  });

  std::vector<SystemInstance> instances;
  for (const auto& s : systems) instances.emplace_back(s, Exec::serial);
  row("sum over roots (f0 = 1)", repeats, [&](Exec e) {
    for (const auto& sys : instances) {
      sum_over_roots(LaurentPolynomial::constant(sys.dim(), Rational(1)), sys, e);
    }
  });
  row("product over roots (t1)", repeats, [&](Exec e) {
    for (const auto& sys : instances) {
      Exponent m(sys.dim(), 0);
      m[0] = 1;
      factored_product_over_roots(Monomial(Rational(1), m), sys, e);
    }
  });

  PolyhedralComplex cube(convex_hull({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
                                      {0, 0, 1, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 0},
                                      {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 0, 1},
                                      {0, 0, 1, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}}));
  const FaceMap id = identity_map(cube);
  const std::vector<Flag> refs = cube.flags();
  row("flag degree, 4-cube boundary", repeats, [&](Exec e) {
    for (const Flag& ref : refs) degree_by_flags(id, ref, e);
  });
  return 0;
}
