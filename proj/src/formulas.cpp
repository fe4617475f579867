#include "vieta/formulas.hpp"

#include <exception>

#include "vieta/errors.hpp"
#include "vieta/flags.hpp"
#include "vieta/residue.hpp"

namespace vieta {

namespace {

std::vector<Polytope> newton_polytopes(const std::vector<LaurentPolynomial>& system) {
  if (system.empty()) throw DimensionError("empty system");
  const std::size_t n = system.size();
  std::vector<Polytope> out;
  for (const auto& f : system) {
    if (f.dim() != n) throw DimensionError("system needs n polynomials in n variables");
    if (f.is_zero()) throw PreconditionError("zero polynomial in the system");
    if (f.is_monomial()) throw PreconditionError("monomial in the system: " + to_string(f));
    out.push_back(newton_polytope(f));
  }
  Developedness d = check_developed(out);
  if (!d.developed) throw PreconditionError("system is not developed: " + d.reason);
  return out;
}

// Runs body(i) for i in [0, count); exceptions are rethrown after the loop.
template <class Body>
void for_each_index(std::size_t count, Exec exec, Body body) {
  const long n = static_cast<long>(count);
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(vieta_formula_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

} // namespace

SystemInstance::SystemInstance(std::vector<LaurentPolynomial> system, Exec exec)
    : system_(std::move(system)), ms_(newton_polytopes(system_), exec) {
  const std::size_t count = ms_.total().vertices().size();
  coefficients_.assign(count, 0);
  for_each_index(count, exec, [&](std::size_t v) {
    coefficients_[v] = combinatorial_coefficient(ms_.total(), vertex_covering(ms_, v));
  });
}

std::vector<Exponent> SystemInstance::vertices() const {
  std::vector<Exponent> out;
  for (const auto& p : ms_.total().vertices()) out.push_back(to_exponent(p));
  return out;
}

std::size_t SystemInstance::vertex_index(const Exponent& vertex) const {
  if (vertex.size() != dim()) throw DimensionError("vertex has wrong dimension");
  auto idx = ms_.total().vertex_index(to_point(vertex));
  if (!idx) throw PreconditionError("not a vertex of the Minkowski sum");
  return *idx;
}

FactoredRational factored_product_over_roots(const Monomial& f0, const SystemInstance& sys,
                                             Exec exec) {
  if (f0.dim() != sys.dim()) throw DimensionError("f0 has wrong dimension");
  const auto& c = sys.coefficients();
  std::vector<FactoredRational> parts(c.size());
  for_each_index(c.size(), exec, [&](std::size_t v) {
    if (c[v] == 0) return;
    const long e = sys.dim() % 2 == 0 ? c[v] : -c[v];
    parts[v] = factored_vertex_symbol(f0, sys.system(), sys.minkowski(), v).pow(Integer(e));
  });
  FactoredRational out;
  for (const auto& p : parts) out *= p;
  return out;
}

Rational product_over_roots(const Monomial& f0, const SystemInstance& sys, Exec exec) {
  return factored_product_over_roots(f0, sys, exec).value();
}

Rational product_over_roots(const LaurentPolynomial& f0, const SystemInstance& sys, Exec exec) {
  if (!f0.is_monomial()) throw PreconditionError("f0 must be a single monomial");
  return product_over_roots(f0.as_monomial(), sys, exec);
}

Rational sum_over_roots(const LaurentPolynomial& f0, const SystemInstance& sys, Exec exec) {
  if (f0.dim() != sys.dim()) throw DimensionError("f0 has wrong dimension");
  if (f0.is_zero()) return Rational(0);
  const LaurentPolynomial g = laurent_mul(f0, toric_jacobian(sys.system()));
  const LaurentPolynomial f = product(sys.system());
  const auto& c = sys.coefficients();
  const auto vertices = sys.vertices();
  std::vector<Rational> parts(c.size());
  for_each_index(c.size(), exec, [&](std::size_t v) {
    if (c[v] == 0) return;
    parts[v] = residue_at_vertex(g, f, vertices[v]) * c[v];
  });
  Rational total(0);
  for (const auto& p : parts) total += p;
  return sys.dim() % 2 == 0 ? total : Rational(-total);
}

Integer bernstein_number(const SystemInstance& sys, Exec exec) {
  Rational count = sum_over_roots(LaurentPolynomial::constant(sys.dim(), Rational(1)), sys, exec);
  Integer mv = mixed_volume_ie(sys.minkowski().summands());
  if (denominator(count) != 1 || numerator(count) != mv) {
    throw ConsistencyError("root count " + to_string(count) + " from the sum formula differs from "
                           "mixed volume " + mv.str());
  }
  return mv;
}

} // namespace vieta
