#include "grgrad/random.hpp"

#include "grgrad/errors.hpp"

namespace grgrad {

Elem random_scalar(Rng& rng, std::uint32_t p, bool nonzero) {
  std::uniform_int_distribution<Elem> d(nonzero ? 1 : 0, p - 1);
  return d(rng);
}

std::optional<Vector> random_homogeneous(const GradedModule& m, Morphism gamma, Rng& rng) {
  const auto idx = m.indices_of_degree(gamma);
  if (idx.empty()) return std::nullopt;
  Vector v(m.dim(), 0);
  while (vec_is_zero(v))
    for (auto i : idx) v[i] = random_scalar(rng, m.prime());
  return v;
}

std::optional<Vector> random_homogeneous(const GradedModule& m, Rng& rng) {
  const auto supp = m.support();
  if (supp.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> d(0, supp.size() - 1);
  return random_homogeneous(m, supp[d(rng)], rng);
}

namespace {

Matrix random_invertible(std::uint32_t p, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(rng, p);
    if (rank(m) == n) return m;
  }
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix inv(m.prime(), n, n);
  for (std::size_t c = 0; c < n; ++c) {
    auto x = solve_left(m, unit_vector(n, c));
    for (std::size_t k = 0; k < n; ++k) inv.at(c, k) = (*x)[k];
  }
  return inv;
}

}  // namespace

GradedModule scramble(const GradedModule& m, Rng& rng) {
  const std::size_t n = m.dim();
  Matrix p(m.prime(), n, n);
  for (auto d : m.support()) {
    const auto idx = m.indices_of_degree(d);
    const Matrix block = random_invertible(m.prime(), idx.size(), rng);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) p.at(idx[a], idx[b]) = block(a, b);
  }
  const Matrix pinv = inverse(p);
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) action.push_back(p * a * pinv);
  std::vector<BasisElement> basis = m.basis();
  for (std::size_t i = 0; i < n; ++i) basis[i].name = "m" + std::to_string(i + 1);
  return GradedModule(m.ring_ptr(), std::move(basis), std::move(action));
}

GradedModule random_module(const RingPtr& r, Rng& rng, std::size_t max_dim) {
  if (max_dim == 0) throw InputError("random_module needs max_dim >= 1");
  const GradedModule reg = regular_module(r);
  const std::size_t ng = r->groupoid().size();
  std::uniform_int_distribution<std::uint32_t> pick_morphism(0, static_cast<std::uint32_t>(ng - 1));
  std::uniform_int_distribution<int> pick_count(1, 4);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<GradedModule> parts;
    const int k = pick_count(rng);
    for (int s = 0; s < k; ++s) {
      Shift sh = shift(reg, Morphism{pick_morphism(rng)});
      if (sh.module.dim() > 0) parts.push_back(std::move(sh.module));
    }
    if (parts.empty()) continue;
    GradedModule m = direct_sum(parts).module;
    if (std::bernoulli_distribution(0.5)(rng)) {
      std::vector<Vector> gens;
      for (int g = 0; g < 2; ++g)
        if (auto v = random_homogeneous(m, rng)) gens.push_back(*v);
      m = submodule_as_module(m, spin_space(m, gens));
    }
    while (m.dim() > max_dim || (m.dim() > 1 && std::bernoulli_distribution(0.3)(rng))) {
      auto v = random_homogeneous(m, rng);
      const Subspace n = spin_space(m, {*v});
      if (n.dim() == m.dim()) break;
      m = quotient(m, n).module;
    }
    if (m.dim() == 0 || m.dim() > max_dim) continue;
    GradedModule out = scramble(m, rng);
    if (!out.validate().ok()) throw ConsistencyError("random_module produced an invalid module");
    return out;
  }
  throw ResourceError("random_module could not reach the requested dimension");
}

GradedRing random_graded_quotient(const GradedRing& r, Rng& rng) {
  const GradedModule reg = regular_module(std::make_shared<const GradedRing>(r));
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Vector> gens;
    const int k = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int g = 0; g < k; ++g)
      if (auto v = random_homogeneous(reg, rng)) gens.push_back(*v);
    const Subspace ideal = ideal_closure(r, gens, Side::TwoSided);
    if (ideal.dim() == 0 || ideal.dim() == r.dim()) continue;
    GradedRing q = quotient_ring(r, ideal);
    if (!q.validate().ok()) throw ConsistencyError("random quotient failed validation");
    return q;
  }
  throw ResourceError("no proper nonzero graded quotient found");
}

Matrix random_endomorphism(const GradedModule& m, Morphism gamma, Rng& rng) {
  Matrix g(m.prime(), m.dim(), m.dim());
  for (const auto& h : hom_gamma(m, m, gamma)) g = g + h.scaled(random_scalar(rng, m.prime()));
  return g;
}

}  // namespace grgrad
