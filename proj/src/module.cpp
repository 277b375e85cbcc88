#include "grgrad/module.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "grgrad/errors.hpp"

namespace grgrad {

GradedModule::GradedModule(RingPtr ring, std::vector<BasisElement> basis, std::vector<Matrix> action)
    : ring_(std::move(ring)), basis_(std::move(basis)), action_(std::move(action)) {
  if (!ring_) throw InputError("module needs a ring");
  const std::size_t n = basis_.size();
  if (action_.size() != ring_->dim())
    throw InputError("module needs one action matrix per ring basis element");
  for (auto& a : action_)
    if (a.rows() != n || a.cols() != n || a.prime() != ring_->prime())
      throw InputError("module action matrix has wrong shape or field");
  for (const auto& b : basis_) {
    if (b.degree.id >= ring_->groupoid().size())
      throw InputError("module basis element " + b.name + " has an unknown degree");
    degrees_.push_back(b.degree);
  }
}

Matrix GradedModule::action_by(const Vector& a) const {
  if (a.size() != ring_->dim()) throw InputError("ring element has wrong length");
  Matrix m(prime(), dim(), dim());
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) m = m + action_[j].scaled(a[j]);
  return m;
}

Vector GradedModule::act(const Vector& m, const Vector& a) const {
  if (m.size() != dim()) throw InputError("module element has wrong length");
  Vector out(dim(), 0);
  const PrimeField f(prime());
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) vec_axpy(f, out, a[j], vec_times(m, action_[j]));
  return out;
}

std::vector<std::size_t> GradedModule::indices_of_degree(Morphism g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

std::vector<Morphism> GradedModule::support() const {
  std::set<Morphism> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

ValidationReport GradedModule::validate() const {
  ValidationReport rep;
  const GradedRing& r = *ring_;
  const Groupoid& g = r.groupoid();
  const std::size_t n = dim();
  auto nm = [&](std::size_t i) { return basis_[i].name + "[" + std::to_string(i) + "]"; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) {
      const auto st = g.compose(degrees_[i], r.degree(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (action_[j](i, k) == 0) continue;
        if (!st || degrees_[k] != *st) {
          rep.add("grading violated: " + nm(i) + "*" + r.basis()[j].name + " has support on " + nm(k));
          break;
        }
      }
    }
  for (std::size_t j = 0; j < r.dim(); ++j)
    for (std::size_t k = 0; k < r.dim(); ++k)
      if (action_[j] * action_[k] != action_by(r.product(j, k)))
        rep.add("action is not associative at (" + r.basis()[j].name + "," + r.basis()[k].name + ")");
  for (std::size_t i = 0; i < n; ++i) {
    const Morphism d = g.source(degrees_[i]);
    const Vector mi = unit_vector(n, i);
    if (act(mi, r.unit(d)) != mi) rep.add("unit law violated: " + nm(i) + "*1_" + g.name(d) + " != " + nm(i));
  }
  return rep;
}

GradedModule regular_module(const RingPtr& r) {
  return GradedModule(r, r->basis(), r->right_mults());
}

GradedModule zero_module(const RingPtr& r) {
  return GradedModule(r, {}, std::vector<Matrix>(r->dim(), Matrix(r->prime(), 0, 0)));
}

GradedSubmodule component_module(const GradedModule& m, Morphism e) {
  const Groupoid& g = m.ring().groupoid();
  if (!g.is_object(e)) throw InputError("M(e) requires an object");
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (g.target(m.degree(i)) == e) vs.push_back(unit_vector(m.dim(), i));
  return GradedSubspace(Subspace::span(m.prime(), m.dim(), vs), m.degrees());
}

std::vector<Morphism> gamma0_support(const GradedModule& m) {
  std::set<Morphism> s;
  for (auto d : m.degrees()) s.insert(m.ring().groupoid().target(d));
  return {s.begin(), s.end()};
}

std::vector<Morphism> gamma0_support(const GradedModule& m, const Subspace& top, const Subspace& bottom) {
  if (!top.contains(bottom)) throw InputError("subquotient needs nested subspaces");
  const GradedSubspace t(top, m.degrees()), b(bottom, m.degrees());
  const auto td = t.dims_by_degree(), bd = b.dims_by_degree();
  std::set<Morphism> s;
  for (const auto& [deg, k] : td) {
    auto it = bd.find(deg);
    if (k > (it == bd.end() ? 0 : it->second)) s.insert(m.ring().groupoid().target(deg));
  }
  return {s.begin(), s.end()};
}

Subspace spin_space(const GradedModule& m, const std::vector<Vector>& generators) {
  Subspace s = Subspace::zero(m.prime(), m.dim());
  std::deque<Vector> work;
  for (const auto& v : generators) {
    if (v.size() != m.dim()) throw InputError("generator has wrong length");
    if (s.insert(v)) work.push_back(v);
  }
  while (!work.empty()) {
    Vector v = std::move(work.front());
    work.pop_front();
    for (const auto& a : m.actions()) {
      Vector w = vec_times(v, a);
      if (s.insert(w)) work.push_back(std::move(w));
    }
  }
  return s;
}

GradedSubmodule spin(const GradedModule& m, const std::vector<Vector>& generators) {
  for (const auto& v : generators) {
    if (v.size() != m.dim()) throw InputError("generator has wrong length");
    if (!vec_is_zero(v) && !homogeneous_degree(m.degrees(), v))
      throw InputError("spin requires homogeneous generators");
  }
  return GradedSubspace(spin_space(m, generators), m.degrees());
}

bool is_submodule(const GradedModule& m, const Subspace& s) {
  if (s.ambient() != m.dim()) return false;
  for (std::size_t b = 0; b < s.dim(); ++b) {
    const Vector v = s.basis().row_vector(b);
    for (const auto& a : m.actions())
      if (!s.contains(vec_times(v, a))) return false;
  }
  return true;
}

GradedSubmodule submodule(const GradedModule& m, const Subspace& s) {
  if (s.ambient() != m.dim()) throw InputError("submodule lives in a different ambient space");
  GradedSubspace g(s, m.degrees());
  if (!is_submodule(m, s)) throw InputError("subspace is not closed under the ring action");
  return g;
}

GradedModule submodule_as_module(const GradedModule& m, const Subspace& n) {
  const GradedSubmodule sub = submodule(m, n);
  std::vector<BasisElement> basis;
  for (std::size_t b = 0; b < n.dim(); ++b) {
    const auto& pivot = n.pivots()[b];
    basis.push_back({m.basis()[pivot].name, sub.degrees()[b]});
  }
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) {
    Matrix x(m.prime(), n.dim(), n.dim());
    for (std::size_t b = 0; b < n.dim(); ++b) {
      auto c = n.coordinates(vec_times(n.basis().row_vector(b), a));
      for (std::size_t k = 0; k < n.dim(); ++k) x.at(b, k) = (*c)[k];
    }
    action.push_back(std::move(x));
  }
  return GradedModule(m.ring_ptr(), std::move(basis), std::move(action));
}

Vector Quotient::lift(const Vector& q) const {
  Vector v(projection.rows(), 0);
  for (std::size_t c = 0; c < representatives.size(); ++c) v[representatives[c]] = q[c];
  return v;
}

Quotient quotient(const GradedModule& m, const Subspace& n) {
  submodule(m, n);
  const auto reps = n.non_pivots();
  Matrix proj = quotient_projection(n);
  std::vector<BasisElement> basis;
  for (auto i : reps) basis.push_back(m.basis()[i]);
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) {
    Matrix x(m.prime(), reps.size(), reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const Vector img = vec_times(a.row_vector(reps[c]), proj);
      for (std::size_t k = 0; k < reps.size(); ++k) x.at(c, k) = img[k];
    }
    action.push_back(std::move(x));
  }
  return Quotient{GradedModule(m.ring_ptr(), std::move(basis), std::move(action)), std::move(proj), reps};
}

DirectSum direct_sum(const std::vector<GradedModule>& summands) {
  if (summands.empty()) throw InputError("direct sum of an empty family needs a ring");
  const RingPtr& r = summands.front().ring_ptr();
  std::vector<BasisElement> basis;
  std::vector<std::size_t> offsets;
  for (std::size_t s = 0; s < summands.size(); ++s) {
    const auto& m = summands[s];
    if (!(m.ring() == *r)) throw InputError("direct sum summands live over different rings");
    offsets.push_back(basis.size());
    for (const auto& b : m.basis())
      basis.push_back({summands.size() == 1 ? b.name : b.name + "@" + std::to_string(s + 1), b.degree});
  }
  const std::size_t n = basis.size();
  std::vector<Matrix> action;
  for (std::size_t j = 0; j < r->dim(); ++j) {
    Matrix x(r->prime(), n, n);
    for (std::size_t s = 0; s < summands.size(); ++s) {
      const Matrix& a = summands[s].action(j);
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) x.at(offsets[s] + i, offsets[s] + k) = a(i, k);
    }
    action.push_back(std::move(x));
  }
  return DirectSum{GradedModule(r, std::move(basis), std::move(action)), std::move(offsets)};
}

Shift shift(const GradedModule& m, Morphism sigma) {
  const Groupoid& g = m.ring().groupoid();
  const Morphism inv = g.inverse(sigma);
  std::vector<std::size_t> kept;
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const Morphism d = m.degree(i);
    if (g.target(d) != g.target(sigma)) continue;
    kept.push_back(i);
    basis.push_back({m.basis()[i].name, *g.compose(inv, d)});
  }
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) action.push_back(a.select_rows(kept).select_cols(kept));
  return Shift{GradedModule(m.ring_ptr(), std::move(basis), std::move(action)), std::move(kept)};
}

Subspace shift_subspace(const Shift& s, const Subspace& sub) {
  std::vector<bool> keep(sub.ambient(), false);
  for (auto i : s.kept) keep[i] = true;
  for (std::size_t r = 0; r < sub.dim(); ++r)
    for (std::size_t c = 0; c < sub.ambient(); ++c)
      if (sub.basis()(r, c) != 0 && !keep[c])
        throw InputError("subspace is not contained in the shifted component");
  return Subspace::span(sub.basis().select_cols(s.kept));
}

namespace {

std::vector<std::vector<bool>> degree_mask(const GradedModule& m, const GradedModule& n,
                                           const std::optional<Morphism>& gamma) {
  const Groupoid& g = m.ring().groupoid();
  std::vector<std::vector<bool>> allowed(m.dim(), std::vector<bool>(n.dim(), false));
  for (std::size_t r = 0; r < m.dim(); ++r) {
    std::optional<Morphism> want = m.degree(r);
    if (gamma) want = g.compose(*gamma, m.degree(r));
    if (!want) continue;
    for (std::size_t c = 0; c < n.dim(); ++c) allowed[r][c] = n.degree(c) == *want;
  }
  return allowed;
}

void require_same_ring(const GradedModule& m, const GradedModule& n) {
  if (m.ring_ptr() != n.ring_ptr() && !(m.ring() == n.ring()))
    throw InputError("modules live over different rings");
}

std::vector<Matrix> masked_homs(const GradedModule& m, const GradedModule& n,
                                const std::optional<Morphism>& gamma) {
  require_same_ring(m, n);
  if (m.dim() == 0 || n.dim() == 0) return {};
  const auto mask = degree_mask(m, n, gamma);
  return intertwiners(m.prime(), m.actions(), n.actions(), &mask);
}

bool respects_mask(const Matrix& g, const std::vector<std::vector<bool>>& mask) {
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (g(r, c) != 0 && !mask[r][c]) return false;
  return true;
}

bool commutes(const GradedModule& m, const GradedModule& n, const Matrix& g) {
  for (std::size_t j = 0; j < m.ring().dim(); ++j)
    if (m.action(j) * g != g * n.action(j)) return false;
  return true;
}

}  // namespace

std::vector<Matrix> hom_gamma(const GradedModule& m, const GradedModule& n, Morphism gamma) {
  m.ring().groupoid().name(gamma);
  return masked_homs(m, n, gamma);
}

std::vector<Matrix> homgr(const GradedModule& m, const GradedModule& n) { return masked_homs(m, n, std::nullopt); }

bool is_hom_of_degree(const GradedModule& m, const GradedModule& n, const Matrix& g, Morphism gamma) {
  require_same_ring(m, n);
  if (g.rows() != m.dim() || g.cols() != n.dim()) return false;
  return respects_mask(g, degree_mask(m, n, gamma)) && commutes(m, n, g);
}

bool is_gr_hom(const GradedModule& m, const GradedModule& n, const Matrix& g) {
  require_same_ring(m, n);
  if (g.rows() != m.dim() || g.cols() != n.dim()) return false;
  return respects_mask(g, degree_mask(m, n, std::nullopt)) && commutes(m, n, g);
}

IsoResult is_gr_isomorphic(const GradedModule& m, const GradedModule& n, std::uint64_t budget,
                           bool assume_simple) {
  require_same_ring(m, n);
  if (m.dim() != n.dim()) return {};
  if (GradedSubspace(Subspace::full(m.prime(), m.dim()), m.degrees()).dims_by_degree() !=
      GradedSubspace(Subspace::full(n.prime(), n.dim()), n.degrees()).dims_by_degree())
    return {};
  if (m.dim() == 0) return {true, Matrix(m.prime(), 0, 0)};
  const auto homs = homgr(m, n);
  if (homs.empty()) return {};
  auto invertible = [&](const Matrix& g) { return rank(g) == m.dim(); };
  if (assume_simple) return {true, homs.front()};
  for (const auto& h : homs)
    if (invertible(h)) return {true, h};
  std::optional<Matrix> found;
  const std::size_t k = homs.size();
  if (saturating_pow(m.prime(), k) > budget)
    throw ResourceError("gr-isomorphism search over p^" + std::to_string(k) + " maps exceeds budget");
  for_each_vector(m.prime(), k, budget, [&](const Vector& c) {
    if (found || vec_is_zero(c)) return;
    Matrix g(m.prime(), m.dim(), n.dim());
    for (std::size_t t = 0; t < k; ++t)
      if (c[t] != 0) g = g + homs[t].scaled(c[t]);
    if (invertible(g)) found = std::move(g);
  });
  if (!found) return {};
  return {true, std::move(found)};
}

Matrix component_projection(const GradedModule& m, Morphism e) {
  const Groupoid& g = m.ring().groupoid();
  if (!g.is_object(e)) throw InputError("1_e requires an object");
  Matrix p(m.prime(), m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (g.target(m.degree(i)) == e) p.at(i, i) = 1;
  return p;
}

}  // namespace grgrad
