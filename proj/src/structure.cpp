#include "grgrad/structure.hpp"

#include <algorithm>
#include <random>

#include "grgrad/errors.hpp"

namespace grgrad {

// ---------------------------------------------------------------- composition series

namespace {

CompositionFactor make_factor(GradedModule module) {
  const Groupoid& g = module.ring().groupoid();
  CompositionFactor f{std::move(module), {}, Morphism{0}, {}};
  f.dims = GradedSubspace(Subspace::full(f.module.prime(), f.module.dim()), f.module.degrees()).dims_by_degree();
  for (const auto& [deg, k] : f.dims) f.objects.push_back(g.source(deg));
  std::sort(f.objects.begin(), f.objects.end());
  f.objects.erase(std::unique(f.objects.begin(), f.objects.end()), f.objects.end());
  f.object = g.source(f.dims.begin()->first);
  return f;
}

}  // namespace

CompositionSeries composition_series(const GradedModule& m, std::uint64_t seed, std::uint64_t budget) {
  CompositionSeries cs;
  std::mt19937_64 rng(seed);
  Subspace cur = Subspace::zero(m.prime(), m.dim());
  cs.chain.emplace_back(cur, m.degrees());
  while (cur.dim() < m.dim()) {
    const Quotient q = quotient(m, cur);
    auto reps = homogeneous_representatives(q.module, budget);
    std::sort(reps.begin(), reps.end());
    std::vector<std::pair<Vector, Subspace>> best;
    std::size_t best_dim = SIZE_MAX;
    for (auto& v : reps) {
      Subspace s = spin_space(q.module, {v});
      if (s.dim() > best_dim) continue;
      if (s.dim() < best_dim) {
        best.clear();
        best_dim = s.dim();
      }
      best.emplace_back(std::move(v), std::move(s));
    }
    std::size_t pick = 0;
    if (seed != 0) pick = std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng);
    const Subspace& chosen = best[pick].second;
    cs.factors.push_back(make_factor(submodule_as_module(q.module, chosen)));
    for (std::size_t b = 0; b < chosen.dim(); ++b) cur.insert(q.lift(chosen.basis().row_vector(b)));
    cs.chain.emplace_back(cur, m.degrees());
  }
  return cs;
}

std::size_t gr_length(const GradedModule& m, std::uint64_t budget) {
  return composition_series(m, 0, budget).length();
}

std::map<Morphism, std::size_t> gamma0_length(const GradedModule& m, std::uint64_t budget) {
  std::map<Morphism, std::size_t> out;
  for (auto e : m.ring().groupoid().objects()) {
    const GradedSubmodule me = component_module(m, e);
    out[e] = me.dim() == 0 ? 0 : gr_length(submodule_as_module(m, me.space()), budget);
  }
  return out;
}

bool simple_modules_isomorphic(const GradedModule& s, const GradedModule& t) {
  if (s.dim() != t.dim()) return false;
  const auto ds = GradedSubspace(Subspace::full(s.prime(), s.dim()), s.degrees()).dims_by_degree();
  const auto dt = GradedSubspace(Subspace::full(t.prime(), t.dim()), t.degrees()).dims_by_degree();
  if (ds != dt) return false;
  return is_gr_isomorphic(s, t, kDefaultBudget, true).isomorphic;
}

bool jordan_holder_equivalent(const CompositionSeries& a, const CompositionSeries& b, std::uint64_t) {
  if (a.length() != b.length()) return false;
  std::vector<bool> used(b.length(), false);
  for (const auto& fa : a.factors) {
    bool matched = false;
    for (std::size_t k = 0; k < b.length() && !matched; ++k) {
      if (used[k] || fa.dims != b.factors[k].dims) continue;
      if (simple_modules_isomorphic(fa.module, b.factors[k].module)) used[k] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

// ---------------------------------------------------------------- semisimple / semilocal

namespace {

RingPtr share(const GradedRing& r) { return std::make_shared<const GradedRing>(r); }

std::vector<GradedSubspace> simple_decomposition(const GradedRing& r, std::uint64_t budget) {
  const GradedModule reg = regular_module(share(r));
  std::vector<GradedSubspace> out;
  Subspace total = Subspace::zero(r.prime(), r.dim());
  for (auto e : r.groupoid().objects()) {
    const GradedSubmodule comp = component_module(reg, e);
    if (comp.dim() == 0) continue;
    const GradedModule row = submodule_as_module(reg, comp.space());
    Subspace cur = Subspace::zero(r.prime(), row.dim());
    for (const auto& s : simple_submodules(row, budget)) {
      if (cur.intersect(s).dim() != 0) continue;
      cur = cur + s;
      out.emplace_back(Subspace::span(s.basis() * comp.space().basis()), r.degrees());
      if (cur.dim() == row.dim()) break;
    }
    if (cur.dim() != row.dim()) throw ConsistencyError("R(e) of a gr-semisimple ring is not a sum of simples");
    total = total + Subspace::span(comp.space().basis());
  }
  return out;
}

bool algebra_semisimple(const GradedRing& a, std::uint64_t budget) {
  return rad_gr_ring(a, budget).dim() == 0;
}

}  // namespace

SemisimpleVerdict is_gr_semisimple(const GradedRing& r, std::uint64_t budget) {
  SemisimpleVerdict v;
  v.radical = rad_gr_ring(r, budget);
  v.semisimple = v.radical.dim() == 0;
  v.socle_is_whole = soc_gr_ring(r, budget).dim() == r.dim();
  if (v.semisimple != v.socle_is_whole)
    throw ConsistencyError("rad^gr(R) = 0 and soc^gr(R) = R disagree");
  if (v.semisimple) {
    try {
      v.decomposition = simple_decomposition(r, budget);
    } catch (const ResourceError&) {
    }
  }
  return v;
}

SemilocalVerdict is_gr_semilocal(const GradedRing& r, std::uint64_t budget) {
  SemilocalVerdict v;
  const RadicalReport j = rad_gr_ring(r, budget);
  const GradedRing q = quotient_ring(r, j.subspace.space());
  v.via_quotient = q.dim() == 0 || is_gr_semisimple(q, budget).semisimple;
  v.via_components = true;
  for (auto e : r.support_objects()) {
    const GradedRing a = component_algebra(r, e);
    const Subspace rad_a = rad_gr_ring(a, budget).subspace.space();
    const GradedRing top = quotient_ring(a, rad_a);
    const bool ok = top.dim() == 0 || algebra_semisimple(top, budget);
    v.per_object[e] = ok;
    v.via_components = v.via_components && ok;
  }
  if (v.via_quotient != v.via_components)
    throw ConsistencyError("gr-semilocal verdicts disagree between the quotient and the components");
  v.semilocal = v.via_quotient;
  return v;
}

// ---------------------------------------------------------------- Fitting

std::optional<Matrix> gr_inverse_endomorphism(const GradedModule& m, const Matrix& g, Morphism gamma) {
  const Groupoid& gr = m.ring().groupoid();
  const Morphism e = gr.target(gamma);
  const auto hs = hom_gamma(m, m, gr.inverse(gamma));
  if (hs.empty()) return std::nullopt;
  const Matrix p = component_projection(m, e);
  const std::size_t n2 = m.dim() * m.dim();
  Matrix sys(m.prime(), 0, 2 * n2);
  for (const auto& h : hs) {
    Vector row = flatten(g * h);
    Vector other = flatten(h * g);
    row.insert(row.end(), other.begin(), other.end());
    sys.append_row(row);
  }
  Vector rhs = flatten(p);
  const Vector rhs2 = rhs;
  rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());
  auto c = solve_left(sys, rhs);
  if (!c) return std::nullopt;
  Matrix h(m.prime(), m.dim(), m.dim());
  for (std::size_t k = 0; k < hs.size(); ++k)
    if ((*c)[k] != 0) h = h + hs[k].scaled((*c)[k]);
  return h;
}

FittingResult fitting(const GradedModule& m, const Matrix& g, Morphism gamma) {
  const Groupoid& gr = m.ring().groupoid();
  if (gr.source(gamma) != gr.target(gamma))
    throw InputError("Fitting needs a degree gamma with d(gamma) = r(gamma)");
  if (!is_hom_of_degree(m, m, g, gamma)) throw InputError("g is not a module endomorphism of degree " + gr.name(gamma));
  const Morphism e = gr.target(gamma);
  FittingResult res;
  const std::size_t n = m.dim();
  if (n == 0) {
    res.kernel = res.image = GradedSubspace(Subspace::zero(m.prime(), 0), m.degrees());
    res.direct_sum = res.bijective_on_image = res.injective_on_component = res.surjective_onto_component = true;
    return res;
  }
  Matrix power = g;
  Subspace ker = left_kernel(power), im = row_space(power);
  std::size_t k = 1;
  while (true) {
    Matrix next = power * g;
    Subspace ker2 = left_kernel(next), im2 = row_space(next);
    if (ker2 == ker && im2 == im) break;
    power = std::move(next);
    ker = std::move(ker2);
    im = std::move(im2);
    if (++k > n + 1) throw ConsistencyError("Fitting powers did not stabilize");
  }
  res.n = k;
  res.kernel = GradedSubspace(ker, m.degrees());
  res.image = GradedSubspace(im, m.degrees());
  res.direct_sum = ker.intersect(im).dim() == 0 && ker.dim() + im.dim() == n;
  const Subspace moved = im.dim() == 0 ? im : Subspace::span(im.basis() * g);
  res.bijective_on_image = moved == im;

  const Subspace me = component_module(m, e).space();
  res.injective_on_component = left_kernel(g).intersect(me).dim() == 0;
  res.surjective_onto_component = row_space(g) == me;
  if (res.injective_on_component || res.surjective_onto_component) {
    res.inverse = gr_inverse_endomorphism(m, g, gamma);
    if (!res.inverse) throw ConsistencyError("g is bijective on M(e) but has no graded inverse");
  }
  return res;
}

// ---------------------------------------------------------------- superfluous / essential

bool superfluous_in_lattice(const SubmoduleLattice& lat, const Subspace& n) {
  const Subspace& top = lat.elements.back();
  for (const auto& x : lat.elements)
    if (!(x == top) && (n + x) == top) return false;
  return true;
}

bool essential_in_lattice(const SubmoduleLattice& lat, const Subspace& n) {
  for (const auto& x : lat.elements)
    if (x.dim() > 0 && n.intersect(x).dim() == 0) return false;
  return true;
}

namespace {

template <class Fast, class Oracle>
PredicateVerdict predicate(const GradedModule& m, const Subspace& n, std::uint64_t budget, Fast fast, Oracle oracle) {
  submodule(m, n);
  PredicateVerdict v;
  v.value = fast();
  if (lattice_within_budget(m, budget)) {
    try {
      const SubmoduleLattice lat = submodule_lattice(m, budget);
      if (oracle(lat) != v.value) throw ConsistencyError("lattice oracle disagrees with the containment test");
      v.verified = true;
    } catch (const ResourceError&) {
    }
  }
  return v;
}

}  // namespace

PredicateVerdict is_gr_superfluous(const GradedModule& m, const Subspace& n, std::uint64_t budget) {
  return predicate(
      m, n, budget, [&] { return rad_gr_module(m, budget).space().contains(n); },
      [&](const SubmoduleLattice& lat) { return superfluous_in_lattice(lat, n); });
}

PredicateVerdict is_gr_essential(const GradedModule& m, const Subspace& n, std::uint64_t budget) {
  return predicate(
      m, n, budget, [&] { return n.contains(soc_gr_module(m, budget).space()); },
      [&](const SubmoduleLattice& lat) { return essential_in_lattice(lat, n); });
}

// ---------------------------------------------------------------- Baer

BaerResult baer_gr_injective(const GradedModule& e, std::uint64_t budget) {
  const GradedRing& r = e.ring();
  const GradedModule reg = regular_module(e.ring_ptr());
  const SubmoduleLattice lat = submodule_lattice(reg, budget);
  BaerResult res;
  const std::size_t ng = r.groupoid().size();
  for (const auto& u : lat.elements) {
    ++res.ideals_checked;
    if (u.dim() == 0) continue;
    const GradedModule um = submodule_as_module(reg, u);
    for (std::uint32_t gid = 0; gid < ng; ++gid) {
      const Morphism gamma{gid};
      const auto hs = hom_gamma(um, e, gamma);
      if (hs.empty()) continue;
      const auto ks = hom_gamma(reg, e, gamma);
      Matrix sys(r.prime(), 0, u.dim() * e.dim());
      for (const auto& k : ks) sys.append_row(flatten(u.basis() * k));
      for (const auto& h : hs) {
        const bool extends = !ks.empty() && solve_left(sys, flatten(h)).has_value();
        if (!extends) {
          res.injective = false;
          res.witness_ideal = u;
          res.witness_degree = gamma;
          res.witness_map = h;
          return res;
        }
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------- projective category rings

CategoryRadicalCheck projective_category_radical_check(const GradedRing& a, const std::vector<AlgebraModule>& modules,
                                                       std::uint64_t budget) {
  const GradedRing rc = build_category_ring(a, modules);
  const RadicalReport rep = rad_gr_ring(rc, budget);
  const Subspace rad_a = rad_gr_ring(a, budget).subspace.space();
  const std::uint32_t p = a.prime();
  const std::size_t k = modules.size();
  CategoryRadicalCheck out;
  out.engine = rep.engine;
  std::vector<Subspace> rad_m;
  for (const auto& m : modules) {
    std::vector<Vector> vs;
    for (std::size_t b = 0; b < rad_a.dim(); ++b) {
      Matrix act(p, m.dim(), m.dim());
      for (std::size_t t = 0; t < a.dim(); ++t)
        if (rad_a.basis()(b, t) != 0) act = act + m.action[t].scaled(rad_a.basis()(b, t));
      for (std::size_t i = 0; i < m.dim(); ++i) vs.push_back(act.row_vector(i));
    }
    rad_m.push_back(Subspace::span(p, m.dim(), vs));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Morphism deg{static_cast<std::uint32_t>(i * k + j)};
      const auto idx = rc.indices_of_degree(deg);
      // Same basis as build_category_ring: echelon basis of Hom(M_j, M_i).
      std::vector<Vector> flat;
      for (const auto& h : algebra_module_homs(a, modules[j], modules[i])) flat.push_back(flatten(h));
      const Subspace hom = Subspace::span(p, modules[j].dim() * modules[i].dim(), flat);
      Matrix cond(p, hom.dim(), modules[j].dim() * modules[i].dim());
      for (std::size_t t = 0; t < hom.dim(); ++t) {
        const Matrix g = unflatten(p, modules[j].dim(), modules[i].dim(), hom.basis().row(t));
        for (std::size_t row = 0; row < g.rows(); ++row) {
          const Vector red = rad_m[i].reduce(g.row_vector(row));
          for (std::size_t c = 0; c < red.size(); ++c) cond.at(t, row * modules[i].dim() + c) = red[c];
        }
      }
      const Subspace coeffs = left_kernel(cond);
      std::vector<Vector> sup;
      for (std::size_t b = 0; b < coeffs.dim(); ++b) {
        Vector v(rc.dim(), 0);
        for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = coeffs.basis()(b, t);
        sup.push_back(std::move(v));
      }
      CategoryComponentCheck c{deg, rep.subspace.space().intersect(rc.component(deg)),
                               Subspace::span(p, rc.dim(), sup)};
      out.equal = out.equal && c.engine == c.superfluous;
      out.components.push_back(std::move(c));
    }
  return out;
}

// ---------------------------------------------------------------- Dedekind finiteness

std::vector<DedekindFailure> dedekind_failures(const GradedRing& r, std::uint64_t budget) {
  const Groupoid& g = r.groupoid();
  std::vector<DedekindFailure> out;
  for (auto gamma : r.support()) {
    if (g.is_object(gamma)) continue;
    const auto ia = r.indices_of_degree(gamma);
    const auto ib = r.indices_of_degree(g.inverse(gamma));
    if (ib.empty()) continue;
    if (saturating_pow(r.prime(), ia.size() + ib.size()) > budget)
      throw ResourceError("Dedekind search at " + g.name(gamma) + " exceeds the budget");
    const Vector ur = r.unit(g.target(gamma)), ud = r.unit(g.source(gamma));
    auto embed = [&](const std::vector<std::size_t>& idx, const Vector& c) {
      Vector v(r.dim(), 0);
      for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = c[t];
      return v;
    };
    std::vector<Vector> bs;
    for_each_vector(r.prime(), ib.size(), budget, [&](const Vector& c) { bs.push_back(embed(ib, c)); });
    for_each_vector(r.prime(), ia.size(), budget, [&](const Vector& c) {
      const Vector a = embed(ia, c);
      for (const auto& b : bs)
        if (r.multiply(a, b) == ur && r.multiply(b, a) != ud) out.push_back({gamma, a, b});
    });
  }
  return out;
}

}  // namespace grgrad
