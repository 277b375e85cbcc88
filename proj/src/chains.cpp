#include "grgrad/chains.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "grgrad/errors.hpp"

namespace grgrad {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw InputError("bad " + what + " '" + s + "'");
  return v;
}

/// Parses "w*K+M"-style sums in Cantor normal form (omega terms first).
std::pair<std::size_t, std::size_t> parse_ordinal_sum(const std::string& text) {
  std::size_t k = 0, m = 0;
  bool seen_finite = false, seen_omega = false;
  for (const auto& term : split(text, '+')) {
    if (term.empty()) throw InputError("empty term in ordinal '" + text + "'");
    if (term[0] == 'w') {
      if (seen_finite || seen_omega) throw InputError("ordinal '" + text + "' is not in the form w*K+M");
      seen_omega = true;
      if (term == "w") {
        k = 1;
      } else if (term.size() > 2 && term[1] == '*') {
        k = parse_count(term.substr(2), "omega coefficient");
      } else {
        throw InputError("bad ordinal term '" + term + "'");
      }
    } else {
      if (seen_finite) throw InputError("ordinal '" + text + "' is not in the form w*K+M");
      seen_finite = true;
      m = parse_count(term, "ordinal term");
    }
  }
  return {k, m};
}

}  // namespace

// ---------------------------------------------------------------- elements

std::string ordinal_name(const OrdinalElement& x) {
  if (x.a == 0) return std::to_string(x.n);
  std::string s = x.a == 1 ? "w" : "w*" + std::to_string(x.a);
  if (x.n > 0) s += "+" + std::to_string(x.n);
  return s;
}

OrdinalElement parse_ordinal_element(const std::string& s) {
  const auto [k, m] = parse_ordinal_sum(trim(s));
  return {k, m};
}

// ---------------------------------------------------------------- PosetSpec

PosetSpec PosetSpec::from_poset(Poset p) {
  p.validate();
  PosetSpec s;
  s.kind = Kind::Finite;
  s.finite = std::move(p);
  return s;
}

PosetSpec PosetSpec::ordinal(std::size_t k, std::size_t m, bool reversed) {
  PosetSpec s;
  s.kind = Kind::Ordinal;
  s.omega = k;
  s.tail = m;
  s.reversed = reversed;
  return s;
}

PosetSpec PosetSpec::parse(const std::string& raw) {
  const std::string text = trim(raw);
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("poset descriptor needs a 'finite:' or 'ordinal:' prefix");
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (kind == "ordinal") {
    auto parts = split(body, ':');
    if (parts.empty() || parts.size() > 2) throw InputError("bad ordinal descriptor '" + text + "'");
    bool rev = false;
    if (parts.size() == 2) {
      if (parts[1] != "reversed") throw InputError("unknown ordinal modifier '" + parts[1] + "'");
      rev = true;
    }
    const auto [k, m] = parse_ordinal_sum(parts[0]);
    return ordinal(k, m, rev);
  }
  if (kind != "finite") throw InputError("unknown poset kind '" + kind + "'");
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  auto label_index = [&](const std::string& l) {
    if (l.empty()) throw InputError("empty element in '" + text + "'");
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
    labels.push_back(l);
    return labels.size() - 1;
  };
  if (!trim(body).empty()) {
    for (const auto& item : split(body, ',')) {
      const auto chain = split(item, '<');
      std::size_t prev = label_index(chain.front());
      for (std::size_t t = 1; t < chain.size(); ++t) {
        const std::size_t cur = label_index(chain[t]);
        covers.emplace_back(prev, cur);
        prev = cur;
      }
    }
  }
  return from_poset(Poset::from_hasse(labels, covers));
}

bool PosetSpec::is_total() const {
  return kind == Kind::Ordinal || finite.is_total();
}

std::string PosetSpec::to_string() const {
  if (kind == Kind::Ordinal) {
    std::string s = "ordinal:" + ordinal_name({omega, tail});
    if (reversed) s += ":reversed";
    return s;
  }
  std::string s = "finite:";
  bool first = true;
  auto emit = [&](const std::string& item) {
    if (!first) s += ",";
    s += item;
    first = false;
  };
  const std::size_t n = finite.size();
  std::vector<bool> touched(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !finite.leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && finite.leq[i][k] && finite.leq[k][j]) cover = false;
      if (cover) {
        emit(finite.labels[i] + "<" + finite.labels[j]);
        touched[i] = touched[j] = true;
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (!touched[i]) emit(finite.labels[i]);
  return s;
}

PosetSpec PosetSpec::opposite() const {
  if (kind == Kind::Ordinal) return ordinal(omega, tail, !reversed);
  Poset p = finite;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) p.leq[i][j] = finite.leq[j][i];
  return from_poset(std::move(p));
}

bool PosetSpec::contains(const OrdinalElement& x) const {
  if (kind != Kind::Ordinal) return false;
  return x.a < omega || (x.a == omega && x.n < tail);
}

bool PosetSpec::less(const OrdinalElement& x, const OrdinalElement& y) const {
  return reversed ? y < x : x < y;
}

// ---------------------------------------------------------------- classification

std::string to_string(ChainSide s) { return s == ChainSide::Right ? "right" : "left"; }
std::string to_string(ChainLevel l) {
  switch (l) {
    case ChainLevel::Gr: return "gr";
    case ChainLevel::StronglyGamma0: return "strongly-Gamma0";
    case ChainLevel::Gamma0: return "Gamma0";
  }
  return "";
}
std::string to_string(ChainCondition c) { return c == ChainCondition::Artinian ? "artinian" : "noetherian"; }

int criterion_item(ChainSide s, ChainCondition c) {
  return 1 + (s == ChainSide::Left ? 2 : 0) + (c == ChainCondition::Noetherian ? 1 : 0);
}

bool has_infinite_chain(const PosetSpec& i, int item) {
  if (item < 1 || item > 4) throw InputError("criterion item must be 1..4");
  if (i.is_finite()) return false;
  // Chains bounded by an element need an element at or above w (ordinal order).
  const bool has_limit = i.omega >= 2 || i.tail >= 1;
  if (!i.reversed) {
    switch (item) {
      case 1: return true;
      case 4: return has_limit;
      default: return false;
    }
  }
  switch (item) {
    case 3: return true;
    case 2: return has_limit;
    default: return false;
  }
}

namespace {

const char* item_shape(int item) {
  switch (item) {
    case 1: return "i0 < j1 < j2 < ...";
    case 2: return "i0 < ... < j2 < j1";
    case 3: return "... < i2 < i1 < j0";
    default: return "i1 < i2 < ... < j0";
  }
}

bool coefficient_flag(const CoefficientFlags& a, ChainSide s, ChainCondition c) {
  if (s == ChainSide::Right) return c == ChainCondition::Artinian ? a.right_artinian : a.right_noetherian;
  return c == ChainCondition::Artinian ? a.left_artinian : a.left_noetherian;
}

}  // namespace

ChainVerdict classify_ut(const PosetSpec& i, const CoefficientFlags& a) {
  ChainVerdict v;
  v.poset = i;
  const bool total = i.is_total();
  v.complete = total;
  for (ChainSide s : {ChainSide::Right, ChainSide::Left})
    for (ChainCondition c : {ChainCondition::Artinian, ChainCondition::Noetherian}) {
      const int item = criterion_item(s, c);
      const bool chain = has_infinite_chain(i, item);
      const bool flag = coefficient_flag(a, s, c);
      VerdictEntry g0;
      g0.holds = flag && !chain;
      g0.certain = !g0.holds || total;
      if (chain) {
        g0.item = item;
        g0.witness = "infinite chain " + std::string(item_shape(item)) + ": " +
                     witness_chain(i, item, 3).to_string() + " ...";
      } else if (!flag) {
        g0.witness = "coefficient ring is not " + to_string(s) + " " + to_string(c);
      }
      VerdictEntry strong = g0;
      if (g0.holds && !i.is_finite()) {
        strong.holds = false;
        strong.certain = true;
        strong.witness = "component gr-lengths are infinite or unbounded over infinitely many objects";
      }
      VerdictEntry gr = strong;
      if (strong.holds && !i.is_finite()) {
        gr.holds = false;
        gr.witness = "infinite Gamma0'-support";
      }
      v.at(s, ChainLevel::Gamma0, c) = g0;
      v.at(s, ChainLevel::StronglyGamma0, c) = strong;
      v.at(s, ChainLevel::Gr, c) = gr;
    }
  return v;
}

// ---------------------------------------------------------------- witnesses

std::string WitnessChain::to_string() const {
  const std::string sep = ascending ? " < " : " > ";
  std::string s;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    if (k) s += sep;
    s += ideals[k];
  }
  return s;
}

WitnessChain witness_chain(const PosetSpec& i, int item, std::size_t length, const std::optional<std::string>& base) {
  if (!has_infinite_chain(i, item))
    throw InputError("item " + std::to_string(item) + " does not fail on " + i.to_string());
  if (length == 0) throw InputError("witness length must be positive");
  WitnessChain w;
  w.item = item;
  w.side = item <= 2 ? ChainSide::Right : ChainSide::Left;
  w.ascending = item == 2 || item == 4;

  // Items 1 and 3 run upward from the base inside one w-block; items 2 and 4
  // run through the block just below a base at or above w (ordinal order).
  const bool upward = item == 1 || item == 3;
  OrdinalElement b = upward ? OrdinalElement{0, 0} : OrdinalElement{1, 0};
  if (base) b = parse_ordinal_element(*base);
  if (!i.contains(b)) throw InputError("base " + ordinal_name(b) + " is not an element of " + i.to_string());
  std::vector<OrdinalElement> chain;
  if (upward) {
    if (b.a >= i.omega) throw InputError("no infinite chain next to base " + ordinal_name(b));
    for (std::size_t k = 1; k <= length; ++k) chain.push_back({b.a, b.n + k});
  } else {
    if (b.a == 0) throw InputError("base " + ordinal_name(b) + " has no infinite chain below it");
    for (std::size_t k = 0; k < length; ++k) chain.push_back({b.a - 1, k});
  }
  w.base = ordinal_name(b);
  for (const auto& x : chain) w.indices.push_back(ordinal_name(x));

  // Truncation: the finite chain on the base and the indices.
  std::vector<OrdinalElement> elems = chain;
  elems.push_back(b);
  std::sort(elems.begin(), elems.end(), [&](const auto& x, const auto& y) { return i.less(x, y); });
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    labels.push_back(ordinal_name(elems[k]));
    if (k) covers.emplace_back(k - 1, k);
  }
  w.truncation = labels;
  const GradedRing r = build_ut(field_algebra(2), Poset::from_hasse(labels, covers));
  const std::size_t n = labels.size();
  auto pos = [&](const OrdinalElement& x) {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), x) - elems.begin());
  };
  std::vector<Subspace> ideals;
  for (const auto& x : chain) {
    const std::size_t row = w.side == ChainSide::Right ? pos(b) : pos(x);
    const std::size_t col = w.side == ChainSide::Right ? pos(x) : pos(b);
    const auto idx = r.indices_of_degree(Morphism{static_cast<std::uint32_t>(row * n + col)});
    if (idx.size() != 1) throw ConsistencyError("truncation is missing E(" + labels[row] + "," + labels[col] + ")");
    const std::string e = "E(" + labels[row] + "," + labels[col] + ")";
    w.ideals.push_back(w.side == ChainSide::Right ? e + "R" : "R" + e);
    const Side side = w.side == ChainSide::Right ? Side::Right : Side::Left;
    ideals.push_back(ideal_closure(r, {unit_vector(r.dim(), idx[0])}, side));
    w.ideal_dims.push_back(ideals.back().dim());
  }
  w.certified = true;
  for (std::size_t k = 0; k + 1 < ideals.size(); ++k) {
    const Subspace& small = w.ascending ? ideals[k] : ideals[k + 1];
    const Subspace& big = w.ascending ? ideals[k + 1] : ideals[k];
    if (!big.contains(small) || big.dim() == small.dim()) w.certified = false;
  }
  return w;
}

// ---------------------------------------------------------------- strong profiles

FamilyProfile FamilyProfile::constant_profile(std::size_t c) {
  FamilyProfile p;
  p.tail = Tail::Constant;
  p.constant = c;
  return p;
}

FamilyProfile FamilyProfile::identity_profile() {
  FamilyProfile p;
  p.tail = Tail::Identity;
  return p;
}

FamilyProfile FamilyProfile::finite_profile(std::vector<std::size_t> lengths) {
  FamilyProfile p;
  for (std::size_t k = 0; k < lengths.size(); ++k) p.exceptions[k] = ComponentLength::finite(lengths[k]);
  return p;
}

ComponentLength FamilyProfile::at(std::size_t n) const {
  if (auto it = exceptions.find(n); it != exceptions.end()) return it->second;
  switch (tail) {
    case Tail::None: return ComponentLength::finite(0);
    case Tail::Constant: return ComponentLength::finite(constant);
    case Tail::Identity: return ComponentLength::finite(n);
  }
  return ComponentLength::finite(0);
}

StrongVerdict strong_classify(const FamilyProfile& profile) {
  StrongVerdict v;
  v.gamma0_artinian = v.gamma0_noetherian = true;
  for (const auto& [n, c] : profile.exceptions) {
    v.gamma0_artinian = v.gamma0_artinian && c.artinian;
    v.gamma0_noetherian = v.gamma0_noetherian && c.noetherian;
  }
  const bool bounded_tail = profile.tail != FamilyProfile::Tail::Identity;
  const bool finite_support =
      profile.tail == FamilyProfile::Tail::None ||
      (profile.tail == FamilyProfile::Tail::Constant && profile.constant == 0);
  v.strongly_artinian = v.gamma0_artinian && bounded_tail;
  v.strongly_noetherian = v.gamma0_noetherian && bounded_tail;
  v.gr_artinian = v.gamma0_artinian && finite_support;
  v.gr_noetherian = v.gamma0_noetherian && finite_support;
  return v;
}

// ---------------------------------------------------------------- tight chains

bool is_tight(const GradedModule& m, const std::vector<Subspace>& chain, bool descending) {
  for (const auto& s : chain) submodule(m, s);
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const Subspace& big = descending ? chain[k] : chain[k + 1];
    const Subspace& small = descending ? chain[k + 1] : chain[k];
    if (!big.contains(small)) throw InputError("chain is not nested at step " + std::to_string(k + 1));
  }
  std::vector<std::vector<Morphism>> profiles;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const Subspace& top = descending ? chain[k] : chain[k + 1];
    const Subspace& bottom = descending ? chain[k + 1] : chain[k];
    profiles.push_back(gamma0_support(m, top, bottom));
  }
  for (std::size_t k = 0; k + 1 < profiles.size(); ++k)
    if (!std::includes(profiles[k].begin(), profiles[k].end(), profiles[k + 1].begin(), profiles[k + 1].end()))
      return false;
  return true;
}

}  // namespace grgrad
