#include "dp6/brauer.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dp6::brauer {

namespace {

bool same(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || *a == *b; }

}  // namespace

// Construction without the reciprocity check, for operations that preserve it.
struct BrauerAccess {
  static BrauerClass make(AlgebraPtr algebra, std::vector<QZ> invariants) {
    return BrauerClass(BrauerClass::Unchecked{}, std::move(algebra), std::move(invariants));
  }
};

GlobalFieldModel::GlobalFieldModel(std::vector<std::string> places) : places_(std::move(places)) {
  if (places_.empty()) throw std::invalid_argument("model needs at least one place");
  std::set<std::string> seen;
  for (const auto& p : places_) {
    if (p.empty()) throw std::invalid_argument("place labels must be non-empty");
    if (p.find(':') != std::string::npos) throw std::invalid_argument("place label \"" + p + "\" contains ':'");
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate place label \"" + p + "\"");
  }
}

std::optional<std::size_t> GlobalFieldModel::find(std::string_view label) const {
  for (std::size_t v = 0; v < places_.size(); ++v)
    if (places_[v] == label) return v;
  return std::nullopt;
}

EtaleAlgebra::EtaleAlgebra(GlobalFieldModel model, std::vector<Component> components)
    : model_(std::move(model)), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("etale algebra needs at least one component");
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    if (comp.degree < 1) throw std::invalid_argument("component degree must be positive");
    if (comp.splitting.size() != model_.size())
      throw std::invalid_argument("component " + std::to_string(c) + " must give a splitting for every place");
    for (std::size_t v = 0; v < model_.size(); ++v) {
      const auto& parts = comp.splitting[v];
      if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](int d) { return d < 1; }))
        throw std::invalid_argument("local degrees must be positive");
      if (std::accumulate(parts.begin(), parts.end(), 0) != comp.degree)
        throw std::invalid_argument("local degrees over " + model_.label(v) + " do not sum to the degree of component " +
                                    std::to_string(c));
      for (std::size_t s = 0; s < parts.size(); ++s) places_.push_back(Place{c, v, s, parts[s]});
    }
    degree_ += comp.degree;
  }
}

EtaleAlgebra EtaleAlgebra::base_field(const GlobalFieldModel& model) {
  return EtaleAlgebra(model, {Component{1, std::vector<std::vector<int>>(model.size(), std::vector<int>{1})}});
}

std::string EtaleAlgebra::place_id(std::size_t i) const {
  const Place& p = places_.at(i);
  if (is_base_field()) return model_.label(p.base);
  return std::to_string(p.component) + ":" + model_.label(p.base) + ":" + std::to_string(p.slot);
}

std::optional<std::size_t> EtaleAlgebra::find_place(std::string_view id) const {
  for (std::size_t i = 0; i < places_.size(); ++i)
    if (place_id(i) == id) return i;
  return std::nullopt;
}

std::vector<std::size_t> EtaleAlgebra::places_over(std::size_t base) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < places_.size(); ++i)
    if (places_[i].base == base) out.push_back(i);
  return out;
}

std::vector<std::size_t> EtaleAlgebra::places_of_component(std::size_t component) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < places_.size(); ++i)
    if (places_[i].component == component) out.push_back(i);
  return out;
}

namespace {

std::vector<int> component_degrees(const EtaleAlgebra& a) {
  std::vector<int> d;
  for (const auto& c : a.components()) d.push_back(c.degree);
  return d;
}

}  // namespace

bool is_quadratic_shape(const EtaleAlgebra& k) {
  const auto d = component_degrees(k);
  return d == std::vector<int>{2} || d == std::vector<int>{1, 1};
}

bool is_cubic_shape(const EtaleAlgebra& l) {
  const auto d = component_degrees(l);
  return d == std::vector<int>{3} || d == std::vector<int>{1, 2} || d == std::vector<int>{1, 1, 1};
}

std::string describe_shape(const EtaleAlgebra& a) {
  const auto d = component_degrees(a);
  if (d.size() == 1) return "field";
  if (d == std::vector<int>{1, 1}) return "FxF";
  if (d == std::vector<int>{1, 2}) return "FxE";
  if (d == std::vector<int>{1, 1, 1}) return "FxFxF";
  std::string s;
  for (int x : d) s += (s.empty() ? "" : "x") + std::to_string(x);
  return s;
}

int Embedding::relative_degree(std::size_t w) const {
  const int up = upper->places()[w].local_degree;
  const int down = lower->places()[below[w]].local_degree;
  if (up % down != 0) throw std::logic_error("embedding: local degrees are not a tower");
  return up / down;
}

Embedding base_embedding(const AlgebraPtr& upper) {
  auto base = std::make_shared<const EtaleAlgebra>(EtaleAlgebra::base_field(upper->model()));
  std::vector<std::size_t> below;
  for (const auto& p : upper->places()) below.push_back(p.base);
  return Embedding{std::move(base), upper, std::move(below)};
}

CompositeAlgebra compose_etale(const AlgebraPtr& k, const AlgebraPtr& l) {
  if (!(k->model() == l->model())) throw std::invalid_argument("compose_etale: K and L live on different models");
  if (!is_quadratic_shape(*k)) throw std::invalid_argument("compose_etale: K must be quadratic ([2] or [1,1])");
  if (!is_cubic_shape(*l)) throw std::invalid_argument("compose_etale: L must be cubic ([3], [1,2] or [1,1,1])");

  const auto& model = k->model();
  auto find_place = [](const EtaleAlgebra& a, std::size_t comp, std::size_t base, std::size_t slot) {
    const auto& ps = a.places();
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (ps[i].component == comp && ps[i].base == base && ps[i].slot == slot) return i;
    throw std::logic_error("compose_etale: missing place");
  };

  std::vector<Component> components;
  std::vector<std::size_t> over_k, over_l;
  for (std::size_t ci = 0; ci < k->component_count(); ++ci)
    for (std::size_t cj = 0; cj < l->component_count(); ++cj) {
      const auto& kc = k->components()[ci];
      const auto& lc = l->components()[cj];
      Component comp{kc.degree * lc.degree, {}};
      for (std::size_t v = 0; v < model.size(); ++v) {
        std::vector<int> parts;
        for (std::size_t sa = 0; sa < kc.splitting[v].size(); ++sa)
          for (std::size_t sb = 0; sb < lc.splitting[v].size(); ++sb) {
            const int a = kc.splitting[v][sa];
            const int b = lc.splitting[v][sb];
            const int copies = std::gcd(a, b);
            for (int c = 0; c < copies; ++c) {
              parts.push_back(std::lcm(a, b));
              over_k.push_back(find_place(*k, ci, v, sa));
              over_l.push_back(find_place(*l, cj, v, sb));
            }
          }
        comp.splitting.push_back(std::move(parts));
      }
      components.push_back(std::move(comp));
    }
  auto kl = std::make_shared<const EtaleAlgebra>(model, std::move(components));
  return CompositeAlgebra{k, l, std::move(kl), std::move(over_k), std::move(over_l)};
}

BrauerClass::BrauerClass(AlgebraPtr algebra, std::vector<QZ> invariants)
    : algebra_(std::move(algebra)), invariants_(std::move(invariants)) {
  if (!algebra_) throw std::invalid_argument("BrauerClass: null algebra");
  if (invariants_.size() != algebra_->places().size())
    throw std::invalid_argument("BrauerClass: expected " + std::to_string(algebra_->places().size()) + " invariants");
  std::vector<QZ> sums(algebra_->component_count());
  for (std::size_t i = 0; i < invariants_.size(); ++i) sums[algebra_->places()[i].component] += invariants_[i];
  for (std::size_t c = 0; c < sums.size(); ++c)
    if (!sums[c].is_zero())
      throw std::invalid_argument("BrauerClass: invariants of component " + std::to_string(c) + " sum to " +
                                  sums[c].to_string() + ", not 0");
}

BrauerClass BrauerClass::zero(AlgebraPtr algebra) {
  const std::size_t n = algebra->places().size();
  return BrauerClass(std::move(algebra), std::vector<QZ>(n));
}

bool BrauerClass::is_zero() const {
  return std::all_of(invariants_.begin(), invariants_.end(), [](const QZ& q) { return q.is_zero(); });
}

std::string BrauerClass::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (invariants_[i].is_zero()) continue;
    if (!s.empty()) s += ", ";
    s += algebra_->place_id(i) + "=" + invariants_[i].to_string();
  }
  return s.empty() ? "0" : s;
}

namespace {

void require_same_algebra(const BrauerClass& a, const BrauerClass& b) {
  if (!same(a.algebra_ptr(), b.algebra_ptr())) throw std::invalid_argument("Brauer classes over different algebras");
}

}  // namespace

BrauerClass operator+(const BrauerClass& a, const BrauerClass& b) {
  require_same_algebra(a, b);
  std::vector<QZ> inv(a.invariants_.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = a.invariants_[i] + b.invariants_[i];
  return BrauerAccess::make(a.algebra_, std::move(inv));
}

BrauerClass operator-(const BrauerClass& a) { return -1 * a; }

BrauerClass operator*(std::int64_t k, const BrauerClass& a) {
  std::vector<QZ> inv(a.invariants_.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = k * a.invariants_[i];
  return BrauerAccess::make(a.algebra_, std::move(inv));
}

BrauerClass restriction(const BrauerClass& x, const Embedding& embedding) {
  if (!same(x.algebra_ptr(), embedding.lower)) throw std::invalid_argument("restriction: class does not live on the base of the tower");
  std::vector<QZ> inv(embedding.upper->places().size());
  for (std::size_t w = 0; w < inv.size(); ++w) {
    const QZ& below = x.at(embedding.below[w]);
    if (!below.is_zero()) inv[w] = embedding.relative_degree(w) * below;
  }
  return BrauerAccess::make(embedding.upper, std::move(inv));
}

BrauerClass corestriction(const BrauerClass& x, const Embedding& embedding) {
  if (!same(x.algebra_ptr(), embedding.upper)) throw std::invalid_argument("corestriction: class does not live on the top of the tower");
  std::vector<QZ> inv(embedding.lower->places().size());
  for (std::size_t w = 0; w < x.invariants().size(); ++w) inv[embedding.below[w]] += x.at(w);
  return BrauerAccess::make(embedding.lower, std::move(inv));
}

BrauerClass corestriction(const BrauerClass& x) { return corestriction(x, base_embedding(x.algebra_ptr())); }

std::vector<std::int64_t> index(const BrauerClass& x) {
  std::vector<std::int64_t> out(x.algebra().component_count(), 1);
  for (std::size_t i = 0; i < x.invariants().size(); ++i) {
    auto& slot = out[x.algebra().places()[i].component];
    slot = std::lcm(slot, x.at(i).den());
  }
  return out;
}

namespace {

PlacePermutation identity_permutation(std::size_t n) {
  PlacePermutation h;
  h.image.resize(n);
  std::iota(h.image.begin(), h.image.end(), std::size_t{0});
  return h;
}

std::size_t place_index(const EtaleAlgebra& a, std::size_t comp, std::size_t base, std::size_t slot) {
  const auto& ps = a.places();
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (ps[i].component == comp && ps[i].base == base && ps[i].slot == slot) return i;
  throw std::logic_error("missing place");
}

}  // namespace

BrauerClass pushforward(const BrauerClass& x, const PlacePermutation& h) {
  validate_automorphism(x.algebra(), h);
  std::vector<QZ> inv(x.invariants().size());
  for (std::size_t u = 0; u < inv.size(); ++u) inv[h.image[u]] = x.at(u);
  return BrauerAccess::make(x.algebra_ptr(), std::move(inv));
}

BrauerClass k_conjugation_pushforward(const BrauerClass& x) {
  const EtaleAlgebra& k = x.algebra();
  if (!is_quadratic_shape(k)) throw std::invalid_argument("k_conjugation_pushforward: class is not over a quadratic algebra");
  PlacePermutation sigma = identity_permutation(k.places().size());
  for (std::size_t v = 0; v < k.model().size(); ++v) {
    if (k.component_count() == 2) {
      const std::size_t a = place_index(k, 0, v, 0), b = place_index(k, 1, v, 0);
      sigma.image[a] = b;
      sigma.image[b] = a;
    } else if (k.components()[0].splitting[v].size() == 2) {
      const std::size_t a = place_index(k, 0, v, 0), b = place_index(k, 0, v, 1);
      sigma.image[a] = b;
      sigma.image[b] = a;
    }
  }
  std::vector<QZ> inv(x.invariants().size());
  for (std::size_t u = 0; u < inv.size(); ++u) inv[sigma.image[u]] = x.at(u);
  return BrauerAccess::make(x.algebra_ptr(), std::move(inv));
}

void validate_automorphism(const EtaleAlgebra& l, const PlacePermutation& h) {
  const auto& ps = l.places();
  if (h.image.size() != ps.size()) throw std::invalid_argument("automorphism: wrong number of places");
  std::vector<bool> hit(ps.size(), false);
  std::vector<std::optional<std::size_t>> component_image(l.component_count());
  for (std::size_t u = 0; u < ps.size(); ++u) {
    const std::size_t t = h.image[u];
    if (t >= ps.size() || hit[t]) throw std::invalid_argument("automorphism: not a bijection of places");
    hit[t] = true;
    if (ps[t].base != ps[u].base) throw std::invalid_argument("automorphism: moves " + l.place_id(u) + " off its base place");
    if (ps[t].local_degree != ps[u].local_degree)
      throw std::invalid_argument("automorphism: changes the local degree at " + l.place_id(u));
    auto& ci = component_image[ps[u].component];
    if (ci && *ci != ps[t].component) throw std::invalid_argument("automorphism: splits a component");
    ci = ps[t].component;
  }
  for (std::size_t c = 0; c < component_image.size(); ++c)
    if (l.components()[c].degree != l.components()[*component_image[c]].degree)
      throw std::invalid_argument("automorphism: maps components of different degree");
}

std::vector<PlacePermutation> standard_l_automorphisms(const EtaleAlgebra& l) {
  std::vector<PlacePermutation> out;
  const std::size_t n = l.places().size();
  const auto degrees = component_degrees(l);
  if (degrees == std::vector<int>{3}) {
    const auto& splitting = l.components()[0].splitting;
    const bool galois = std::all_of(splitting.begin(), splitting.end(), [](const std::vector<int>& p) {
      return p == std::vector<int>{3} || p == std::vector<int>{1, 1, 1};
    });
    if (galois) {
      PlacePermutation rot = identity_permutation(n);
      for (std::size_t v = 0; v < l.model().size(); ++v)
        if (splitting[v].size() == 3)
          for (std::size_t s = 0; s < 3; ++s) rot.image[place_index(l, 0, v, s)] = place_index(l, 0, v, (s + 1) % 3);
      if (!(rot == identity_permutation(n))) out.push_back(rot);
    }
  } else if (degrees == std::vector<int>{1, 2}) {
    PlacePermutation conj = identity_permutation(n);
    for (std::size_t v = 0; v < l.model().size(); ++v)
      if (l.components()[1].splitting[v].size() == 2) {
        const std::size_t a = place_index(l, 1, v, 0), b = place_index(l, 1, v, 1);
        conj.image[a] = b;
        conj.image[b] = a;
      }
    if (!(conj == identity_permutation(n))) out.push_back(conj);
  } else if (degrees == std::vector<int>{1, 1, 1}) {
    for (const std::array<std::size_t, 3>& sigma : {std::array<std::size_t, 3>{1, 0, 2}, std::array<std::size_t, 3>{1, 2, 0}}) {
      PlacePermutation h = identity_permutation(n);
      for (std::size_t v = 0; v < l.model().size(); ++v)
        for (std::size_t c = 0; c < 3; ++c) h.image[place_index(l, c, v, 0)] = place_index(l, sigma[c], v, 0);
      out.push_back(h);
    }
  }
  return out;
}

std::vector<std::string> pair_violations(const CompositeAlgebra& algebras, const BrauerClass& b, const BrauerClass& q) {
  std::vector<std::string> out;
  if (!same(b.algebra_ptr(), algebras.k)) {
    out.push_back("B is not a class over K");
    return out;
  }
  if (!same(q.algebra_ptr(), algebras.l)) {
    out.push_back("Q is not a class over L");
    return out;
  }
  auto cor_vanishes = [](const BrauerClass& x) {
    std::vector<QZ> sums(x.algebra().model().size());
    for (std::size_t i = 0; i < x.invariants().size(); ++i) sums[x.algebra().places()[i].base] += x.at(i);
    return std::all_of(sums.begin(), sums.end(), [](const QZ& v) { return v.is_zero(); });
  };
  if (!cor_vanishes(b)) out.push_back("cor_{K/F}(B) ≠ 0");
  if (!cor_vanishes(q)) out.push_back("cor_{L/F}(Q) ≠ 0");
  if (!restriction(b, algebras.k_to_kl()).is_zero()) out.push_back("res_{KL/K}(B) ≠ 0");
  if (!restriction(q, algebras.l_to_kl()).is_zero()) out.push_back("res_{KL/L}(Q) ≠ 0");
  for (auto i : index(b))
    if (3 % i != 0) {
      out.push_back("ind(B) = " + std::to_string(i) + " does not divide 3");
      break;
    }
  for (auto i : index(q))
    if (2 % i != 0) {
      out.push_back("ind(Q) = " + std::to_string(i) + " does not divide 2");
      break;
    }
  return out;
}

bool validate_pair(const CompositeAlgebra& algebras, const BrauerClass& b, const BrauerClass& q) {
  return pair_violations(algebras, b, q).empty();
}

SurfaceData::SurfaceData(std::shared_ptr<const CompositeAlgebra> algebras, BrauerClass b, BrauerClass q,
                         std::vector<PlacePermutation> l_automorphisms)
    : algebras_(std::move(algebras)), b_(std::move(b)), q_(std::move(q)), l_automorphisms_(std::move(l_automorphisms)) {
  for (const auto& h : l_automorphisms_) validate_automorphism(*algebras_->l, h);
  const auto violations = pair_violations(*algebras_, b_, q_);
  if (!violations.empty()) throw std::invalid_argument("invalid surface data: " + violations.front());
}

SurfaceData::SurfaceData(Unchecked, std::shared_ptr<const CompositeAlgebra> algebras, BrauerClass b, BrauerClass q,
                         std::vector<PlacePermutation> l_automorphisms)
    : algebras_(std::move(algebras)), b_(std::move(b)), q_(std::move(q)), l_automorphisms_(std::move(l_automorphisms)) {}

SurfaceData SurfaceData::with_classes(BrauerClass b, BrauerClass q) const {
  return SurfaceData(algebras_, std::move(b), std::move(q), l_automorphisms_);
}

SurfaceData g_action(const Generator& g, const SurfaceData& s) {
  const SurfaceData::Unchecked trusted;
  if (g.kind == Generator::Kind::k_conjugation)
    return SurfaceData(trusted, s.algebras_, -s.b(), s.q(), s.l_automorphisms_);
  if (g.automorphism >= s.l_automorphisms().size())
    throw std::invalid_argument("g_action: automorphism " + std::to_string(g.automorphism) + " is not declared");
  return SurfaceData(trusted, s.algebras_, s.b(), pushforward(s.q(), s.l_automorphisms()[g.automorphism]),
                     s.l_automorphisms_);
}

std::vector<SurfaceData> orbit(const SurfaceData& s) {
  std::vector<Generator> generators{Generator::k_conjugation()};
  for (std::size_t i = 0; i < s.l_automorphisms().size(); ++i) generators.push_back(Generator::l_automorphism(i));
  std::vector<SurfaceData> out{s};
  std::set<std::pair<std::vector<QZ>, std::vector<QZ>>> seen{{s.b().invariants(), s.q().invariants()}};
  for (std::size_t next = 0; next < out.size(); ++next)
    for (const auto& g : generators) {
      SurfaceData t = g_action(g, out[next]);
      if (seen.insert({t.b().invariants(), t.q().invariants()}).second) out.push_back(std::move(t));
    }
  return out;
}

bool same_surface(const SurfaceData& s1, const SurfaceData& s2) {
  if (!(*s1.algebras().k == *s2.algebras().k) || !(*s1.algebras().l == *s2.algebras().l))
    throw std::invalid_argument("same_surface: surfaces must share identical K and L");
  for (const auto& t : orbit(s1))
    if (t.b() == s2.b() && t.q() == s2.q()) return true;
  return false;
}

bool has_rational_point(const SurfaceData& s) { return s.b().is_zero() && s.q().is_zero(); }

namespace {

// Numerator vectors (over `bound`) sorted lexicographically, which is also the
// order of the corresponding invariant vectors.
std::vector<BrauerClass> classes_from_numerators(const AlgebraPtr& algebra, std::int64_t bound,
                                                 std::vector<std::vector<std::int64_t>> numerators) {
  // Sort by the base-`bound` integer the numerators spell out, when it fits.
  const std::size_t n = algebra->places().size();
  bool packed = true;
  std::int64_t limit = 1;
  for (std::size_t i = 0; i < n && packed; ++i) {
    if (limit > std::numeric_limits<std::int64_t>::max() / bound) packed = false;
    limit *= bound;
  }
  if (packed) {
    std::vector<std::pair<std::int64_t, std::size_t>> keys;
    keys.reserve(numerators.size());
    for (std::size_t k = 0; k < numerators.size(); ++k) {
      std::int64_t key = 0;
      for (auto a : numerators[k]) key = key * bound + a;
      keys.emplace_back(key, k);
    }
    std::sort(keys.begin(), keys.end());
    std::vector<std::vector<std::int64_t>> sorted;
    sorted.reserve(numerators.size());
    for (const auto& [key, k] : keys) sorted.push_back(std::move(numerators[k]));
    numerators = std::move(sorted);
  } else {
    std::sort(numerators.begin(), numerators.end());
  }

  std::vector<QZ> values;
  for (std::int64_t a = 0; a < bound; ++a) values.emplace_back(a, bound);
  std::vector<BrauerClass> out;
  out.reserve(numerators.size());
  for (const auto& nums : numerators) {
    std::vector<QZ> inv;
    inv.reserve(nums.size());
    for (auto a : nums) inv.push_back(values[static_cast<std::size_t>(a)]);
    out.push_back(BrauerAccess::make(algebra, std::move(inv)));
  }
  return out;
}

}  // namespace

std::vector<BrauerClass> enumerate_classes(const AlgebraPtr& algebra, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("denominator bound must be positive");
  const auto& places = algebra->places();
  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> nums(places.size());
  std::vector<std::int64_t> sums(algebra->component_count(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == places.size()) {
      if (std::all_of(sums.begin(), sums.end(), [&](std::int64_t x) { return x % bound == 0; })) found.push_back(nums);
      return;
    }
    for (std::int64_t a = 0; a < bound; ++a) {
      nums[i] = a;
      sums[places[i].component] += a;
      rec(i + 1);
      sums[places[i].component] -= a;
    }
  };
  rec(0);
  return classes_from_numerators(algebra, bound, std::move(found));
}

std::vector<BrauerClass> enumerate_cor_trivial_classes(const AlgebraPtr& algebra, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("denominator bound must be positive");
  const auto& model = algebra->model();
  const auto& places = algebra->places();

  // Per base place: all numerator vectors over the places above it summing to 0 mod bound.
  std::vector<std::vector<std::size_t>> fibers;
  std::vector<std::vector<std::vector<std::int64_t>>> local_choices;
  for (std::size_t v = 0; v < model.size(); ++v) {
    fibers.push_back(algebra->places_over(v));
    const std::size_t m = fibers.back().size();
    std::vector<std::vector<std::int64_t>> choices;
    std::vector<std::int64_t> cur(m, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t sum) {
      if (i + 1 == m) {
        cur[i] = ((-sum) % bound + bound) % bound;
        choices.push_back(cur);
        return;
      }
      for (std::int64_t a = 0; a < bound; ++a) {
        cur[i] = a;
        rec(i + 1, sum + a);
      }
    };
    rec(0, 0);
    local_choices.push_back(std::move(choices));
  }

  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> nums(places.size());
  std::vector<std::int64_t> sums(algebra->component_count(), 0);
  std::function<void(std::size_t)> product = [&](std::size_t v) {
    if (v == model.size()) {
      if (std::all_of(sums.begin(), sums.end(), [&](std::int64_t x) { return x % bound == 0; })) found.push_back(nums);
      return;
    }
    for (const auto& choice : local_choices[v]) {
      for (std::size_t i = 0; i < choice.size(); ++i) {
        nums[fibers[v][i]] = choice[i];
        sums[places[fibers[v][i]].component] += choice[i];
      }
      product(v + 1);
      for (std::size_t i = 0; i < choice.size(); ++i) sums[places[fibers[v][i]].component] -= choice[i];
    }
  };
  product(0);
  return classes_from_numerators(algebra, bound, std::move(found));
}

std::vector<SurfaceData> enumerate_valid_pairs(const std::shared_ptr<const CompositeAlgebra>& algebras,
                                               std::int64_t bound,
                                               const std::vector<PlacePermutation>& l_automorphisms) {
  if (bound < 1 || 6 % bound != 0) throw std::invalid_argument("denominator bound must divide 6");
  const auto xs = enumerate_cor_trivial_classes(algebras->k, bound);
  const auto ys = enumerate_cor_trivial_classes(algebras->l, bound);
  const Embedding k_up = algebras->k_to_kl();
  const Embedding l_up = algebras->l_to_kl();

  std::map<std::vector<QZ>, std::vector<std::size_t>> by_restriction;
  for (std::size_t i = 0; i < xs.size(); ++i) by_restriction[restriction(xs[i], k_up).invariants()].push_back(i);

  std::vector<std::pair<std::size_t, std::size_t>> matches;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const auto it = by_restriction.find(restriction(ys[j], l_up).invariants());
    if (it == by_restriction.end()) continue;
    for (std::size_t i : it->second) matches.emplace_back(i, j);
  }
  std::sort(matches.begin(), matches.end());

  std::vector<SurfaceData> out;
  out.reserve(matches.size());
  for (const auto& [i, j] : matches) out.emplace_back(algebras, xs[i], ys[j], l_automorphisms);
  return out;
}

namespace {

std::vector<std::vector<std::vector<int>>> splitting_patterns(const std::vector<std::vector<int>>& per_place,
                                                              std::size_t places) {
  std::vector<std::vector<std::vector<int>>> out{{}};
  for (std::size_t v = 0; v < places; ++v) {
    std::vector<std::vector<std::vector<int>>> next;
    for (const auto& prefix : out)
      for (const auto& p : per_place) {
        auto extended = prefix;
        extended.push_back(p);
        next.push_back(std::move(extended));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<std::shared_ptr<const CompositeAlgebra>> enumerate_small_configurations(std::size_t max_places) {
  std::vector<std::shared_ptr<const CompositeAlgebra>> out;
  for (std::size_t n = 1; n <= max_places; ++n) {
    std::vector<std::string> labels;
    for (std::size_t v = 1; v <= n; ++v) labels.push_back("v" + std::to_string(v));
    const GlobalFieldModel model(labels);
    const std::vector<std::vector<int>> trivial(n, std::vector<int>{1});

    std::vector<AlgebraPtr> ks;
    for (const auto& pattern : splitting_patterns({{2}, {1, 1}}, n))
      ks.push_back(std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{2, pattern}}));
    ks.push_back(std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{1, trivial}, {1, trivial}}));

    std::vector<AlgebraPtr> ls;
    for (const auto& pattern : splitting_patterns({{3}, {1, 2}, {1, 1, 1}}, n))
      ls.push_back(std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{3, pattern}}));
    for (const auto& pattern : splitting_patterns({{2}, {1, 1}}, n))
      ls.push_back(std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{1, trivial}, {2, pattern}}));
    ls.push_back(std::make_shared<const EtaleAlgebra>(
        model, std::vector<Component>{{1, trivial}, {1, trivial}, {1, trivial}}));

    for (const auto& k : ks)
      for (const auto& l : ls) out.push_back(std::make_shared<const CompositeAlgebra>(compose_etale(k, l)));
  }
  return out;
}

}  // namespace dp6::brauer
