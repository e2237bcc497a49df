#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "dp6/brauer.hpp"

using namespace dp6::brauer;
using dp6::QZ;

namespace {

struct WorkedModel {
  AlgebraPtr k, l;
  std::shared_ptr<const CompositeAlgebra> c;
};

WorkedModel worked_model(std::vector<std::vector<int>> k_split = {{1, 1}, {2}, {1, 1}}) {
  GlobalFieldModel model({"v1", "v2", "v3"});
  auto k = std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{2, std::move(k_split)}});
  auto l = std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{3, {{3}, {1, 1, 1}, {1, 1, 1}}}});
  return {k, l, std::make_shared<const CompositeAlgebra>(compose_etale(k, l))};
}

BrauerClass make_class(const AlgebraPtr& a, const std::map<std::string, QZ>& invariants) {
  std::vector<QZ> inv(a->places().size());
  for (const auto& [id, x] : invariants) {
    auto p = a->find_place(id);
    REQUIRE(p.has_value());
    inv[*p] = x;
  }
  return BrauerClass(a, inv);
}

BrauerClass worked_b(const AlgebraPtr& k) { return make_class(k, {{"0:v1:0", QZ(1, 3)}, {"0:v1:1", QZ(2, 3)}}); }
BrauerClass worked_q(const AlgebraPtr& l) { return make_class(l, {{"0:v2:0", QZ(1, 2)}, {"0:v2:1", QZ(1, 2)}}); }

// A random class over `a` with invariants in (1/den)Z/Z satisfying reciprocity.
BrauerClass random_class(std::mt19937& rng, const AlgebraPtr& a, std::int64_t den) {
  std::vector<QZ> inv(a->places().size());
  for (std::size_t c = 0; c < a->component_count(); ++c) {
    auto places = a->places_of_component(c);
    QZ sum;
    for (std::size_t i = 0; i + 1 < places.size(); ++i) {
      inv[places[i]] = QZ(static_cast<std::int64_t>(rng() % den), den);
      sum += inv[places[i]];
    }
    inv[places.back()] = -sum;
  }
  return BrauerClass(a, inv);
}

void check_reciprocity(const BrauerClass& x) {
  CHECK_NOTHROW(BrauerClass(x.algebra_ptr(), x.invariants()));
}

}  // namespace

TEST_CASE("QZ arithmetic") {
  CHECK(QZ(3, 6) == QZ(1, 2));
  CHECK(QZ(-1, 3) == QZ(2, 3));
  CHECK(QZ(1, 2) + QZ(1, 2) == QZ());
  CHECK(3 * QZ(1, 3) == QZ());
  CHECK(QZ(1, 2) + QZ(1, 3) == QZ(5, 6));
  CHECK(QZ::parse("2/3") == QZ(2, 3));
  CHECK(QZ::parse("0") == QZ());
  CHECK_THROWS(QZ::parse("2/4"));
  CHECK_THROWS(QZ::parse("3/2"));
  CHECK_THROWS(QZ::parse("-1/2"));
  CHECK_THROWS(QZ::parse("x"));
  CHECK_THROWS(QZ(1, 0));
  CHECK(QZ(1, 6).to_string() == "1/6");
  CHECK(QZ().to_string() == "0/1");
}

TEST_CASE("composite algebras") {
  GlobalFieldModel model({"v"});
  auto split_k = std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{1, {{1}}}, {1, {{1}}}});
  auto split_l = std::make_shared<const EtaleAlgebra>(
      model, std::vector<Component>{{1, {{1}}}, {1, {{1}}}, {1, {{1}}}});
  auto kl = compose_etale(split_k, split_l).kl;
  CHECK(kl->places().size() == 6);
  for (const auto& p : kl->places()) CHECK(p.local_degree == 1);

  auto k = std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{2, {{2}}}});
  auto l3 = std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{3, {{3}}}});
  auto one = compose_etale(k, l3).kl;
  REQUIRE(one->places().size() == 1);
  CHECK(one->places()[0].local_degree == 6);

  auto l12 = std::make_shared<const EtaleAlgebra>(model, std::vector<Component>{{1, {{1}}}, {2, {{2}}}});
  auto kl2 = compose_etale(k, l12).kl;
  std::multiset<int> degrees;
  for (const auto& p : kl2->places()) degrees.insert(p.local_degree);
  CHECK(degrees == std::multiset<int>{2, 2, 2});
  CHECK(kl2->degree() == 6);

  CHECK_THROWS_AS(compose_etale(l3, k), std::invalid_argument);
}

TEST_CASE("restriction, corestriction and index") {
  auto w = worked_model();
  auto f = std::make_shared<const EtaleAlgebra>(EtaleAlgebra::base_field(w.k->model()));
  auto to_k = base_embedding(w.k);

  CHECK(restriction(BrauerClass::zero(f), to_k).is_zero());
  auto half = make_class(f, {{"v1", QZ(1, 2)}, {"v2", QZ(1, 2)}});
  auto r = restriction(half, to_k);
  CHECK(r.at(*w.k->find_place("0:v2:0")) == QZ());
  CHECK(r.at(*w.k->find_place("0:v1:0")) == QZ(1, 2));

  auto third = make_class(f, {{"v1", QZ(1, 3)}, {"v2", QZ(2, 3)}});
  auto rt = restriction(third, to_k);
  CHECK(rt.at(*w.k->find_place("0:v1:0")) == QZ(1, 3));
  CHECK(rt.at(*w.k->find_place("0:v1:1")) == QZ(1, 3));

  CHECK(corestriction(worked_b(w.k)).is_zero());
  auto inert = make_class(w.k, {{"0:v2:0", QZ(1, 2)}, {"0:v1:0", QZ(1, 2)}});
  auto cor = corestriction(inert);
  CHECK(cor.at(*f->find_place("v2")) == QZ(1, 2));
  CHECK(cor.at(*f->find_place("v1")) == QZ(1, 2));

  CHECK(index(BrauerClass::zero(w.k)) == std::vector<std::int64_t>{1});
  CHECK(index(worked_b(w.k)) == std::vector<std::int64_t>{3});
  GlobalFieldModel three({"a", "b", "c"});
  auto f3 = std::make_shared<const EtaleAlgebra>(EtaleAlgebra::base_field(three));
  CHECK(index(BrauerClass(f3, {QZ(1, 2), QZ(1, 3), QZ(1, 6)})) == std::vector<std::int64_t>{6});

  CHECK_THROWS_AS(BrauerClass(f3, {QZ(1, 2), QZ(), QZ()}), std::invalid_argument);
  CHECK_THROWS_AS(restriction(worked_b(w.k), to_k), std::invalid_argument);
}

TEST_CASE("cor after res is multiplication by the degree") {
  std::mt19937 rng(1019);
  auto configs = enumerate_small_configurations(3);
  REQUIRE(configs.size() == 412);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& c = configs[rng() % configs.size()];
    auto f = std::make_shared<const EtaleAlgebra>(EtaleAlgebra::base_field(c->k->model()));
    BrauerClass x = random_class(rng, f, 6);
    for (const auto& [upper, degree] : {std::pair{c->k, 2}, std::pair{c->l, 3}, std::pair{c->kl, 6}}) {
      auto e = base_embedding(upper);
      BrauerClass r = restriction(x, e);
      check_reciprocity(r);
      CHECK(corestriction(r, e) == degree * x);
    }
    BrauerClass y = random_class(rng, c->k, 6);
    CHECK(corestriction(restriction(y, c->k_to_kl()), c->k_to_kl()) == 3 * y);
    BrauerClass z = random_class(rng, c->l, 6);
    CHECK(corestriction(restriction(z, c->l_to_kl()), c->l_to_kl()) == 2 * z);
    check_reciprocity(corestriction(z));
    check_reciprocity(k_conjugation_pushforward(y));
  }
}

TEST_CASE("validate_pair") {
  auto w = worked_model();
  CHECK(validate_pair(*w.c, BrauerClass::zero(w.k), BrauerClass::zero(w.l)));
  CHECK(validate_pair(*w.c, worked_b(w.k), worked_q(w.l)));
  CHECK(pair_violations(*w.c, worked_b(w.k), worked_q(w.l)).empty());

  auto bad = worked_model({{1, 1}, {1, 1}, {1, 1}});
  auto v = pair_violations(*bad.c, worked_b(bad.k), worked_q(bad.l));
  CHECK_FALSE(v.empty());
  CHECK(std::find(v.begin(), v.end(), "res_{KL/L}(Q) ≠ 0") != v.end());

  CHECK(validate_pair(*w.c, BrauerClass::zero(w.k), worked_q(w.l)));
  auto b_nonzero_cor = make_class(w.k, {{"0:v1:0", QZ(1, 3)}, {"0:v3:0", QZ(2, 3)}});
  auto vb = pair_violations(*w.c, b_nonzero_cor, BrauerClass::zero(w.l));
  CHECK(std::find(vb.begin(), vb.end(), "cor_{K/F}(B) ≠ 0") != vb.end());
}

TEST_CASE("group action and surface equivalence") {
  auto w = worked_model();
  SurfaceData s(w.c, worked_b(w.k), worked_q(w.l), standard_l_automorphisms(*w.l));
  auto conj = Generator::k_conjugation();
  SurfaceData t = g_action(conj, s);
  CHECK(t.b() == make_class(w.k, {{"0:v1:0", QZ(2, 3)}, {"0:v1:1", QZ(1, 3)}}));
  CHECK(t.b() == k_conjugation_pushforward(s.b()));
  SurfaceData tt = g_action(conj, t);
  CHECK(tt.b() == s.b());
  CHECK(tt.q() == s.q());

  CHECK(same_surface(s, s));
  CHECK(same_surface(s, t));
  CHECK(orbit(s).size() == 6);

  auto moved = make_class(w.k, {{"0:v3:0", QZ(1, 3)}, {"0:v3:1", QZ(2, 3)}});
  // Moving B to v3 breaks the matching with Q there, so pair it with Q = 0.
  SurfaceData base(w.c, BrauerClass::zero(w.k), BrauerClass::zero(w.l), standard_l_automorphisms(*w.l));
  CHECK_THROWS_AS(base.with_classes(moved, BrauerClass::zero(w.l)), std::invalid_argument);
  SurfaceData only_b = base.with_classes(worked_b(w.k), BrauerClass::zero(w.l));
  CHECK_FALSE(same_surface(only_b, base));

  CHECK(has_rational_point(base));
  CHECK_FALSE(has_rational_point(s));
  CHECK_FALSE(has_rational_point(base.with_classes(BrauerClass::zero(w.k), worked_q(w.l))));
}

TEST_CASE("automorphisms") {
  auto w = worked_model();
  auto autos = standard_l_automorphisms(*w.l);
  REQUIRE(autos.size() == 1);
  CHECK_NOTHROW(validate_automorphism(*w.l, autos[0]));
  PlacePermutation identity;
  for (std::size_t u = 0; u < w.l->places().size(); ++u) identity.image.push_back(u);
  CHECK(pushforward(worked_q(w.l), identity) == worked_q(w.l));
  PlacePermutation cross = identity;
  std::swap(cross.image[*w.l->find_place("0:v1:0")], cross.image[*w.l->find_place("0:v2:0")]);
  CHECK_THROWS_AS(validate_automorphism(*w.l, cross), std::invalid_argument);
}

TEST_CASE("enumeration") {
  auto w = worked_model();
  auto trivial = enumerate_valid_pairs(w.c, 1);
  REQUIRE(trivial.size() == 1);
  CHECK(has_rational_point(trivial[0]));
  CHECK_THROWS_AS(enumerate_valid_pairs(w.c, 4), std::invalid_argument);

  auto pairs = enumerate_valid_pairs(w.c, 6);
  for (const auto& s : pairs) CHECK(validate_pair(*w.c, s.b(), s.q()));
}

TEST_CASE("valid pair count on the worked model") {
  // Brute force with the restriction maps written out for this model.
  // K places: v1 {a0, a1} degree 1, v2 {b} degree 2, v3 {c0, c1} degree 1.
  // L places: v1 {u} degree 3, v2 {p0, p1, p2}, v3 {q0, q1, q2} degree 1.
  // KL places: (a_i, u) degree 3, (b, p_j) degree 2, (c_i, q_j) degree 1.
  using Vec = std::vector<int>;
  std::map<Vec, std::size_t> by_restriction;
  for (int a0 = 0; a0 < 6; ++a0)
    for (int a1 = 0; a1 < 6; ++a1)
      for (int b = 0; b < 6; ++b)
        for (int c0 = 0; c0 < 6; ++c0)
          for (int c1 = 0; c1 < 6; ++c1) {
            if ((a0 + a1) % 6 || b % 6 || (c0 + c1) % 6) continue;
            Vec r{3 * a0 % 6, 3 * a1 % 6, 2 * b % 6, 2 * b % 6, 2 * b % 6, c0, c0, c0, c1, c1, c1};
            ++by_restriction[r];
          }
  std::size_t count = 0;
  for (int u = 0; u < 6; ++u)
    for (int p = 0; p < 216; ++p)
      for (int q = 0; q < 216; ++q) {
        int p0 = p % 6, p1 = p / 6 % 6, p2 = p / 36, q0 = q % 6, q1 = q / 6 % 6, q2 = q / 36;
        if (u % 6 || (p0 + p1 + p2) % 6 || (q0 + q1 + q2) % 6) continue;
        Vec r{u, u, 2 * p0 % 6, 2 * p1 % 6, 2 * p2 % 6, q0, q1, q2, q0, q1, q2};
        auto it = by_restriction.find(r);
        if (it != by_restriction.end()) count += it->second;
      }
  CHECK(count == 12);
  CHECK(enumerate_valid_pairs(worked_model().c, 6).size() == count);
}

TEST_CASE("same_surface on sampled triples") {
  std::mt19937 rng(6);
  auto configs = enumerate_small_configurations(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& c = configs[rng() % configs.size()];
    auto pairs = enumerate_valid_pairs(c, 6, standard_l_automorphisms(*c->l));
    for (int k = 0; k < 20; ++k) {
      const auto& s = pairs[rng() % pairs.size()];
      const auto& t = pairs[rng() % pairs.size()];
      const auto& u = pairs[rng() % pairs.size()];
      CHECK(same_surface(s, s));
      CHECK(same_surface(s, t) == same_surface(t, s));
      if (same_surface(s, t) && same_surface(t, u)) CHECK(same_surface(s, u));
      CHECK(orbit(s).size() <= 6);
    }
  }
}
