#include "dp6/index_reduction.hpp"

#include <numeric>
#include <stdexcept>

namespace dp6::index_reduction {

using brauer::AlgebraPtr;
using brauer::EtaleAlgebra;

CentralSimpleData::CentralSimpleData(BrauerClass cls, std::int64_t degree) : cls_(std::move(cls)), degree_(degree) {
  if (!cls_.algebra().is_base_field()) throw std::invalid_argument("D must be a class over F");
  if (degree_ < 1) throw std::invalid_argument("deg(D) must be positive");
  if (degree_ % index() != 0)
    throw std::invalid_argument("ind(D) = " + std::to_string(index()) + " does not divide deg(D) = " + std::to_string(degree_));
}

std::int64_t CentralSimpleData::index() const { return brauer::index(cls_).front(); }

std::string RankTerm::label() const {
  switch (part) {
    case Part::base:
      return "D";
    case Part::b_component:
      return "B" + std::to_string(component + 1);
    case Part::q_component:
      return "Q" + std::to_string(component + 1);
  }
  return "?";
}

std::vector<std::int64_t> twisted_indices(const CentralSimpleData& d, const BrauerClass& x) {
  if (!(d.cls().algebra().model() == x.algebra().model()))
    throw std::invalid_argument("D and the surface classes live on different models");
  const auto& places = x.algebra().places();
  std::vector<std::int64_t> out(x.algebra().component_count(), 1);
  for (std::size_t w = 0; w < places.size(); ++w) {
    const QZ twisted = places[w].local_degree * d.cls().at(places[w].base) + x.at(w);
    out[places[w].component] = std::lcm(out[places[w].component], twisted.den());
  }
  return out;
}

namespace {

void append_terms(std::vector<RankTerm>& out, Part part, const CentralSimpleData& d, const BrauerClass& x) {
  const auto indices = twisted_indices(d, x);
  const auto split = brauer::index(x);
  for (std::size_t c = 0; c < indices.size(); ++c) {
    RankTerm t;
    t.part = part;
    t.component = c;
    t.multiplier = x.algebra().components()[c].degree;
    t.index = indices[c];
    t.rank = t.multiplier * d.degree() * t.index;
    t.split_factor = split[c] == 1;
    out.push_back(t);
  }
}

void require_valid(const SurfaceData& s) {
  const auto violations = brauer::pair_violations(s.algebras(), s.b(), s.q());
  if (!violations.empty()) throw std::invalid_argument("invalid surface data: " + violations.front());
}

std::int64_t gcd_of_ranks(const std::vector<RankTerm>& terms, bool skip_split) {
  std::int64_t g = 0;
  for (const auto& t : terms) {
    if (skip_split && t.part != Part::base && t.split_factor) continue;
    g = std::gcd(g, t.rank);
  }
  return g;
}

}  // namespace

std::vector<RankTerm> rank_terms(const CentralSimpleData& d, const SurfaceData& s) {
  require_valid(s);
  std::vector<RankTerm> out;
  RankTerm base;
  base.index = d.index();
  base.rank = d.degree() * base.index;
  out.push_back(base);
  append_terms(out, Part::b_component, d, s.b());
  append_terms(out, Part::q_component, d, s.q());
  return out;
}

std::int64_t rank_of_simple_image(Part part, std::size_t component, const CentralSimpleData& d, const SurfaceData& s) {
  for (const auto& t : rank_terms(d, s))
    if (t.part == part && (part == Part::base || t.component == component)) return t.rank;
  throw std::invalid_argument("no such component");
}

std::int64_t reduced_index(const CentralSimpleData& d, const SurfaceData& s) {
  return gcd_of_ranks(rank_terms(d, s), false) / d.degree();
}

std::int64_t reduced_index(const std::vector<RankTerm>& terms, std::int64_t degree, bool skip_split) {
  return gcd_of_ranks(terms, skip_split) / degree;
}

std::int64_t reduced_index_without_split_terms(const CentralSimpleData& d, const SurfaceData& s) {
  return gcd_of_ranks(rank_terms(d, s), true) / d.degree();
}

std::string to_string(IndexCase c) {
  switch (c) {
    case IndexCase::i:
      return "i";
    case IndexCase::ii:
      return "ii";
    case IndexCase::iii:
      return "iii";
    case IndexCase::iv:
      return "iv";
    case IndexCase::v:
      return "v";
  }
  return "?";
}

IndexCase index_case(const SurfaceData& s) {
  const bool k_field = s.algebras().k->is_field();
  const EtaleAlgebra& l = *s.algebras().l;
  if (k_field && l.is_field()) return IndexCase::i;
  if (l.is_field()) return IndexCase::ii;
  if (!k_field) return IndexCase::v;
  return l.component_count() == 2 ? IndexCase::iii : IndexCase::iv;
}

std::int64_t reduced_index_by_case(const CentralSimpleData& d, const SurfaceData& s) {
  require_valid(s);
  const std::int64_t ind_d = d.index();
  const IndexCase c = index_case(s);
  auto require_split = [&](const BrauerClass& x, const char* name) {
    if (!x.is_zero())
      throw std::invalid_argument(std::string("case ") + to_string(c) + " requires " + name + " to be split");
  };
  switch (c) {
    case IndexCase::i: {
      const auto b = twisted_indices(d, s.b());
      const auto q = twisted_indices(d, s.q());
      return std::gcd(ind_d, std::gcd(2 * b[0], 3 * q[0]));
    }
    case IndexCase::ii: {
      require_split(s.q(), "Q");
      const auto b = twisted_indices(d, s.b());
      return std::gcd(ind_d, std::gcd(b[0], b[1]));
    }
    case IndexCase::iii: {
      require_split(s.b(), "B");
      const auto q = twisted_indices(d, s.q());
      const auto& comps = s.algebras().l->components();
      const std::size_t e = comps[0].degree == 2 ? 0 : 1;
      return std::gcd(ind_d, std::gcd(q[1 - e], 2 * q[e]));
    }
    case IndexCase::iv: {
      require_split(s.b(), "B");
      const auto q = twisted_indices(d, s.q());
      return std::gcd(ind_d, std::gcd(q[0], std::gcd(q[1], q[2])));
    }
    case IndexCase::v:
      require_split(s.b(), "B");
      require_split(s.q(), "Q");
      return ind_d;
  }
  throw std::logic_error("unreachable");
}

}  // namespace dp6::index_reduction
