#include "dp6/cohomology.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace dp6::cohomology {

namespace {

void sort_elements(Subgroup& g) {
  std::sort(g.begin(), g.end(), [](const HexSymmetry& a, const HexSymmetry& b) { return a.index() < b.index(); });
  g.erase(std::unique(g.begin(), g.end()), g.end());
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index() != b[i].index()) return a[i].index() < b[i].index();
  return false;
}

}  // namespace

Subgroup generated_subgroup(const std::vector<HexSymmetry>& generators) {
  Subgroup g{HexSymmetry::identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    const Subgroup current = g;
    for (const auto& a : current)
      for (const auto& b : generators) {
        const HexSymmetry ab = a * b;
        if (std::find(g.begin(), g.end(), ab) == g.end()) {
          g.push_back(ab);
          grew = true;
        }
      }
  }
  sort_elements(g);
  return g;
}

bool is_subgroup(const std::vector<HexSymmetry>& elements) {
  if (std::find(elements.begin(), elements.end(), HexSymmetry::identity()) == elements.end()) return false;
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (std::find(elements.begin(), elements.end(), a * b) == elements.end()) return false;
  return true;
}

std::vector<Subgroup> enumerate_subgroups() {
  // Every subgroup of the dihedral group of order 12 is generated by at most
  // two elements.
  const auto elements = hexagon::all_symmetries();
  std::vector<Subgroup> out;
  auto add = [&](Subgroup g) {
    if (std::none_of(out.begin(), out.end(), [&](const Subgroup& h) { return h == g; })) out.push_back(std::move(g));
  };
  for (const auto& a : elements)
    for (const auto& b : elements) add(generated_subgroup({a, b}));
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::string subgroup_label(const Subgroup& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += g[i].to_string();
  }
  return s + "}";
}

std::string to_string(KShape s) { return s == KShape::field ? "field" : "FxF"; }

std::string to_string(LShape s) {
  switch (s) {
    case LShape::field:
      return "field";
    case LShape::field_times_quadratic:
      return "FxE";
    case LShape::split:
      return "FxFxF";
  }
  return "?";
}

EtaleShape etale_shape(const Subgroup& g) {
  const bool any_swap = std::any_of(g.begin(), g.end(), [](const HexSymmetry& s) { return s.swap; });
  // Orbits of G on {0, 1, 2}.
  std::array<bool, 3> seen{};
  std::vector<std::size_t> orbit_sizes;
  for (std::uint8_t start = 0; start < 3; ++start) {
    if (seen[start]) continue;
    std::set<std::uint8_t> orbit;
    for (const auto& s : g) orbit.insert(s.perm[start]);
    for (auto i : orbit) seen[i] = true;
    orbit_sizes.push_back(orbit.size());
  }
  LShape l = LShape::split;
  if (orbit_sizes.size() == 1) l = LShape::field;
  else if (orbit_sizes.size() == 2) l = LShape::field_times_quadratic;
  return EtaleShape{any_swap ? KShape::field : KShape::split, l};
}

GLattice::GLattice(Subgroup group, std::size_t rank, const std::function<IntMatrix(const HexSymmetry&)>& action)
    : group_(std::move(group)), rank_(rank) {
  sort_elements(group_);
  if (!is_subgroup(group_)) throw std::invalid_argument("GLattice: element list is not a subgroup");
  action_.reserve(group_.size());
  for (const auto& g : group_) {
    IntMatrix a = action(g);
    if (a.rows() != rank_ || a.cols() != rank_) throw std::invalid_argument("GLattice: action matrix has wrong size");
    action_.push_back(std::move(a));
  }
  if (!(this->action(HexSymmetry::identity()) == IntMatrix::identity(rank_)))
    throw std::invalid_argument("GLattice: identity does not act trivially");
  for (std::size_t i = 0; i < group_.size(); ++i)
    for (std::size_t j = 0; j < group_.size(); ++j)
      if (!(this->action(group_[i] * group_[j]) == action_[i] * action_[j]))
        throw std::invalid_argument("GLattice: action is not a homomorphism");
}

const IntMatrix& GLattice::action(const HexSymmetry& g) const {
  const auto it = std::find(group_.begin(), group_.end(), g);
  if (it == group_.end()) throw std::invalid_argument("GLattice: element not in group");
  return action_[static_cast<std::size_t>(it - group_.begin())];
}

IntMatrix lattice_invariants(const GLattice& m) {
  const std::size_t n = m.rank();
  IntMatrix stacked(0, n);
  for (std::size_t k = 0; k < m.group().size(); ++k)
    stacked = vstack(stacked, m.action(k) - IntMatrix::identity(n));
  return kernel_basis(stacked);
}

namespace {

// Columns (g - 1) m stacked over all g: the coboundary map M -> Map(G, M).
IntMatrix coboundary_matrix(const GLattice& m) {
  const std::size_t n = m.rank();
  IntMatrix c(0, n);
  for (std::size_t k = 0; k < m.group().size(); ++k) c = vstack(c, m.action(k) - IntMatrix::identity(n));
  return c;
}

}  // namespace

std::size_t augmentation_image_rank(const GLattice& m) { return rank(coboundary_matrix(m)); }

FinAbGroup lattice_h1(const GLattice& m) {
  const std::size_t n = m.rank();
  const auto& group = m.group();
  const std::size_t order = group.size();
  if (n == 0) return {};

  auto position = [&](const HexSymmetry& g) {
    return static_cast<std::size_t>(std::find(group.begin(), group.end(), g) - group.begin());
  };

  // Unknown f = (f(g_0), ..., f(g_{order-1})) in Z^{order * n}.
  // For every (g, h): f(gh) - f(g) - g f(h) = 0.
  IntMatrix equations(order * order * n, order * n);
  for (std::size_t gi = 0; gi < order; ++gi)
    for (std::size_t hi = 0; hi < order; ++hi) {
      const std::size_t ghi = position(group[gi] * group[hi]);
      const std::size_t row0 = (gi * order + hi) * n;
      const IntMatrix& act = m.action(gi);
      for (std::size_t r = 0; r < n; ++r) {
        equations(row0 + r, ghi * n + r) += 1;
        equations(row0 + r, gi * n + r) -= 1;
        for (std::size_t c = 0; c < n; ++c) equations(row0 + r, hi * n + c) -= act(r, c);
      }
    }
  const IntMatrix cocycles = kernel_basis(equations);
  const auto boundaries = solve_integer(cocycles, coboundary_matrix(m));
  if (!boundaries) throw std::logic_error("lattice_h1: coboundaries are not cocycles");
  return cokernel(*boundaries);
}

GLattice lines_lattice(const Subgroup& g) { return GLattice(g, 6, hexagon::line_action_matrix); }

GLattice triangles_lattice(const Subgroup& g) { return GLattice(g, 2, hexagon::triangle_action_matrix); }

GLattice pairs_lattice(const Subgroup& g) { return GLattice(g, 3, hexagon::pair_action_matrix); }

GLattice picard_lattice(const Subgroup& g) { return GLattice(g, 4, hexagon::pic_action_matrix); }

GLattice character_lattice(const Subgroup& g) {
  const IntMatrix basis = hexagon::character_lattice_basis();
  return GLattice(g, basis.cols(), [&](const HexSymmetry& s) {
    auto coords = solve_integer(basis, hexagon::line_action_matrix(s) * basis);
    if (!coords) throw std::logic_error("character lattice is not stable under the hexagon symmetries");
    return *coords;
  });
}

GLattice sign_lattice(const Subgroup& g) {
  return GLattice(g, 1, [](const HexSymmetry& s) { return IntMatrix{{s.swap ? -1L : 1L}}; });
}

}  // namespace dp6::cohomology
