#include "dp6/ktheory.hpp"

#include <sstream>
#include <stdexcept>

namespace dp6::ktheory {

using hexagon::LineKind;
using hexagon::canonical_class;
using hexagon::intersection_number;
using hexagon::line_to_pic;

namespace {

LineClass l(int i) { return LineClass{LineKind::l, i}; }
LineClass m(int i) { return LineClass{LineKind::m, i}; }
PicClass pic(const LineClass& line) { return line_to_pic(line); }

long halve_exact(long twice, const char* what) {
  if (twice % 2 != 0) throw std::logic_error(std::string(what) + ": Riemann-Roch parity violated");
  return twice / 2;
}

}  // namespace

long KZeroClass::twice_ch2() const { return 2 * (chi - rank) + intersection_number(canonical_class(), c1); }

std::array<long, 6> KZeroClass::coordinates() const {
  return {rank, c1.coords[0], c1.coords[1], c1.coords[2], c1.coords[3], chi};
}

KZeroClass KZeroClass::from_coordinates(const std::array<long, 6>& v) {
  return KZeroClass{v[0], PicClass{{v[1], v[2], v[3], v[4]}}, v[5]};
}

std::string KZeroClass::to_string() const {
  std::ostringstream os;
  os << '(' << rank << ", " << c1.to_string() << ", " << chi << ')';
  return os.str();
}

KZeroClass operator+(const KZeroClass& a, const KZeroClass& b) {
  return KZeroClass{a.rank + b.rank, a.c1 + b.c1, a.chi + b.chi};
}

KZeroClass operator-(const KZeroClass& a, const KZeroClass& b) { return a + (-b); }

KZeroClass operator-(const KZeroClass& a) { return KZeroClass{-a.rank, -a.c1, -a.chi}; }

KZeroClass class_of_line_bundle(const PicClass& d) {
  const long twice = intersection_number(d, d) - intersection_number(canonical_class(), d);
  return KZeroClass{1, d, 1 + halve_exact(twice, "class_of_line_bundle")};
}

KZeroClass structure_sheaf() { return class_of_line_bundle(PicClass{}); }

KZeroClass k0_product(const KZeroClass& a, const KZeroClass& b) {
  KZeroClass out;
  out.rank = a.rank * b.rank;
  out.c1 = a.rank * b.c1 + b.rank * a.c1;
  const long twice_ch2 = a.rank * b.twice_ch2() + b.rank * a.twice_ch2() + 2 * intersection_number(a.c1, b.c1);
  // chi = rank + ch2 - K.c1 / 2
  const long twice_chi = 2 * out.rank + twice_ch2 - intersection_number(canonical_class(), out.c1);
  out.chi = halve_exact(twice_chi, "k0_product");
  return out;
}

KZeroClass class_of_point() { return KZeroClass{0, PicClass{}, 1}; }

KZeroClass class_of_curve(const LineClass& line) {
  return structure_sheaf() - class_of_line_bundle(-pic(line));
}

KZeroClass class_of_curves(const std::vector<LineClass>& lines) {
  KZeroClass sum;
  for (const auto& line : lines) sum = sum + class_of_curve(line);
  return sum;
}

std::vector<PicClass> phi_generator_divisors() {
  return {
      PicClass{},
      -(pic(m(1)) + pic(l(0)) + pic(m(2))),
      -(pic(l(1)) + pic(m(0)) + pic(l(2))),
      -(pic(l(0)) + pic(m(1))),
      -(pic(l(0)) + pic(m(2))),
      -(pic(l(1)) + pic(m(2))),
  };
}

IntMatrix phi_generator_matrix() {
  const auto divisors = phi_generator_divisors();
  IntMatrix out(divisors.size(), 6);
  for (std::size_t r = 0; r < divisors.size(); ++r) {
    const auto coords = class_of_line_bundle(divisors[r]).coordinates();
    for (std::size_t c = 0; c < 6; ++c) out(r, c) = coords[c];
  }
  return out;
}

KZeroClass k0_galois_action(const HexSymmetry& s, const KZeroClass& a) {
  return KZeroClass{a.rank, hexagon::symmetry_action(s, a.c1), a.chi};
}

std::vector<std::vector<LineClass>> filtration_one_curves() {
  return {{l(0), m(1)}, {l(0), m(2)}, {l(1), m(2)}, {m(1), l(0), m(2)}, {l(1), m(0), l(2)}};
}

std::vector<KZeroClass> filtration_one_basis() {
  std::vector<KZeroClass> out;
  for (const auto& curves : filtration_one_curves()) out.push_back(class_of_curves(curves));
  return out;
}

namespace {

// Rank-zero class -> column (H, E0, E1, E2, chi).
IntMatrix rank_zero_column(const KZeroClass& a) {
  if (a.rank != 0) throw std::invalid_argument("class does not lie in K_0^(1)");
  return IntMatrix(5, 1, {a.c1.coords[0], a.c1.coords[1], a.c1.coords[2], a.c1.coords[3], a.chi});
}

}  // namespace

cohomology::GLattice filtration_one_lattice(const cohomology::Subgroup& g) {
  // Rank-zero classes in coordinates (H, E0, E1, E2, chi).
  return cohomology::GLattice(g, 5, [](const HexSymmetry& s) {
    IntMatrix images(5, 0);
    for (std::size_t k = 0; k < 5; ++k) {
      KZeroClass unit;
      if (k < 4) unit.c1.coords[k] = 1;
      else unit.chi = 1;
      images = hstack(images, rank_zero_column(k0_galois_action(s, unit)));
    }
    return images;
  });
}

cohomology::GLattice filtration_two_lattice(const cohomology::Subgroup& g) {
  return cohomology::GLattice(g, 1, [](const HexSymmetry& s) {
    const KZeroClass image = k0_galois_action(s, class_of_point());
    if (!(image == class_of_point())) throw std::logic_error("point class is not invariant");
    return IntMatrix::identity(1);
  });
}

std::vector<Identity> resolution_identities() {
  std::vector<Identity> out;
  const KZeroClass os = structure_sheaf();
  auto bundle = [](const PicClass& d) { return class_of_line_bundle(d); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const std::string ij = std::to_string(i) + std::to_string(j);
      out.push_back({"point l" + std::to_string(i) + " m" + std::to_string(j), class_of_point(),
                     os - bundle(-pic(l(i))) - bundle(-pic(m(j))) + bundle(-pic(l(i)) - pic(m(j)))});
      out.push_back({"skew m" + ij, KZeroClass{},
                     os - bundle(-pic(m(i))) - bundle(-pic(m(j))) + bundle(-pic(m(i)) - pic(m(j)))});
      out.push_back({"skew l" + ij, KZeroClass{},
                     os - bundle(-pic(l(i))) - bundle(-pic(l(j))) + bundle(-pic(l(i)) - pic(l(j)))});
    }
  for (const auto& line : hexagon::all_lines()) {
    // O_D of a smooth rational curve: rank 0, c1 = D, chi = 1.
    out.push_back({"divisor " + line.name(), KZeroClass{0, pic(line), 1}, os - bundle(-pic(line))});
  }
  return out;
}

std::vector<Identity> curve_generation_identities() {
  std::vector<Identity> out;
  const KZeroClass os = structure_sheaf();
  auto bundle = [](const PicClass& d) { return class_of_line_bundle(d); };
  const int triples[3][3] = {{1, 2, 0}, {0, 2, 1}, {0, 1, 2}};
  for (const auto& t : triples) {
    const int i = t[0], j = t[1], k = t[2];
    const std::string suffix = std::to_string(k);
    out.push_back({"O_l" + suffix, class_of_curve(l(k)),
                   os - bundle(-pic(l(k)) - pic(m(i))) - bundle(-pic(l(k)) - pic(m(j))) +
                       bundle(-pic(m(i)) - pic(l(j)) - pic(m(k)))});
    out.push_back({"O_l" + suffix + " (symmetric form)", class_of_curve(l(k)),
                   os - bundle(-pic(l(k)) - pic(m(i))) - bundle(-pic(l(k)) - pic(m(j))) +
                       bundle(-pic(m(i)) - pic(l(k)) - pic(m(j)))});
    out.push_back({"O_m" + suffix, class_of_curve(m(k)),
                   os - bundle(-pic(m(k)) - pic(l(i))) - bundle(-pic(m(k)) - pic(l(j))) +
                       bundle(-pic(l(i)) - pic(m(j)) - pic(l(k)))});
  }
  return out;
}

}  // namespace dp6::ktheory
