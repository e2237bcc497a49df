#include "dp6/hexagon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dp6::hexagon {

LineClass LineClass::from_ordinal(std::size_t k) {
  if (k >= 6) throw std::out_of_range("LineClass::from_ordinal");
  return LineClass{k < 3 ? LineKind::l : LineKind::m, static_cast<int>(k % 3)};
}

std::string LineClass::name() const { return (kind == LineKind::l ? "l" : "m") + std::to_string(index); }

const std::array<LineClass, 6>& all_lines() {
  static const std::array<LineClass, 6> lines{LineClass::from_ordinal(0), LineClass::from_ordinal(1),
                                              LineClass::from_ordinal(2), LineClass::from_ordinal(3),
                                              LineClass::from_ordinal(4), LineClass::from_ordinal(5)};
  return lines;
}

PicClass operator+(const PicClass& a, const PicClass& b) {
  PicClass c;
  for (std::size_t i = 0; i < 4; ++i) c.coords[i] = a.coords[i] + b.coords[i];
  return c;
}

PicClass operator-(const PicClass& a, const PicClass& b) { return a + (-b); }

PicClass operator-(const PicClass& a) { return -1 * a; }

PicClass operator*(long k, const PicClass& a) {
  PicClass c;
  for (std::size_t i = 0; i < 4; ++i) c.coords[i] = k * a.coords[i];
  return c;
}

std::string PicClass::to_string() const {
  std::ostringstream os;
  os << '(' << coords[0] << ',' << coords[1] << ',' << coords[2] << ',' << coords[3] << ')';
  return os.str();
}

LineClass HexSymmetry::apply(const LineClass& line) const {
  LineKind kind = line.kind;
  if (swap) kind = kind == LineKind::l ? LineKind::m : LineKind::l;
  return LineClass{kind, perm[static_cast<std::size_t>(line.index)]};
}

HexSymmetry HexSymmetry::inverse() const {
  HexSymmetry inv;
  inv.swap = swap;
  for (std::uint8_t i = 0; i < 3; ++i) inv.perm[perm[i]] = i;
  return inv;
}

namespace {

constexpr std::array<std::array<std::uint8_t, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

std::size_t HexSymmetry::index() const {
  const auto it = std::find(kPermutations.begin(), kPermutations.end(), perm);
  return (swap ? 6 : 0) + static_cast<std::size_t>(it - kPermutations.begin());
}

HexSymmetry HexSymmetry::from_index(std::size_t k) {
  if (k >= 12) throw std::out_of_range("HexSymmetry::from_index");
  return HexSymmetry{k >= 6, kPermutations[k % 6]};
}

std::string HexSymmetry::to_string() const {
  std::string s = swap ? "*" : "";
  for (auto p : perm) s += static_cast<char>('0' + p);
  return s;
}

HexSymmetry operator*(const HexSymmetry& g, const HexSymmetry& h) {
  HexSymmetry gh;
  gh.swap = g.swap != h.swap;
  for (std::size_t i = 0; i < 3; ++i) gh.perm[i] = g.perm[h.perm[i]];
  return gh;
}

std::vector<HexSymmetry> all_symmetries() {
  std::vector<HexSymmetry> out;
  for (std::size_t k = 0; k < 12; ++k) out.push_back(HexSymmetry::from_index(k));
  return out;
}

PicClass line_to_pic(const LineClass& line) {
  if (line.index < 0 || line.index > 2) throw std::invalid_argument("line_to_pic: index out of range");
  PicClass p;
  const auto i = static_cast<std::size_t>(line.index);
  if (line.kind == LineKind::m) {
    p.coords[1 + i] = 1;
  } else {
    // l_i is the strict transform of the line through the two other points.
    p.coords[0] = 1;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) p.coords[1 + j] = -1;
  }
  return p;
}

long intersection_number(const PicClass& a, const PicClass& b) {
  return a.coords[0] * b.coords[0] - a.coords[1] * b.coords[1] - a.coords[2] * b.coords[2] -
         a.coords[3] * b.coords[3];
}

IntMatrix intersection_gram() { return IntMatrix{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}; }

PicClass canonical_class() { return PicClass{{-3, 1, 1, 1}}; }

PicClass symmetry_action(const HexSymmetry& s, const PicClass& a) {
  auto image = [&](LineKind kind, int index) { return line_to_pic(s.apply(LineClass{kind, index})); };
  // H = m1 + l0 + m2 and E_i = m_i.
  const PicClass h_image = image(LineKind::m, 1) + image(LineKind::l, 0) + image(LineKind::m, 2);
  PicClass out = a.coords[0] * h_image;
  for (int i = 0; i < 3; ++i) out = out + a.coords[static_cast<std::size_t>(1 + i)] * image(LineKind::m, i);
  return out;
}

IntMatrix pic_action_matrix(const HexSymmetry& s) {
  IntMatrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    PicClass basis;
    basis.coords[j] = 1;
    const PicClass img = symmetry_action(s, basis);
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = img.coords[i];
  }
  return m;
}

IntMatrix line_action_matrix(const HexSymmetry& s) {
  IntMatrix m(6, 6);
  for (const auto& line : all_lines()) m(s.apply(line).ordinal(), line.ordinal()) = 1;
  return m;
}

IntMatrix triangle_action_matrix(const HexSymmetry& s) {
  return s.swap ? IntMatrix{{0, 1}, {1, 0}} : IntMatrix::identity(2);
}

IntMatrix pair_action_matrix(const HexSymmetry& s) {
  IntMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) m(s.perm[i], i) = 1;
  return m;
}

IntMatrix lines_to_pic_matrix() {
  IntMatrix m(4, 6);
  for (const auto& line : all_lines()) {
    const PicClass p = line_to_pic(line);
    for (std::size_t i = 0; i < 4; ++i) m(i, line.ordinal()) = p.coords[i];
  }
  return m;
}

IntMatrix lines_to_triangles_matrix() {
  IntMatrix m(2, 6);
  for (const auto& line : all_lines()) m(line.kind == LineKind::l ? 0 : 1, line.ordinal()) = 1;
  return m;
}

IntMatrix lines_to_pairs_matrix() {
  IntMatrix m(3, 6);
  for (const auto& line : all_lines()) m(static_cast<std::size_t>(line.index), line.ordinal()) = 1;
  return m;
}

IntMatrix augmentation_difference_matrix() { return IntMatrix{{1, 1, -1, -1, -1}}; }

IntMatrix character_lattice_basis() { return kernel_basis(lines_to_pic_matrix()); }

IntMatrix line_intersection_table(const IntMatrix& gram) {
  const IntMatrix p = lines_to_pic_matrix();
  return p.transposed() * gram * p;
}

IntMatrix expected_line_intersection_table() {
  IntMatrix t(6, 6);
  for (const auto& a : all_lines())
    for (const auto& b : all_lines()) {
      long v = 0;
      if (a == b) v = -1;
      else if (a.kind != b.kind && a.index != b.index) v = 1;
      t(a.ordinal(), b.ordinal()) = v;
    }
  return t;
}

namespace {

IntMatrix diagonal_vector(std::size_t n) {
  IntMatrix v(n, 1);
  for (std::size_t i = 0; i < n; ++i) v(i, 0) = 1;
  return v;
}

bool injective(const IntMatrix& a) { return is_exact_pair(IntMatrix(a.cols(), 0), a); }

bool surjective(const IntMatrix& a) { return cokernel(a).is_trivial(); }

CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return CheckResult{std::move(name), ok, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> verify_module_sequences() {
  std::vector<CheckResult> out;
  const IntMatrix t_hat = character_lattice_basis();
  const IntMatrix to_pic = lines_to_pic_matrix();
  const IntMatrix to_tri_pairs = vstack(lines_to_triangles_matrix(), lines_to_pairs_matrix());
  const IntMatrix augment = augmentation_difference_matrix();

  out.push_back(check("character lattice rank 2", t_hat.cols() == 2, "rank " + std::to_string(t_hat.cols())));
  out.push_back(check("character lattice saturated", is_saturated(t_hat)));

  // Picard presentation 0 -> T^ -> Z[lines] -> Pic -> 0.
  out.push_back(check("PicardModule exact at T^", injective(t_hat)));
  out.push_back(check("PicardModule exact at Z[KL/F]", is_exact_pair(t_hat, to_pic)));
  out.push_back(check("PicardModule exact at Pic", surjective(to_pic)));

  // 0 -> T^ -> Z[KL/F] -> Z[K/F] + Z[L/F] -> Z -> 0.
  out.push_back(check("GammaModule exact at T^", injective(t_hat)));
  out.push_back(check("GammaModule exact at Z[KL/F]", is_exact_pair(t_hat, to_tri_pairs)));
  out.push_back(check("GammaModule exact at Z[K/F]+Z[L/F]", is_exact_pair(to_tri_pairs, augment)));
  out.push_back(check("GammaModule exact at Z", surjective(augment)));

  // 0 -> T^ -> Z[KL/F]/Z -> Z[K/F]/Z + Z[L/F]/Z -> 0, Z embedded diagonally.
  const QuotientMap q6 = saturated_quotient(diagonal_vector(6));
  const QuotientMap q2 = saturated_quotient(diagonal_vector(2));
  const QuotientMap q3 = saturated_quotient(diagonal_vector(3));
  const IntMatrix target_projection = block_diagonal(q2.projection, q3.projection);
  const bool diagonal_preserved = (target_projection * to_tri_pairs * diagonal_vector(6)).is_zero();
  out.push_back(check("GammaModule2 maps well defined on quotients", diagonal_preserved));
  const IntMatrix t_bar = q6.projection * t_hat;
  const IntMatrix map_bar = target_projection * to_tri_pairs * q6.lift;
  out.push_back(check("GammaModule2 exact at T^", injective(t_bar)));
  out.push_back(check("GammaModule2 exact at Z[KL/F]/Z", is_exact_pair(t_bar, map_bar)));
  out.push_back(check("GammaModule2 exact at Z[K/F]/Z+Z[L/F]/Z", surjective(map_bar)));

  // Equivariance.
  std::string failures;
  for (const auto& s : all_symmetries()) {
    const IntMatrix lines = line_action_matrix(s);
    const IntMatrix tri_pairs = block_diagonal(triangle_action_matrix(s), pair_action_matrix(s));
    if (!(to_pic * lines == pic_action_matrix(s) * to_pic)) failures += " lines->Pic@" + s.to_string();
    if (!(to_tri_pairs * lines == tri_pairs * to_tri_pairs)) failures += " lines->pairs/triangles@" + s.to_string();
    if (!(augment * tri_pairs == augment)) failures += " augmentation@" + s.to_string();
    if (!solve_integer(t_hat, lines * t_hat)) failures += " T^-stability@" + s.to_string();
    const IntMatrix lines_bar = q6.projection * lines * q6.lift;
    const IntMatrix tri_pairs_bar = target_projection * tri_pairs * block_diagonal(q2.lift, q3.lift);
    if (!(map_bar * lines_bar == tri_pairs_bar * map_bar)) failures += " quotient-map@" + s.to_string();
  }
  out.push_back(check("equivariance under all 12 symmetries", failures.empty(), failures));
  return out;
}

}  // namespace dp6::hexagon
