#include "dp6/verification.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dp6/brauer.hpp"
#include "dp6/cohomology.hpp"
#include "dp6/index_reduction.hpp"
#include "dp6/involution.hpp"
#include "dp6/ktheory.hpp"

namespace dp6::verification {

namespace {

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return CheckResult{std::move(name), passed, std::move(detail)};
}

// Appends a failure description, keeping only the first few.
void note(std::string& failures, std::size_t& count, const std::string& what) {
  if (count++ < 3) failures += (failures.empty() ? "" : "; ") + what;
}

std::string summary(const std::string& failures, std::size_t count, const std::string& ok) {
  if (count == 0) return ok;
  return std::to_string(count) + " failures: " + failures;
}

std::set<std::pair<std::vector<QZ>, std::vector<QZ>>> orbit_keys(const std::vector<brauer::SurfaceData>& orbit) {
  std::set<std::pair<std::vector<QZ>, std::vector<QZ>>> keys;
  for (const auto& t : orbit) keys.insert({t.b().invariants(), t.q().invariants()});
  return keys;
}

}  // namespace

std::vector<CheckResult> geometry_checks(const IntMatrix& line_table) {
  std::vector<CheckResult> out;
  const IntMatrix expected = hexagon::expected_line_intersection_table();
  const bool shape_ok = line_table.rows() == 6 && line_table.cols() == 6;
  out.push_back(check("line intersection table", shape_ok && line_table == expected,
                      shape_ok ? line_table.to_string() : "table must be 6 x 6"));

  // -K_S is the sum of the six lines, so K_S^2 is the sum of all table entries.
  Integer total = 0;
  for (std::size_t i = 0; i < line_table.rows(); ++i)
    for (std::size_t j = 0; j < line_table.cols(); ++j) total += line_table(i, j);
  out.push_back(check("K_S^2 = 6 from the line table", total == 6, "sum = " + total.get_str()));
  const long k2 = hexagon::intersection_number(hexagon::canonical_class(), hexagon::canonical_class());
  out.push_back(check("K_S^2 = 6 from the Gram matrix", k2 == 6, std::to_string(k2)));

  for (auto& c : hexagon::verify_module_sequences()) out.push_back(std::move(c));

  const IntMatrix t_hat = hexagon::character_lattice_basis();
  const IntMatrix witness(6, 1, {1, -1, 0, -1, 1, 0});  // l0 - l1 - (m0 - m1)
  out.push_back(check("l0 - l1 - (m0 - m1) lies in the character lattice", solve_integer(t_hat, witness).has_value()));
  return out;
}

std::vector<CheckResult> cohomology_checks() {
  std::vector<CheckResult> out;
  const auto subgroups = cohomology::enumerate_subgroups();
  out.push_back(check("16 subgroups of S2 x S3", subgroups.size() == 16, std::to_string(subgroups.size())));

  using Builder = cohomology::GLattice (*)(const cohomology::Subgroup&);
  const std::vector<std::pair<std::string, Builder>> lattices{
      {"Z[KL/F]", cohomology::lines_lattice},
      {"Z[K/F]", cohomology::triangles_lattice},
      {"Z[L/F]", cohomology::pairs_lattice},
      {"K_0^(1)", ktheory::filtration_one_lattice},
      {"K_0^(2)", ktheory::filtration_two_lattice},
  };
  for (const auto& [name, build] : lattices) {
    std::string failures;
    std::size_t count = 0;
    for (const auto& g : subgroups) {
      const FinAbGroup h1 = cohomology::lattice_h1(build(g));
      if (!h1.is_trivial()) note(failures, count, cohomology::subgroup_label(g) + " -> " + h1.to_string());
    }
    out.push_back(check("H^1(G, " + name + ") = 0 for all G", count == 0, summary(failures, count, "16/16")));
  }

  const auto s2 = cohomology::generated_subgroup({hexagon::HexSymmetry::swap_only()});
  const FinAbGroup sign = cohomology::lattice_h1(cohomology::sign_lattice(s2));
  out.push_back(check("H^1(S2, Z with sign action) = Z/2", sign.to_string() == "Z/2", sign.to_string()));
  return out;
}

std::vector<CheckResult> ktheory_checks() {
  std::vector<CheckResult> out;
  const Integer det = determinant(ktheory::phi_generator_matrix());
  out.push_back(check("phi generator matrix |det| = 1", abs(det) == 1, "det = " + det.get_str()));

  auto run = [&](const std::string& label, const std::vector<ktheory::Identity>& ids) {
    std::string failures;
    std::size_t count = 0;
    for (const auto& id : ids)
      if (!id.holds()) note(failures, count, id.name + ": " + id.lhs.to_string() + " != " + id.rhs.to_string());
    out.push_back(check(label, count == 0, summary(failures, count, std::to_string(ids.size()) + " identities")));
  };
  run("resolution identities", ktheory::resolution_identities());
  run("line generation identities", ktheory::curve_generation_identities());

  const auto g = cohomology::enumerate_subgroups().back();
  out.push_back(check("K_0^(1) lattice has rank 5", ktheory::filtration_one_lattice(g).rank() == 5));
  return out;
}

std::vector<CheckResult> arithmetic_checks(std::int64_t bound, std::size_t max_places, ArithmeticSummary* summary_out) {
  using namespace brauer;
  using index_reduction::CentralSimpleData;

  ArithmeticSummary totals;
  std::string psi_fail, match_fail, orbit_fail, conj_fail, equiv_fail, index_fail;
  std::size_t psi_n = 0, match_n = 0, orbit_n = 0, conj_n = 0, equiv_n = 0, index_n = 0;

  std::map<std::size_t, std::vector<CentralSimpleData>> ds_by_places;
  const auto configurations = enumerate_small_configurations(max_places);
  for (const auto& c : configurations) {
    ++totals.configurations;
    const std::string where = describe_shape(*c->k) + "/" + describe_shape(*c->l) + " on " +
                              std::to_string(c->k->model().size()) + " places";
    const auto xs = enumerate_cor_trivial_classes(c->k, bound);
    const auto ys = enumerate_cor_trivial_classes(c->l, bound);
    const auto k_up = c->k_to_kl();
    const auto l_up = c->l_to_kl();

    // Matched pairs: cor-trivial with equal restrictions to KL.
    std::map<std::vector<QZ>, std::vector<std::size_t>> by_res;
    for (std::size_t i = 0; i < xs.size(); ++i) by_res[restriction(xs[i], k_up).invariants()].push_back(i);
    std::set<std::pair<std::vector<QZ>, std::vector<QZ>>> matched;
    for (const auto& y : ys) {
      const auto it = by_res.find(restriction(y, l_up).invariants());
      if (it == by_res.end()) continue;
      for (std::size_t i : it->second) {
        const auto& x = xs[i];
        if (!(3 * x).is_zero() || !(2 * y).is_zero() || !restriction(x, k_up).is_zero())
          note(psi_fail, psi_n, where + ": x = " + x.to_string() + ", y = " + y.to_string());
        matched.insert({x.invariants(), y.invariants()});
      }
    }
    totals.matched_pairs += matched.size();

    // validate_pair splits into a condition on B and one on Q.
    const auto zero_k = BrauerClass::zero(c->k);
    const auto zero_l = BrauerClass::zero(c->l);
    std::set<std::pair<std::vector<QZ>, std::vector<QZ>>> passing;
    std::vector<const BrauerClass*> good_x, good_y;
    for (const auto& x : xs)
      if (validate_pair(*c, x, zero_l)) good_x.push_back(&x);
    for (const auto& y : ys)
      if (validate_pair(*c, zero_k, y)) good_y.push_back(&y);
    for (const auto* x : good_x)
      for (const auto* y : good_y) passing.insert({x->invariants(), y->invariants()});

    const auto autos = standard_l_automorphisms(*c->l);
    const auto pairs = enumerate_valid_pairs(c, bound, autos);
    std::set<std::pair<std::vector<QZ>, std::vector<QZ>>> enumerated;
    for (const auto& s : pairs) {
      if (!validate_pair(*c, s.b(), s.q())) note(match_fail, match_n, where + ": rejected " + s.b().to_string());
      enumerated.insert({s.b().invariants(), s.q().invariants()});
    }
    if (enumerated != passing || enumerated != matched)
      note(match_fail, match_n,
           where + ": " + std::to_string(enumerated.size()) + " enumerated, " + std::to_string(passing.size()) +
               " pass validate_pair, " + std::to_string(matched.size()) + " matched");

    for (const auto& x : xs)
      if (!(k_conjugation_pushforward(x) == -x)) note(conj_fail, conj_n, where + ": " + x.to_string());

    for (const auto& s : pairs) {
      const auto orb = orbit(s);
      totals.max_orbit = std::max(totals.max_orbit, orb.size());
      if (orb.size() > 6) note(orbit_fail, orbit_n, where + ": orbit of size " + std::to_string(orb.size()));
      if (!same_surface(s, s)) note(equiv_fail, equiv_n, where + ": not reflexive");
      const auto keys = orbit_keys(orb);
      for (const auto& t : orb) {
        if (!same_surface(s, t) || !same_surface(t, s)) note(equiv_fail, equiv_n, where + ": not symmetric");
        // Everything equivalent to t must already be equivalent to s.
        if (orbit_keys(orbit(t)) != keys) note(equiv_fail, equiv_n, where + ": not transitive");
      }
    }

    // Index reduction for every D over F with denominators dividing the bound.
    const std::size_t n = c->k->model().size();
    if (!ds_by_places.count(n)) {
      auto base = std::make_shared<const EtaleAlgebra>(EtaleAlgebra::base_field(c->k->model()));
      for (const auto& cls : enumerate_classes(base, bound)) {
        const std::int64_t ind = index(cls).front();
        ds_by_places[n].emplace_back(cls, ind);
        ds_by_places[n].emplace_back(cls, 2 * ind);
      }
    }
    for (const auto& s : pairs)
      for (const auto& d : ds_by_places[n]) {
        ++totals.index_inputs;
        const auto terms = index_reduction::rank_terms(d, s);
        const std::int64_t r = index_reduction::reduced_index(terms, d.degree(), false);
        const std::int64_t ind = d.index();
        const bool ok = r == index_reduction::reduced_index_by_case(d, s) &&
                        r == index_reduction::reduced_index(terms, d.degree(), true) && ind % r == 0 &&
                        (!has_rational_point(s) || r == ind) &&
                        (index_reduction::index_case(s) != index_reduction::IndexCase::v || r == ind);
        if (!ok) note(index_fail, index_n, where + ": D = " + d.cls().to_string() + ", B = " + s.b().to_string());
      }
  }

  const std::string scope = std::to_string(totals.configurations) + " configurations, bound " + std::to_string(bound);
  std::vector<CheckResult> out;
  out.push_back(check("matched (x, y) satisfy 3x = 0, 2y = 0, res x = 0", psi_n == 0,
                      summary(psi_fail, psi_n, std::to_string(totals.matched_pairs) + " pairs over " + scope)));
  out.push_back(check("enumerate_valid_pairs = validate_pair-passing set", match_n == 0, summary(match_fail, match_n, scope)));
  out.push_back(check("K-conjugation = negation on cor-trivial classes", conj_n == 0, summary(conj_fail, conj_n, scope)));
  out.push_back(check("orbit sizes <= 6", orbit_n == 0,
                      summary(orbit_fail, orbit_n, "max orbit " + std::to_string(totals.max_orbit))));
  out.push_back(check("same_surface is an equivalence relation", equiv_n == 0, summary(equiv_fail, equiv_n, scope)));
  out.push_back(check("index reduction: routes agree, split terms removable, divides ind(D)", index_n == 0,
                      summary(index_fail, index_n, std::to_string(totals.index_inputs) + " (D, B, Q) inputs")));
  if (summary_out) *summary_out = totals;
  return out;
}

std::vector<CheckResult> involution_checks() { return involution::verify_hermitian_remark().checks; }

std::vector<Section> run_verification(const Options& options) {
  const IntMatrix table = options.line_table ? *options.line_table
                                             : hexagon::line_intersection_table(hexagon::intersection_gram());
  return {
      {"geometry", geometry_checks(table)},
      {"cohomology", cohomology_checks()},
      {"k-theory", ktheory_checks()},
      {"arithmetic", arithmetic_checks(options.bound, options.max_places)},
      {"involution", involution_checks()},
  };
}

std::optional<std::string> first_failure(const std::vector<Section>& sections) {
  for (const auto& s : sections)
    for (const auto& c : s.checks)
      if (!c.passed) return s.name + ": " + c.name;
  return std::nullopt;
}

}  // namespace dp6::verification
