#include "dp6/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dp6/brauer.hpp"
#include "dp6/cohomology.hpp"
#include "dp6/index_reduction.hpp"
#include "dp6/ktheory.hpp"
#include "dp6/surface_io.hpp"
#include "dp6/verification.hpp"

namespace dp6::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

int cmd_subgroups(std::optional<std::size_t> id, std::ostream& out, std::ostream& err) {
  const auto subgroups = cohomology::enumerate_subgroups();
  if (id && *id >= subgroups.size()) {
    err << "error: subgroup id must be below " << subgroups.size() << "\n";
    return input_error;
  }
  const std::vector<std::pair<std::string, int>> columns{
      {"id", 4},     {"order", 7},   {"K", 7},        {"L", 7},        {"Pic^G", 7},   {"H1(KL)", 8},
      {"H1(K)", 7},  {"H1(L)", 7},   {"H1(K0^1)", 10}, {"H1(K0^2)", 10}, {"H1(Pic)", 9}, {"H1(T^)", 12},
      {"elements", 0}};
  for (const auto& [name, width] : columns) out << std::left << std::setw(width) << name;
  out << "\n";
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (id && *id != i) continue;
    const auto& g = subgroups[i];
    const auto shape = cohomology::etale_shape(g);
    auto h1 = [](const cohomology::GLattice& m) { return cohomology::lattice_h1(m).to_string(); };
    const std::vector<std::string> cells{
        std::to_string(i),
        std::to_string(g.size()),
        cohomology::to_string(shape.k_shape),
        cohomology::to_string(shape.l_shape),
        std::to_string(cohomology::lattice_invariants(cohomology::picard_lattice(g)).cols()),
        h1(cohomology::lines_lattice(g)),
        h1(cohomology::triangles_lattice(g)),
        h1(cohomology::pairs_lattice(g)),
        h1(ktheory::filtration_one_lattice(g)),
        h1(ktheory::filtration_two_lattice(g)),
        h1(cohomology::picard_lattice(g)),
        h1(cohomology::character_lattice(g)),
        cohomology::subgroup_label(g)};
    for (std::size_t c = 0; c < cells.size(); ++c) out << std::left << std::setw(columns[c].second) << cells[c];
    out << "\n";
  }
  return ok;
}

IntMatrix load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw surface_io::InputError("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw surface_io::InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw surface_io::InputError("intersection table must be a list of rows");
  const std::size_t cols = doc[0].is_array() ? doc[0].size() : 0;
  IntMatrix table(doc.size(), cols);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_array() || doc[i].size() != cols) throw surface_io::InputError("intersection table rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!doc[i][j].is_number_integer()) throw surface_io::InputError("intersection table entries must be integers");
      table(i, j) = doc[i][j].get<long>();
    }
  }
  return table;
}

int cmd_verify(std::int64_t bound, std::size_t places, const std::string& table_path, std::ostream& out,
               std::ostream& err) {
  if (bound < 1 || 6 % bound != 0) {
    err << "error: --bound must divide 6\n";
    return input_error;
  }
  if (places < 1 || places > 3) {
    err << "error: --places must be 1, 2 or 3\n";
    return input_error;
  }
  verification::Options options;
  options.bound = bound;
  options.max_places = places;
  if (!table_path.empty()) {
    try {
      options.line_table = load_table(table_path);
    } catch (const surface_io::InputError& e) {
      err << "error: " << e.what() << "\n";
      return input_error;
    }
  }
  const auto sections = verification::run_verification(options);
  std::size_t total = 0, passed = 0;
  for (const auto& section : sections) {
    out << "[" << section.name << "]\n";
    for (const auto& c : section.checks) {
      ++total;
      if (c.passed) ++passed;
      out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty() && c.detail.find('\n') == std::string::npos) out << " (" << c.detail << ")";
      out << "\n";
    }
  }
  if (const auto failure = verification::first_failure(sections)) {
    out << passed << "/" << total << " checks passed\n";
    err << "verification failed: " << *failure << "\n";
    return check_failed;
  }
  out << "all " << total << " checks passed\n";
  return ok;
}

ordered_json surface_report(const surface_io::SurfaceInput& input, const std::string& only_d, bool& valid) {
  const auto& algebras = *input.algebras;
  ordered_json report;
  report["K"] = brauer::describe_shape(*algebras.k);
  report["L"] = brauer::describe_shape(*algebras.l);
  const auto violations = brauer::pair_violations(algebras, input.b, input.q);
  valid = violations.empty();
  report["valid"] = valid;
  report["violations"] = violations;
  report["ind_B"] = brauer::index(input.b);
  report["ind_Q"] = brauer::index(input.q);
  if (!valid) return report;

  const auto s = input.surface();
  report["rational_point"] = brauer::has_rational_point(s);
  report["orbit_size"] = brauer::orbit(s).size();
  report["index_case"] = index_reduction::to_string(index_reduction::index_case(s));
  ordered_json reductions = ordered_json::array();
  for (const auto& [name, d] : input.algebras_d) {
    if (!only_d.empty() && name != only_d) continue;
    ordered_json terms = ordered_json::object();
    for (const auto& t : index_reduction::rank_terms(d, s)) terms[t.label()] = t.rank;
    reductions.push_back(ordered_json{{"name", name},
                                      {"degree", d.degree()},
                                      {"ind", d.index()},
                                      {"rank_terms", terms},
                                      {"reduced_index", index_reduction::reduced_index(d, s)}});
  }
  report["index_reduction"] = reductions;
  return report;
}

void print_text(const surface_io::SurfaceInput& input, const ordered_json& report, std::ostream& out) {
  out << "K: " << report["K"].get<std::string>() << "\n";
  out << "L: " << report["L"].get<std::string>() << "\n";
  out << "B: " << input.b.to_string() << "\n";
  out << "Q: " << input.q.to_string() << "\n";
  out << "ind(B): " << join(report["ind_B"].get<std::vector<std::int64_t>>()) << "\n";
  out << "ind(Q): " << join(report["ind_Q"].get<std::vector<std::int64_t>>()) << "\n";
  if (!report["valid"].get<bool>()) {
    out << "valid pair: no\n";
    for (const auto& v : report["violations"]) out << "  violated: " << v.get<std::string>() << "\n";
    return;
  }
  out << "valid pair: yes\n";
  out << "rational point: " << (report["rational_point"].get<bool>() ? "yes" : "no") << "\n";
  out << "orbit size: " << report["orbit_size"].get<std::size_t>() << "\n";
  out << "index reduction case: " << report["index_case"].get<std::string>() << "\n";
  for (const auto& r : report["index_reduction"]) {
    const std::string name = r["name"].get<std::string>();
    out << "rank terms for " << name << ":";
    for (const auto& [label, rank] : r["rank_terms"].items()) out << " " << label << "=" << rank.get<std::int64_t>();
    out << "\n";
    out << "ind reduction of " << name << ": " << r["reduced_index"].get<std::int64_t>() << "\n";
  }
}

int cmd_surface(const std::string& path, const std::string& only_d, const std::string& format, std::ostream& out,
                std::ostream& err) {
  const surface_io::SurfaceInput input = surface_io::load_surface_file(path);
  if (!only_d.empty()) {
    const bool known = std::any_of(input.algebras_d.begin(), input.algebras_d.end(),
                                   [&](const auto& entry) { return entry.first == only_d; });
    if (!known) throw surface_io::InputError("--algebra-d: no algebra named \"" + only_d + "\"");
  }
  bool valid = false;
  const ordered_json report = surface_report(input, only_d, valid);
  if (format == "json") {
    ordered_json doc = ordered_json::parse(surface_io::normalized_json(input));
    doc["report"] = report;
    out << doc.dump(2) << "\n";
  } else {
    print_text(input, report, out);
  }
  if (!valid) {
    err << "invalid surface data: " << report["violations"][0].get<std::string>() << "\n";
    return check_failed;
  }
  return ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sextic del Pezzo surfaces: lattices, K_0, Brauer data and index reduction", "dp6"};
  app.require_subcommand(1);

  std::optional<std::size_t> subgroup_id;
  auto* subgroups = app.add_subcommand("subgroups", "List the subgroups of S2 x S3 with their invariants");
  subgroups->add_option("--id", subgroup_id, "Show a single subgroup");

  std::int64_t bound = 6;
  std::size_t places = 3;
  std::string table_path;
  auto* verify = app.add_subcommand("verify", "Run every self-check");
  verify->add_option("--bound", bound, "Denominator bound for the arithmetic sweep")->capture_default_str();
  verify->add_option("--places", places, "Largest number of places in the arithmetic sweep")->capture_default_str();
  verify->add_option("--intersection-table", table_path, "JSON 6x6 line table to check instead of the computed one");

  std::string input_path, only_d, format = "text";
  auto* surface = app.add_subcommand("surface", "Report on surface data read from JSON");
  surface->add_option("--input", input_path, "Surface description")->required();
  surface->add_option("--algebra-d", only_d, "Only report on the named algebra D");
  surface->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*subgroups) return cmd_subgroups(subgroup_id, out, err);
    if (*verify) return cmd_verify(bound, places, table_path, out, err);
    return cmd_surface(input_path, only_d, format, out, err);
  } catch (const surface_io::InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace dp6::cli
