#include "dp6/surface_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace dp6::surface_io {

using brauer::AlgebraPtr;
using brauer::BrauerClass;
using brauer::Component;
using brauer::EtaleAlgebra;
using brauer::GlobalFieldModel;
using brauer::PlacePermutation;
using json = nlohmann::ordered_json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

int positive_int(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1000000) fail(where, "expected a positive integer");
  return v.get<int>();
}

GlobalFieldModel parse_model(const json& doc) {
  const json& places = require(doc, "places", "places");
  if (!places.is_array() || places.empty()) fail("places", "expected a non-empty array of labels");
  std::vector<std::string> labels;
  for (const auto& p : places) {
    if (!p.is_string()) fail("places", "labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  try {
    return GlobalFieldModel(std::move(labels));
  } catch (const std::invalid_argument& e) {
    fail("places", e.what());
  }
}

AlgebraPtr parse_algebra(const json& doc, const char* key, const GlobalFieldModel& model) {
  const std::string where = key;
  const json& comps = require(require(doc, key, where), "components", where);
  if (!comps.is_array() || comps.empty()) fail(where, "\"components\" must be a non-empty array");
  std::vector<Component> components;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::string cw = where + ".components[" + std::to_string(c) + "]";
    Component comp;
    comp.degree = positive_int(require(comps[c], "degree", cw), cw + ".degree");
    const json& splitting = require(comps[c], "splitting", cw);
    if (!splitting.is_object()) fail(cw + ".splitting", "expected an object keyed by place");
    for (const auto& [label, parts] : splitting.items())
      if (!model.find(label)) fail(cw + ".splitting", "unknown place \"" + label + "\"");
    for (std::size_t v = 0; v < model.size(); ++v) {
      const auto it = splitting.find(model.label(v));
      if (it == splitting.end()) fail(cw + ".splitting", "missing place \"" + model.label(v) + "\"");
      if (!it->is_array() || it->empty()) fail(cw + ".splitting." + model.label(v), "expected a list of local degrees");
      std::vector<int> local;
      for (const auto& d : *it) local.push_back(positive_int(d, cw + ".splitting." + model.label(v)));
      comp.splitting.push_back(std::move(local));
    }
    components.push_back(std::move(comp));
  }
  try {
    return std::make_shared<const EtaleAlgebra>(model, std::move(components));
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

QZ parse_fraction(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "invariants must be strings \"num/den\"");
  try {
    return QZ::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

BrauerClass parse_class(const json& block, const AlgebraPtr& algebra, const std::string& where) {
  std::vector<QZ> inv(algebra->places().size());
  if (block.is_object()) {
    const auto it = block.find("invariants");
    if (it != block.end()) {
      if (!it->is_object()) fail(where + ".invariants", "expected an object keyed by place id");
      for (const auto& [id, value] : it->items()) {
        const auto place = algebra->find_place(id);
        if (!place) fail(where + ".invariants", "unknown place id \"" + id + "\"");
        inv[*place] = parse_fraction(value, where + ".invariants." + id);
      }
    }
  } else if (!block.is_null()) {
    fail(where, "expected an object");
  }
  try {
    return BrauerClass(algebra, std::move(inv));
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

index_reduction::CentralSimpleData parse_d(const json& block, const GlobalFieldModel& model, const std::string& where) {
  auto base = std::make_shared<const EtaleAlgebra>(EtaleAlgebra::base_field(model));
  const int degree = positive_int(require(block, "degree", where), where + ".degree");
  BrauerClass cls = parse_class(block, base, where);
  try {
    return index_reduction::CentralSimpleData(std::move(cls), degree);
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

std::vector<PlacePermutation> parse_automorphisms(const json& list, const EtaleAlgebra& l) {
  const std::string where = "L_automorphisms";
  if (!list.is_array()) fail(where, "expected a list of place maps or \"standard\"");
  std::vector<PlacePermutation> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string w = where + "[" + std::to_string(k) + "]";
    if (!list[k].is_object()) fail(w, "expected an object mapping place ids");
    PlacePermutation h;
    h.image.resize(l.places().size());
    std::iota(h.image.begin(), h.image.end(), std::size_t{0});
    for (const auto& [from, to] : list[k].items()) {
      const auto a = l.find_place(from);
      if (!a) fail(w, "unknown place id \"" + from + "\"");
      if (!to.is_string() || !l.find_place(to.get<std::string>())) fail(w, "unknown image of \"" + from + "\"");
      h.image[*a] = *l.find_place(to.get<std::string>());
    }
    try {
      brauer::validate_automorphism(l, h);
    } catch (const std::invalid_argument& e) {
      fail(w, e.what());
    }
    out.push_back(std::move(h));
  }
  return out;
}

ordered_json algebra_json(const EtaleAlgebra& a) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : a.components()) {
    ordered_json splitting = ordered_json::object();
    for (std::size_t v = 0; v < a.model().size(); ++v) splitting[a.model().label(v)] = c.splitting[v];
    comps.push_back(ordered_json{{"degree", c.degree}, {"splitting", splitting}});
  }
  return ordered_json{{"components", comps}};
}

ordered_json invariants_json(const BrauerClass& x) {
  ordered_json inv = ordered_json::object();
  for (std::size_t i = 0; i < x.invariants().size(); ++i)
    if (!x.at(i).is_zero()) inv[x.algebra().place_id(i)] = x.at(i).to_string();
  return inv;
}

}  // namespace

brauer::SurfaceData SurfaceInput::surface() const { return brauer::SurfaceData(algebras, b, q, l_automorphisms); }

SurfaceInput parse_surface(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level: expected an object");

  const GlobalFieldModel model = parse_model(doc);
  const AlgebraPtr k = parse_algebra(doc, "K", model);
  const AlgebraPtr l = parse_algebra(doc, "L", model);
  std::shared_ptr<const brauer::CompositeAlgebra> algebras;
  try {
    algebras = std::make_shared<const brauer::CompositeAlgebra>(brauer::compose_etale(k, l));
  } catch (const std::invalid_argument& e) {
    fail("K/L", e.what());
  }

  auto optional_block = [&](const char* key) { return doc.contains(key) ? doc[key] : json(); };
  SurfaceInput input{algebras, parse_class(optional_block("B"), k, "B"), parse_class(optional_block("Q"), l, "Q"), {}, false, {}};

  if (doc.contains("L_automorphisms")) {
    const json& autos = doc["L_automorphisms"];
    if (autos.is_string()) {
      if (autos.get<std::string>() != "standard") fail("L_automorphisms", "the only named set is \"standard\"");
      input.standard_automorphisms = true;
      input.l_automorphisms = brauer::standard_l_automorphisms(*l);
    } else {
      input.l_automorphisms = parse_automorphisms(autos, *l);
    }
  }

  if (doc.contains("D")) {
    const json& d = doc["D"];
    if (!d.is_object()) fail("D", "expected an object");
    if (d.contains("degree") || d.contains("invariants")) {
      input.algebras_d.emplace_back("D", parse_d(d, model, "D"));
    } else {
      for (const auto& [name, block] : d.items()) input.algebras_d.emplace_back(name, parse_d(block, model, "D." + name));
    }
  }
  return input;
}

SurfaceInput load_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_surface(text.str());
}

std::string normalized_json(const SurfaceInput& input, int indent) {
  const auto& k = *input.algebras->k;
  const auto& l = *input.algebras->l;
  ordered_json doc;
  doc["places"] = k.model().labels();
  doc["K"] = algebra_json(k);
  doc["L"] = algebra_json(l);
  doc["B"] = ordered_json{{"invariants", invariants_json(input.b)}};
  doc["Q"] = ordered_json{{"invariants", invariants_json(input.q)}};
  if (!input.algebras_d.empty()) {
    ordered_json ds = ordered_json::object();
    for (const auto& [name, d] : input.algebras_d)
      ds[name] = ordered_json{{"degree", d.degree()}, {"invariants", invariants_json(d.cls())}};
    doc["D"] = ds;
  }
  if (input.standard_automorphisms) {
    doc["L_automorphisms"] = "standard";
  } else if (!input.l_automorphisms.empty()) {
    ordered_json autos = ordered_json::array();
    for (const auto& h : input.l_automorphisms) {
      ordered_json m = ordered_json::object();
      for (std::size_t u = 0; u < h.image.size(); ++u)
        if (h.image[u] != u) m[l.place_id(u)] = l.place_id(h.image[u]);
      autos.push_back(m);
    }
    doc["L_automorphisms"] = autos;
  }
  return doc.dump(indent);
}

}  // namespace dp6::surface_io
