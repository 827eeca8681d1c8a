#include "hurwitz/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json parse_json(const std::string& text, const std::string& what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError(what + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

namespace {

std::size_t get_size(const ordered_json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_unsigned()) {
    throw StructuralError(what + ": missing or invalid \"" + key + "\"");
  }
  return j[key].get<std::size_t>();
}

std::vector<std::uint32_t> square_table(const ordered_json& j, const char* key, std::size_t size,
                                        const std::string& what) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != size) {
    throw StructuralError(what + ": \"" + key + "\" must have " + std::to_string(size) + " rows");
  }
  std::vector<std::uint32_t> out;
  out.reserve(size * size);
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != size) throw StructuralError(what + ": table is not square");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= size) {
        throw StructuralError(what + ": entry out of range");
      }
      out.push_back(v.get<std::uint32_t>());
    }
  }
  return out;
}

}  // namespace

Rack rack_from_json(const ordered_json& j) {
  const std::size_t k = get_size(j, "size", "rack");
  auto op = square_table(j, "op", k, "rack");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw StructuralError("rack: labels must be an array");
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  }
  return Rack(k, std::move(op), std::move(name), std::move(labels));
}

ordered_json rack_to_json(const Rack& x) {
  ordered_json j;
  j["size"] = x.size();
  if (!x.name().empty()) j["name"] = x.name();
  ordered_json op = ordered_json::array();
  for (Elem a = 0; a < x.size(); ++a) {
    ordered_json row = ordered_json::array();
    for (Elem b = 0; b < x.size(); ++b) row.push_back(x.op(a, b));
    op.push_back(std::move(row));
  }
  j["op"] = std::move(op);
  if (!x.labels().empty()) j["labels"] = x.labels();
  return j;
}

BraidedSet braided_set_from_json(const ordered_json& j) {
  const std::size_t k = get_size(j, "size", "braided set");
  if (!j.contains("r") || !j["r"].is_array() || j["r"].size() != k) {
    throw StructuralError("braided set: \"r\" must have " + std::to_string(k) + " rows");
  }
  std::vector<std::pair<Elem, Elem>> r;
  for (const auto& row : j["r"]) {
    if (!row.is_array() || row.size() != k) throw StructuralError("braided set: table is not square");
    for (const auto& pr : row) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_unsigned() || !pr[1].is_number_unsigned()) {
        throw StructuralError("braided set: entries must be [a, b] pairs");
      }
      r.emplace_back(pr[0].get<Elem>(), pr[1].get<Elem>());
    }
  }
  return BraidedSet(k, std::move(r));
}

GroupTable group_from_json(const ordered_json& j) {
  const std::size_t m = get_size(j, "order", "group");
  auto mul = square_table(j, "mul", m, "group");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return GroupTable(m, std::move(mul), std::move(name));
}

ordered_json group_to_json(const GroupTable& g) {
  ordered_json j;
  j["order"] = g.order();
  if (!g.name().empty()) j["name"] = g.name();
  ordered_json mul = ordered_json::array();
  for (GroupElem a = 0; a < g.order(); ++a) {
    ordered_json row = ordered_json::array();
    for (GroupElem b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  return j;
}

Rack load_rack(const std::string& path) {
  const auto j = parse_json(read_file(path), path);
  if (j.is_object() && j.contains("r")) return Rack::from_braided_set(braided_set_from_json(j), path);
  return rack_from_json(j);
}

GroupTable load_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return group_from_json(parse_json(read_file(spec), spec));
  return GroupTable::builtin(spec);
}

ordered_json perm_to_json(const Perm& p) { return p.images(); }

Perm perm_from_json(const ordered_json& j) {
  if (!j.is_array()) throw StructuralError("permutation must be an image array");
  std::vector<Point> img;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw StructuralError("permutation images must be nonnegative integers");
    img.push_back(v.get<Point>());
  }
  try {
    return Perm(std::move(img));
  } catch (const PreconditionError& e) {
    throw StructuralError(e.what());
  }
}

std::vector<Elem> parse_index_list(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (v < 0 || tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
      out.push_back(static_cast<Elem>(v));
    } catch (const std::exception&) {
      throw PreconditionError("bad index '" + tok + "'");
    }
  }
  return out;
}

ordered_json to_json(const ValidationReport& r) {
  return {{"is_bijective", r.is_bijective},       {"satisfies_yang_baxter", r.satisfies_yang_baxter},
          {"is_braided", r.is_braided},           {"is_nondegenerate", r.is_nondegenerate},
          {"is_self_distributive", r.is_self_distributive}, {"is_squarefree", r.is_squarefree}};
}

ordered_json to_json(const Classification& c) {
  ordered_json j{{"respects_blocks", c.respects_blocks},
                 {"is_full_product", c.is_full_product},
                 {"contains_alt_product", c.contains_alt_product},
                 {"inside_even_part", c.inside_even_part}};
  j["sign_image_rank"] = c.sign_image_rank ? ordered_json(*c.sign_image_rank) : ordered_json(nullptr);
  j["order"] = c.order.str();
  return j;
}

ordered_json to_json(const ComponentLabeling& c) {
  return {{"count", c.count}, {"labels", c.labels}, {"component_sizes", c.component_sizes}};
}

ordered_json group_summary(const PermGroup& g) {
  ordered_json gens = ordered_json::array();
  for (const auto& p : g.generators()) gens.push_back(perm_to_json(p));
  return {{"degree", g.degree()}, {"order", g.order().str()}, {"base", g.base()}, {"generators", gens}};
}

ordered_json to_json(const MonodromyReport& r) {
  ordered_json blocks = ordered_json::array();
  for (const auto& b : r.blocks.blocks) blocks.push_back(b);
  return {{"component_counts", r.component_counts},
          {"blocks", blocks},
          {"generates", r.generates},
          {"orbit_size", r.orbit_size},
          {"colored_orbit_size", r.colored_orbit_size},
          {"image_order", r.image.order().str()},
          {"image", group_summary(r.image)},
          {"classification", to_json(r.classification)}};
}

ordered_json to_json(const RelationReport& r) {
  return {{"n", r.length},
          {"tuples_checked", r.tuples_checked},
          {"commutation_checks", r.commutation_checks},
          {"braid_checks", r.braid_checks},
          {"violations", r.violations}};
}

ordered_json to_json(const MultMapReport& r) {
  return {{"surjective", r.surjective},
          {"injective", r.injective},
          {"domain_size", r.domain_size},
          {"codomain_size", r.codomain_size}};
}

ordered_json to_json(const StabilizationTable& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"n_vec", r.n_vec},
                    {"classes", r.classes},
                    {"generating_classes", r.generating_classes},
                    {"stable", r.stable}});
  }
  ordered_json j{{"rack", t.rack_name}, {"rows", rows}};
  j["threshold"] = t.threshold ? ordered_json(*t.threshold) : ordered_json(nullptr);
  j["window"] = t.window;
  return j;
}

ordered_json to_json(const Certificate& c) {
  return {{"group", c.group},
          {"x", c.x},
          {"y", c.y},
          {"n", c.n},
          {"word_applied", c.word_applied},
          {"product_one", c.product_one},
          {"generates", c.generates},
          {"shift_fixes_class", c.shift_fixes_class},
          {"image_is_ncycle", c.image_is_ncycle},
          {"conjugator", c.conjugator},
          {"verified", c.verified},
          {"theorem_applies", c.theorem_applies}};
}

ordered_json to_json(const ChebotarevPrediction& p) {
  ordered_json freq = ordered_json::object();
  for (const auto& [k, v] : p.frequencies) freq[k] = v.str();
  return {{"exact", p.exact}, {"samples", p.samples}, {"frequencies", freq}};
}

ordered_json to_json(const Z2Stats& s) {
  return {{"q", s.q},
          {"n", s.n},
          {"count", s.count},
          {"sum_moebius", s.sum_moebius},
          {"count_irreducible", s.count_irreducible}};
}

ordered_json to_json(const ProductVerdict& v) {
  return {{"hypothesis_holds", v.hypothesis_holds},
          {"abelianization_surjective", v.abelianization_surjective},
          {"projects_onto_factors", v.projects_onto_factors},
          {"projects_onto_isomorphic_pairs", v.projects_onto_isomorphic_pairs},
          {"equals_product", v.equals_product},
          {"consistent", v.consistent},
          {"order", v.order}};
}

ordered_json to_json(const HomogeneityVerdict& v) {
  return {{"k", v.k},
          {"homogeneous", v.homogeneous},
          {"is_alternating", v.is_alternating},
          {"is_symmetric", v.is_symmetric},
          {"consistent", v.consistent}};
}

std::string orbit_lines(const OrbitGraph& o) {
  std::string out;
  for (std::size_t i = 0; i < o.size(); ++i) {
    ordered_json line{{"index", i}, {"tuple", o.member(i)}, {"access_perm", perm_to_json(o.access(i))}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

ordered_json orbit_summary(const OrbitGraph& o, const PermGroup& image, const Classification* c) {
  ordered_json j{{"orbit_size", o.size()},
                 {"colored", o.colored()},
                 {"colored_orbit_size", o.colored_size()},
                 {"canonical_representative", o.canonical_representative()},
                 {"image_order", image.order().str()}};
  if (c) j["classification"] = to_json(*c);
  return j;
}

ordered_json to_json(const ReproHeader& h) {
  return {{"tool", h.tool}, {"version", h.version}, {"command", h.command}, {"config", h.config}, {"seed", h.seed}};
}

std::string csv_header(const ReproHeader& h) {
  return "# tool: " + h.tool + "\n# version: " + h.version + "\n# command: " + h.command +
         "\n# config: " + h.config.dump() + "\n# seed: " + std::to_string(h.seed) + "\n";
}

}  // namespace hurwitz::io
