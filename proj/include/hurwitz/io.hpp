#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/braid.hpp"
#include "hurwitz/ffstats.hpp"
#include "hurwitz/group_table.hpp"
#include "hurwitz/nielsen.hpp"
#include "hurwitz/product_criterion.hpp"
#include "hurwitz/rack.hpp"
#include "hurwitz/semigroup.hpp"

namespace hurwitz::io {

using nlohmann::ordered_json;

// Whole-file read; PreconditionError if missing.
std::string read_file(const std::string& path);
ordered_json parse_json(const std::string& text, const std::string& what);

// {"size": k, "op": [[...]], "name": str?, "labels": [...]?}, op[x][y] = x^y.
Rack rack_from_json(const ordered_json& j);
ordered_json rack_to_json(const Rack& x);
// {"size": k, "r": [[[a, b], ...], ...]}
BraidedSet braided_set_from_json(const ordered_json& j);
// {"order": m, "mul": [[...]], "name": str?}
GroupTable group_from_json(const ordered_json& j);
ordered_json group_to_json(const GroupTable& g);

Rack load_rack(const std::string& path);
// A builtin name such as "S3" or "D4", otherwise a group file.
GroupTable load_group(const std::string& spec);

ordered_json perm_to_json(const Perm& p);
Perm perm_from_json(const ordered_json& j);
std::vector<Elem> parse_index_list(const std::string& text);

ordered_json to_json(const ValidationReport& r);
ordered_json to_json(const Classification& c);
ordered_json to_json(const ComponentLabeling& c);
ordered_json to_json(const MonodromyReport& r);
ordered_json to_json(const RelationReport& r);
ordered_json to_json(const MultMapReport& r);
ordered_json to_json(const StabilizationTable& t);
ordered_json to_json(const Certificate& c);
ordered_json to_json(const ChebotarevPrediction& p);
ordered_json to_json(const Z2Stats& s);
ordered_json to_json(const ProductVerdict& v);
ordered_json to_json(const HomogeneityVerdict& v);
ordered_json group_summary(const PermGroup& g);

// One JSON line per member: {index, tuple, access_perm}.
std::string orbit_lines(const OrbitGraph& o);
ordered_json orbit_summary(const OrbitGraph& o, const PermGroup& image, const Classification* c);

struct ReproHeader {
  std::string tool = "hurwitz";
  std::string version = HURWITZ_VERSION;
  std::string command;
  ordered_json config = ordered_json::object();
  std::uint64_t seed = 0;
};
ordered_json to_json(const ReproHeader& h);
// '#'-prefixed lines for CSV artifacts.
std::string csv_header(const ReproHeader& h);

}  // namespace hurwitz::io
