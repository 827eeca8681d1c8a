// hurwitz: command-line driver. Exit codes: 0 ok, 2 precondition,
// 3 resource budget, 1 internal invariant failure.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hurwitz/braid.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/ffstats.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/nielsen.hpp"
#include "hurwitz/perm_group.hpp"
#include "hurwitz/rack.hpp"
#include "hurwitz/semigroup.hpp"

using namespace hurwitz;
using io::ordered_json;

namespace {

struct Global {
  std::string output = "-";
  int threads = 0;
  std::uint64_t seed = 1;
  std::size_t cap = 50'000'000;
  std::string format = "json";
};

Global global;
std::string command_path;
ordered_json config_echo = ordered_json::object();

void write_artifact(const std::string& text) {
  if (global.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(global.output, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + global.output);
  out << text;
}

io::ReproHeader header() {
  io::ReproHeader h;
  h.command = command_path;
  h.config = config_echo;
  h.seed = global.seed;
  return h;
}

std::string json_artifact(const ordered_json& result) {
  ordered_json j{{"header", io::to_json(header())}, {"result", result}};
  return j.dump(2) + "\n";
}

// Everything the user set except options that must not affect artifacts.
void collect_config(const CLI::App* app, const std::string& prefix) {
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string& lname = opt->get_lnames().front();
    if (lname == "help" || lname == "output" || lname == "threads" || lname == "config" || lname == "version") continue;
    const std::string key = prefix.empty() ? lname : prefix + "." + lname;
    if (opt->count() > 0) {
      if (opt->get_expected_max() == 0) {
        config_echo[key] = true;
      } else {
        const auto res = opt->results();
        std::string joined;
        for (std::size_t i = 0; i < res.size(); ++i) joined += (i ? " " : "") + res[i];
        config_echo[key] = joined;
      }
    } else if (!opt->get_default_str().empty()) {
      config_echo[key] = opt->get_default_str();
    }
  }
  for (const CLI::App* sub : app->get_subcommands()) {
    command_path += (command_path.empty() ? "" : " ") + sub->get_name();
    collect_config(sub, prefix.empty() ? sub->get_name() : prefix + "." + sub->get_name());
  }
}

OrbitOptions orbit_options() {
  OrbitOptions o;
  o.cap = global.cap;
  o.threads = global.threads;
  o.execution = Execution::parallel;
  return o;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    if (tok.find_first_not_of(" \t") != std::string::npos) out.push_back(tok);
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (Elem e : io::parse_index_list(text)) out.push_back(e);
  return out;
}

GroupElem parse_elem(const GroupTable& g, const std::string& text) {
  if (text.find('(') != std::string::npos) {
    if (!g.perms()) throw PreconditionError("cycle notation needs a permutation group");
    const auto idx = g.index_of(Perm::parse_cycles(text, g.perms()->front().degree()));
    if (!idx) throw PreconditionError("permutation " + text + " is not in the group");
    return *idx;
  }
  const auto v = io::parse_index_list(text);
  if (v.size() != 1 || v[0] >= g.order()) throw PreconditionError("bad group element '" + text + "'");
  return v[0];
}

std::vector<Perm> parse_gens(const std::string& text, std::size_t degree) {
  std::vector<Perm> out;
  for (const auto& s : split(text, ';')) out.push_back(Perm::parse_cycles(s, degree));
  return out;
}

ordered_json group_tuple_json(const GroupTable& g, const GroupTuple& t) {
  ordered_json labels = ordered_json::array();
  for (GroupElem e : t) labels.push_back(g.label(e));
  return {{"tuple", t}, {"labels", labels}};
}

int run(int argc, char** argv) {
  CLI::App app{"Braid actions on racks, monodromy images and factorization statistics"};
  app.set_version_flag("--version", std::string(HURWITZ_VERSION));
  app.set_config("--config", "", "TOML/INI config file (flags override it)");
  app.option_defaults()->always_capture_default();
  app.add_option("--output,-o", global.output, "Artifact path, - for stdout");
  app.add_option("--threads", global.threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", global.seed, "Seed for sampled modes");
  app.add_option("--cap", global.cap, "Orbit member cap")->check(CLI::PositiveNumber);
  app.add_option("--format", global.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.require_subcommand(1);
  app.fallthrough();

  std::function<void()> action;

  // rack
  auto* rack = app.add_subcommand("rack", "Rack and braided-set tools");
  rack->require_subcommand(1);
  std::string rack_file;
  {
    auto* v = rack->add_subcommand("validate", "Check braided-set / rack axioms");
    v->add_option("--file,-f", rack_file, "Rack or braided-set JSON")->required();
    v->callback([&] {
      action = [&] {
        const auto j = io::parse_json(io::read_file(rack_file), rack_file);
        ordered_json res;
        if (j.is_object() && j.contains("r")) {
          res = io::to_json(validate_braided_set(io::braided_set_from_json(j)));
        } else {
          const Rack x = io::rack_from_json(j);
          res = io::to_json(validate_braided_set(x.to_braided_set()));
          res["is_quandle"] = x.is_quandle();
        }
        write_artifact(json_artifact(res));
      };
    });

    auto* c = rack->add_subcommand("components", "Connected components");
    c->add_option("--file,-f", rack_file)->required();
    c->callback([&] {
      action = [&] {
        const Rack x = io::load_rack(rack_file);
        write_artifact(json_artifact(io::to_json(components(x))));
      };
    });

    auto* inn = rack->add_subcommand("inn", "Inner group, element orders and the central word");
    inn->add_option("--file,-f", rack_file)->required();
    inn->callback([&] {
      action = [&] {
        const Rack x = io::load_rack(rack_file);
        std::vector<std::uint64_t> m;
        for (Elem e = 0; e < x.size(); ++e) m.push_back(element_inn_order(x, e));
        ordered_json res{{"inner_group", io::group_summary(inner_group(x))},
                         {"element_orders", m},
                         {"central_word", central_word_z(x)}};
        write_artifact(json_artifact(res));
      };
    });
  }
  std::string make_group, make_seeds;
  {
    auto* mk = rack->add_subcommand("make", "Conjugation rack of a group");
    mk->add_option("--group,-g", make_group, "Builtin (S3, A5, D4, ...) or group JSON")->required();
    mk->add_option("--seeds", make_seeds, "Class representatives separated by ';'")->required();
    mk->callback([&] {
      action = [&] {
        const GroupTable g = io::load_group(make_group);
        std::vector<GroupElem> seeds;
        for (const auto& s : split(make_seeds, ';')) seeds.push_back(parse_elem(g, s));
        const auto cr = conjugation_rack(g, seeds);
        auto j = io::rack_to_json(cr.rack);
        j["embedding"] = cr.embedding;
        write_artifact(j.dump() + "\n");
      };
    });
  }

  // braid
  auto* braid = app.add_subcommand("braid", "Braid-group orbits and monodromy");
  braid->require_subcommand(1);
  std::string tuple_text;
  bool colored = false, dump = false;
  std::size_t rel_n = 4;
  {
    auto* o = braid->add_subcommand("orbit", "Orbit of a tuple");
    o->add_option("--rack,-r", rack_file)->required();
    o->add_option("--tuple,-t", tuple_text, "Comma-separated element indices")->required();
    o->add_flag("--colored", colored, "Restrict to the seed's component block");
    o->add_flag("--dump", dump, "Emit one JSON line per member before the summary");
    o->callback([&] {
      action = [&] {
        const Rack x = io::load_rack(rack_file);
        auto opts = orbit_options();
        opts.colored = colored;
        const auto orb = orbit(x, io::parse_index_list(tuple_text), opts);
        const auto img = stabilizer_image(orb, opts.execution, opts.threads);
        std::string out = io::to_json(header()).dump() + "\n";
        if (dump) out += io::orbit_lines(orb);
        out += io::orbit_summary(orb, img, nullptr).dump() + "\n";
        write_artifact(out);
      };
    });

    auto* m = braid->add_subcommand("monodromy", "Stabilizer image and its classification");
    m->add_option("--rack,-r", rack_file)->required();
    m->add_option("--tuple,-t", tuple_text)->required();
    m->callback([&] {
      action = [&] {
        const Rack x = io::load_rack(rack_file);
        const auto rep = classify_monodromy(x, io::parse_index_list(tuple_text), orbit_options());
        write_artifact(json_artifact(io::to_json(rep)));
      };
    });

    auto* rel = braid->add_subcommand("relations-test", "Exhaustive braid-relation check on X^n");
    rel->add_option("--rack,-r", rack_file)->required();
    rel->add_option("--n", rel_n)->check(CLI::Range(1, 12));
    rel->callback([&] {
      action = [&] {
        const Rack x = io::load_rack(rack_file);
        const auto rep = check_braid_relations(x, rel_n);
        write_artifact(json_artifact(io::to_json(rep)));
        if (rep.violations != 0) throw InvariantError("braid relations violated");
      };
    });
  }

  // semigroup
  auto* semi = app.add_subcommand("semigroup", "Structure-semigroup experiments");
  semi->require_subcommand(1);
  std::vector<std::string> ranges;
  std::string w_text, nvec_text;
  {
    auto* t = semi->add_subcommand("table", "Class counts over a window of n_vec");
    t->add_option("--rack,-r", rack_file)->required();
    t->add_option("--range", ranges, "lo:hi per component")->required();
    t->callback([&] {
      action = [&] {
        Semigroup s(io::load_rack(rack_file), orbit_options());
        std::vector<std::pair<std::size_t, std::size_t>> r;
        for (const auto& text : ranges) {
          const auto parts = split(text, ':');
          if (parts.size() != 2) throw PreconditionError("range must be lo:hi");
          r.emplace_back(std::stoul(parts[0]), std::stoul(parts[1]));
        }
        const auto table = s.stabilization_table(r);
        if (global.format == "csv") {
          write_artifact(io::csv_header(header()) + stabilization_csv(table));
        } else {
          write_artifact(json_artifact(io::to_json(table)));
        }
      };
    });

    auto* mc = semi->add_subcommand("multcheck", "Injectivity/surjectivity of left multiplication by w");
    mc->add_option("--rack,-r", rack_file)->required();
    mc->add_option("--w", w_text, "Comma-separated element indices")->required();
    mc->add_option("--n-vec", nvec_text, "Comma-separated counts per component")->required();
    mc->callback([&] {
      action = [&] {
        Semigroup s(io::load_rack(rack_file), orbit_options());
        const auto rep = s.mult_map_check(io::parse_index_list(w_text), parse_sizes(nvec_text));
        write_artifact(json_artifact(io::to_json(rep)));
      };
    });
  }

  // nielsen
  auto* niel = app.add_subcommand("nielsen", "Group tuples, abundance and certificates");
  niel->require_subcommand(1);
  std::string group_spec, classes_text, counts_text, x_text, y_text;
  bool no_product_one = false, up_to_conj = false;
  std::uint64_t max_nodes = 100'000'000, limit = 0;
  std::size_t cert_n = 0;
  {
    auto* e = niel->add_subcommand("enumerate", "Stream generating tuples from prescribed classes");
    e->add_option("--group,-g", group_spec)->required();
    e->add_option("--classes", classes_text, "Class representatives separated by ';'")->required();
    e->add_option("--counts", counts_text, "Comma-separated n_j")->required();
    e->add_flag("--no-product-one", no_product_one);
    e->add_flag("--up-to-conj", up_to_conj);
    e->add_option("--max-nodes", max_nodes)->check(CLI::PositiveNumber);
    e->add_option("--limit", limit, "Stop after this many tuples (0: all)");
    e->callback([&] {
      action = [&] {
        const GroupTable g = io::load_group(group_spec);
        std::vector<GroupElem> seeds;
        for (const auto& s : split(classes_text, ';')) seeds.push_back(parse_elem(g, s));
        NielsenOptions opts;
        opts.product_one = !no_product_one;
        opts.up_to_conj = up_to_conj;
        opts.max_nodes = max_nodes;
        std::string out = io::to_json(header()).dump() + "\n";
        std::uint64_t emitted = 0;
        enumerate_nielsen(g, seeds, parse_sizes(counts_text), opts, [&](const GroupTuple& t) {
          out += group_tuple_json(g, t).dump() + "\n";
          ++emitted;
          return limit == 0 || emitted < limit;
        });
        out += ordered_json{{"count", emitted}}.dump() + "\n";
        write_artifact(out);
      };
    });

    auto* a = niel->add_subcommand("abundance", "Search y with <x^(y^r)> = G");
    a->add_option("--group,-g", group_spec)->required();
    a->add_option("--x", x_text)->required();
    a->callback([&] {
      action = [&] {
        const GroupTable g = io::load_group(group_spec);
        const GroupElem x = parse_elem(g, x_text);
        const auto y = find_abundant(g, x);
        ordered_json res{{"group", g.name()}, {"x", g.label(x)}, {"abundant", y.has_value()}};
        res["y"] = y ? ordered_json(g.label(*y)) : ordered_json(nullptr);
        write_artifact(json_artifact(res));
      };
    });

    auto* c = niel->add_subcommand("certificate", "n-cycle certificate from an abundant class");
    c->add_option("--group,-g", group_spec)->required();
    c->add_option("--x", x_text)->required();
    c->add_option("--y", y_text)->required();
    c->add_option("--n", cert_n)->required();
    c->callback([&] {
      action = [&] {
        const GroupTable g = io::load_group(group_spec);
        const auto cert = abundant_ncycle_certificate(g, parse_elem(g, x_text), parse_elem(g, y_text), cert_n);
        write_artifact(json_artifact(io::to_json(cert)));
      };
    });

    auto* d = niel->add_subcommand("dnormal", "max(d(G^ab), 1)");
    d->add_option("--group,-g", group_spec)->required();
    d->callback([&] {
      action = [&] {
        const GroupTable g = io::load_group(group_spec);
        write_artifact(json_artifact({{"group", g.name()}, {"order", g.order()}, {"d_normal", d_normal(g)}}));
      };
    });
  }

  // ffstats
  auto* ff = app.add_subcommand("ffstats", "Polynomial statistics over prime fields");
  ff->require_subcommand(1);
  std::vector<std::uint32_t> qs;
  std::vector<std::size_t> ns;
  bool list_polys = false, allow_sampling = false;
  std::string gens_text, blocks_text, family;
  std::size_t degree = 0;
  std::uint64_t samples = 100'000, max_exact = 10'000'000;
  {
    auto* sq = ff->add_subcommand("squarefree", "Count (or list) monic squarefree polynomials");
    sq->add_option("--q", qs)->required()->expected(1);
    sq->add_option("--n", ns)->required()->expected(1);
    sq->add_flag("--list", list_polys);
    sq->callback([&] {
      action = [&] {
        std::uint64_t count = 0;
        ordered_json polys = ordered_json::array();
        squarefree_polys(qs[0], ns[0], [&](const PrimeFieldPoly& f) {
          ++count;
          if (list_polys) {
            const auto t = factorization_type(f);
            const auto ml = moebius_and_lambda(t);
            polys.push_back({{"coeffs", f.coeffs()}, {"type", t}, {"mu", ml.mu}, {"lambda", ml.lambda}});
          }
          return true;
        });
        ordered_json res{{"q", qs[0]}, {"n", ns[0]}, {"count", count}};
        if (list_polys) res["polynomials"] = polys;
        write_artifact(json_artifact(res));
      };
    });

    auto* pr = ff->add_subcommand("predict", "Cycle-type frequencies |Delta ∩ H| / |H|");
    pr->add_option("--gens", gens_text, "Generators in cycle notation separated by ';'");
    pr->add_option("--family", family, "S or A: product of symmetric / alternating groups on the blocks")
        ->check(CLI::IsMember({"S", "A"}));
    pr->add_option("--degree", degree);
    pr->add_option("--blocks", blocks_text, "Comma-separated contiguous block sizes");
    pr->add_flag("--allow-sampling", allow_sampling);
    pr->add_option("--samples", samples)->check(CLI::PositiveNumber);
    pr->add_option("--max-exact", max_exact);
    pr->callback([&] {
      action = [&] {
        std::vector<std::size_t> sizes = blocks_text.empty() ? std::vector<std::size_t>{} : parse_sizes(blocks_text);
        std::size_t n = degree;
        if (sizes.empty()) {
          if (n == 0) throw PreconditionError("predict: give --degree or --blocks");
          sizes = {n};
        }
        std::size_t total = 0;
        for (auto s : sizes) total += s;
        if (n == 0) n = total;
        if (total != n) throw PreconditionError("predict: block sizes must sum to the degree");
        const auto blocks = BlockStructure::contiguous(sizes);
        std::vector<Perm> gens;
        if (!gens_text.empty()) {
          gens = parse_gens(gens_text, n);
        } else if (!family.empty()) {
          std::size_t start = 0;
          for (auto s : sizes) {
            for (std::size_t i = start; i + 1 < start + s; ++i) {
              if (family == "S") {
                gens.push_back(Perm::transposition(n, static_cast<Point>(i), static_cast<Point>(i + 1)));
              } else if (i + 2 < start + s) {
                gens.push_back(Perm::parse_cycles("(" + std::to_string(i + 1) + " " + std::to_string(i + 2) + " " +
                                                      std::to_string(i + 3) + ")",
                                                  n));
              }
            }
            start += s;
          }
        } else {
          throw PreconditionError("predict: give --gens or --family");
        }
        const PermGroup h(gens, n);
        ChebotarevOptions opts;
        opts.allow_sampling = allow_sampling;
        opts.samples = samples;
        opts.seed = global.seed;
        opts.max_exact = max_exact;
        auto res = io::to_json(chebotarev_predict(h, blocks, opts));
        res["group_order"] = h.order().str();
        write_artifact(json_artifact(res));
      };
    });

    auto* z2 = ff->add_subcommand("z2", "Quadratic-extension statistics over monic squarefree f");
    z2->add_option("--q", qs, "Odd primes")->required();
    z2->add_option("--n", ns, "Even degrees")->required();
    z2->callback([&] {
      action = [&] {
        std::vector<Z2Stats> rows;
        for (auto q : qs) {
          for (auto n : ns) rows.push_back(z2_extension_stats(q, n, Execution::parallel, global.threads));
        }
        if (global.format == "json") {
          ordered_json arr = ordered_json::array();
          for (const auto& r : rows) arr.push_back(io::to_json(r));
          write_artifact(json_artifact(arr));
        } else {
          write_artifact(io::csv_header(header()) + z2_csv(rows));
        }
      };
    });
  }

  // perm
  auto* perm = app.add_subcommand("perm", "Permutation-group predicates");
  perm->require_subcommand(1);
  std::size_t hom_k = 0;
  std::string subgroups_text, mode = "exhaustive";
  std::size_t max_exhaustive_degree = 8;
  {
    auto* cl = perm->add_subcommand("classify", "Position of <gens> relative to a block product");
    cl->add_option("--gens", gens_text)->required();
    cl->add_option("--degree", degree)->required();
    cl->add_option("--blocks", blocks_text, "Comma-separated contiguous block sizes");
    cl->callback([&] {
      action = [&] {
        const PermGroup h(parse_gens(gens_text, degree), degree);
        std::vector<std::size_t> sizes = blocks_text.empty() ? std::vector<std::size_t>{degree} : parse_sizes(blocks_text);
        auto res = io::to_json(classify_in_product(h, BlockStructure::contiguous(sizes)));
        write_artifact(json_artifact(res));
      };
    });

    auto* hg = perm->add_subcommand("homogeneous", "k-homogeneity and the A_n/S_n dichotomy");
    hg->add_option("--gens", gens_text)->required();
    hg->add_option("--degree", degree)->required();
    hg->add_option("--k", hom_k, "Subset size (default floor(n/2))");
    hg->callback([&] {
      action = [&] {
        const PermGroup h(parse_gens(gens_text, degree), degree);
        auto res = io::to_json(check_homogeneity_dichotomy(h));
        if (hom_k > 0) res["k_homogeneous"] = {{"k", hom_k}, {"value", k_homogeneous(h, hom_k)}};
        res["order"] = h.order().str();
        write_artifact(json_artifact(res));
      };
    });

    auto* inv = perm->add_subcommand("invariable", "Invariable generation of S_n");
    inv->add_option("--subgroups", subgroups_text, "Subgroups separated by '|', generators by ';'")->required();
    inv->add_option("--degree", degree)->required();
    inv->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    inv->add_option("--samples", samples)->check(CLI::PositiveNumber);
    inv->add_option("--max-exhaustive-degree", max_exhaustive_degree);
    inv->callback([&] {
      action = [&] {
        std::vector<std::vector<Perm>> subs;
        for (const auto& s : split(subgroups_text, '|')) subs.push_back(parse_gens(s, degree));
        InvariableOptions opts;
        opts.mode = mode == "exhaustive" ? InvariableMode::exhaustive : InvariableMode::sampled;
        opts.samples = samples;
        opts.seed = global.seed;
        opts.max_exhaustive_degree = max_exhaustive_degree;
        const bool ok = invariably_generates(subs, degree, opts);
        write_artifact(json_artifact({{"degree", degree}, {"mode", mode}, {"invariably_generates", ok}}));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw PreconditionError(std::string("usage: ") + e.what());
  }
  collect_config(&app, "");
  if (action) action();
  return 0;
}

void report(const char* kind, const std::exception& e) {
  ordered_json j{{"error", kind}, {"message", e.what()}};
  std::cerr << j.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ResourceError& e) {
    report("resource", e);
    return 3;
  } catch (const StructuralError& e) {
    report("structural", e);
    return 2;
  } catch (const PreconditionError& e) {
    report("precondition", e);
    return 2;
  } catch (const InvariantError& e) {
    report("invariant", e);
    return 1;
  } catch (const std::invalid_argument& e) {
    report("precondition", e);
    return 2;
  } catch (const std::out_of_range& e) {
    report("precondition", e);
    return 2;
  } catch (const std::exception& e) {
    report("internal", e);
    return 1;
  }
}
