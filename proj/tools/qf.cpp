// Command-line front end for the qf library.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qf/classify.hpp"
#include "qf/errors.hpp"
#include "qf/group.hpp"
#include "qf/knot.hpp"
#include "qf/presentation.hpp"
#include "qf/quandle.hpp"
#include "qf/serialize.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::size_t budget = qf::kDefaultBudget;
  std::string format = "text";
  std::string catalog_path;
  std::int64_t n = 0;
  std::int64_t s = 1;
  std::string target = "R3";
  bool table = false;
  std::vector<std::string> args;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// "-" reads standard input; anything else is the text itself.
std::string text_arg(const std::string& arg) {
  if (arg == "-") return read_all(std::cin);
  return arg;
}

bool starts_with_keyword(const std::string& text, const std::string& keyword) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text.compare(first, keyword.size(), keyword) == 0;
}

const qf::Catalog& catalog(const Options& o) {
  static std::optional<qf::Catalog> loaded;
  if (o.catalog_path.empty()) return qf::builtin_catalog();
  if (!loaded) loaded = qf::Catalog::load(o.catalog_path, o.budget);
  return *loaded;
}

// A quandle given as a presentation, a table (file or stdin), or R<m>.
qf::FiniteQuandle quandle_arg(const std::string& arg, const Options& o) {
  if (arg.size() > 1 && arg[0] == 'R' &&
      arg.find_first_not_of("0123456789", 1) == std::string::npos) {
    const auto m = std::stoul(arg.substr(1));
    if (m == 0 || m > 100000) throw qf::InvalidArgument("dihedral order out of range: " + arg);
    return qf::FiniteQuandle::dihedral(m);
  }
  std::string text;
  if (arg == "-") {
    text = read_all(std::cin);
  } else if (starts_with_keyword(arg, "quandle<")) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw qf::InvalidArgument("cannot read '" + arg + "'");
    text = read_all(in);
  }
  if (starts_with_keyword(text, "quandle<"))
    return qf::complete(qf::parse_quandle_presentation(text), o.budget).quandle;
  std::istringstream in(text);
  return qf::read_quandle_table(in);
}

qf::FiniteGroup group_arg(const std::string& arg, const Options& o) {
  std::string text;
  if (arg == "-") {
    text = read_all(std::cin);
  } else if (starts_with_keyword(arg, "group<") || !std::filesystem::exists(arg)) {
    text = arg;
  } else {
    std::ifstream in(arg);
    text = read_all(in);
  }
  if (starts_with_keyword(text, "group<"))
    return qf::group_from_presentation(qf::parse_group_presentation(text), o.budget);
  std::istringstream in(text);
  return qf::read_group_table(in);
}

qf::KnotSpec knot_arg(const std::string& arg, const Options& o) {
  return catalog(o).lookup(arg);
}

std::int64_t int_arg(const std::string& arg) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(arg, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != arg.size()) throw qf::InvalidArgument("not an integer: '" + arg + "'");
  return v;
}

void print_profile(const qf::FiniteQuandle& q, const Options& o) {
  const qf::InvariantProfile p = qf::invariant_profile(q);
  if (json_out(o)) {
    std::cout << qf::to_json(p, 2) << "\n";
    return;
  }
  std::cout << "order " << p.order << "\ntype " << p.type << "\nconnected "
            << (p.connected ? "yes" : "no") << "\norbit_sizes";
  for (auto s : p.orbit_sizes) std::cout << ' ' << s;
  std::cout << "\ninner_group_order " << p.inner_group_order << "\ncolorings R3 "
            << p.colorings_r3 << " R5 " << p.colorings_r5 << "\n";
  if (o.table) qf::write_quandle_table(std::cout, q);
}

Json table_json(const qf::FiniteQuandle& q) {
  Json rows = Json::array();
  for (qf::Index x = 0; x < q.order(); ++x) {
    Json row = Json::array();
    for (qf::Index y = 0; y < q.order(); ++y) row.push_back(q.op(x, y));
    rows.push_back(row);
  }
  return rows;
}

int cmd_group(const Options& o) {
  const qf::FiniteGroup g = group_arg(o.args.at(0), o);
  const auto hist = qf::order_histogram(g);
  if (json_out(o)) {
    Json h = Json::object();
    for (const auto& [ord, count] : hist) h[std::to_string(ord)] = count;
    Json j{{"order", g.order()}, {"element_orders", h}};
    if (g.order() <= qf::kDefaultGroupCap) j["automorphisms"] = qf::automorphisms(g).size();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "order " << g.order() << "\nelement_orders";
  for (const auto& [ord, count] : hist) std::cout << ' ' << ord << ':' << count;
  std::cout << "\n";
  if (g.order() <= qf::kDefaultGroupCap)
    std::cout << "automorphisms " << qf::automorphisms(g).size() << "\n";
  if (o.table) qf::write_group_table(std::cout, g);
  return 0;
}

int cmd_galex(const Options& o) {
  const qf::FiniteGroup g = group_arg(o.args.at(0), o);
  if (o.n < 1) throw qf::InvalidArgument("galex needs --n, the order of the automorphism");
  for (const auto& f : qf::automorphisms(g)) {
    if (qf::automorphism_order(f) != static_cast<std::uint64_t>(o.n)) continue;
    print_profile(qf::galex(g, qf::power(f, o.s)), o);
    return 0;
  }
  throw qf::NotFound("the group has no automorphism of order " + std::to_string(o.n));
}

int cmd_complete(const Options& o) {
  const qf::CompletionResult r =
      qf::complete(qf::parse_quandle_presentation(text_arg(o.args.at(0))), o.budget);
  if (json_out(o)) {
    Json j = Json::parse(qf::completion_header(r));
    j["table"] = table_json(r.quandle);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << qf::completion_header(r) << "\n";
  qf::write_quandle_table(std::cout, r.quandle);
  return 0;
}

int cmd_type(const Options& o) {
  const auto t = qf::type_of(quandle_arg(o.args.at(0), o));
  if (json_out(o)) {
    std::cout << Json{{"type", t}}.dump(2) << "\n";
  } else {
    std::cout << t << "\n";
  }
  return 0;
}

int cmd_iso(const Options& o) {
  const auto a = quandle_arg(o.args.at(0), o);
  const auto b = quandle_arg(o.args.at(1), o);
  const auto map = qf::isomorphic(a, b);
  if (json_out(o)) {
    Json j{{"isomorphic", map.has_value()}};
    if (map) j["map"] = *map;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (!map) {
    std::cout << "not isomorphic\n";
    return 0;
  }
  std::cout << "isomorphic\nmap";
  for (auto v : *map) std::cout << ' ' << v;
  std::cout << "\n";
  return 0;
}

int cmd_colorings(const Options& o) {
  const auto q = quandle_arg(o.args.at(0), o);
  const auto target = quandle_arg(o.target, o);
  const auto count = qf::hom_count(q, target);
  if (json_out(o)) {
    std::cout << Json{{"target", o.target}, {"colorings", count}}.dump(2) << "\n";
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

int cmd_twist_spin(const Options& o) {
  const qf::TwistSpinSpec spec(knot_arg(o.args.at(0), o), o.n, 1);
  const auto p = qf::twist_spin_presentation(spec);
  const auto family = qf::finite_family(spec);
  const auto r = qf::complete(p, o.budget);
  const auto profile = qf::invariant_profile(r.quandle);
  if (json_out(o)) {
    Json j{{"knot", spec.knot.name()},
           {"n", spec.n},
           {"family", family ? Json(qf::to_string(*family)) : Json(nullptr)},
           {"presentation", qf::to_string(p)},
           {"profile", Json::parse(qf::to_json(profile))}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "knot " << spec.knot.name() << "\nn " << spec.n << "\nfamily "
            << (family ? qf::to_string(*family) : "none") << "\npresentation "
            << qf::to_string(p) << "\n";
  print_profile(r.quandle, o);
  return 0;
}

int cmd_branched(const Options& o) {
  const qf::TwistSpinSpec spec(knot_arg(o.args.at(0), o), o.n, o.s);
  const qf::CatalogEntry* entry = nullptr;
  try {
    entry = &catalog(o).resolve(spec.knot);
  } catch (const qf::NotFound&) {
  }
  const qf::CatalogTwist* twist = entry ? entry->twist(spec.n) : nullptr;
  if (!twist)
    throw qf::OutsideFiniteCatalog("no catalog group for " + spec.knot.name() + " with n=" +
                                   std::to_string(spec.n));
  const auto q = qf::branched_twist_spin_quandle(spec, twist->group, twist->monodromy);
  if (json_out(o)) {
    Json j{{"knot", spec.knot.name()},
           {"n", spec.n},
           {"s", spec.s},
           {"profile", Json::parse(qf::to_json(qf::invariant_profile(q)))}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "knot " << spec.knot.name() << "\nn " << spec.n << "\ns " << spec.s << "\n";
  print_profile(q, o);
  return 0;
}

int cmd_classify(const Options& o) {
  const qf::TwistSpinSpec a(knot_arg(o.args.at(0), o), int_arg(o.args.at(1)));
  const qf::TwistSpinSpec b(knot_arg(o.args.at(2), o), int_arg(o.args.at(3)));
  const qf::Certificate c = qf::classify(a, b, catalog(o));
  if (json_out(o)) {
    std::cout << qf::to_json(c, 2) << "\n";
    return 0;
  }
  std::cout << "verdict " << (c.equivalent ? "equivalent" : "not_equivalent") << "\nbasis "
            << c.basis << "\n";
  for (const auto& w : c.witnesses)
    std::cout << "witness " << w.invariant << ' ' << w.a << ' ' << w.b << "\n";
  std::cout << "quandle_isomorphic " << (c.quandles_isomorphic ? "yes" : "no")
            << "\ngroup_isomorphic " << (c.groups_isomorphic ? "yes" : "no") << "\n";
  for (const auto& s : c.caveats) std::cout << "caveat " << s << "\n";
  return 0;
}

int cmd_triple(const Options& o) {
  const auto r = qf::triple_report(int_arg(o.args.at(0)), int_arg(o.args.at(1)),
                                   int_arg(o.args.at(2)), catalog(o));
  if (json_out(o)) {
    std::cout << qf::to_json(r, 2) << "\n";
    return 0;
  }
  std::cout << "triple " << r.pqr[0] << ' ' << r.pqr[1] << ' ' << r.pqr[2] << "\n";
  for (const auto& m : r.members)
    std::cout << m.label << ' ' << m.knot << " n=" << m.n << " order " << m.order << " type "
              << m.type << "\n";
  const char* pairs[3] = {"F1-F2", "F1-F3", "F2-F3"};
  for (int k = 0; k < 3; ++k)
    std::cout << pairs[k] << " groups " << (r.groups_isomorphic[k] ? "isomorphic" : "distinct")
              << " quandles " << (r.quandles_isomorphic[k] ? "isomorphic" : "distinct") << "\n";
  return 0;
}

int cmd_census(const Options& o) {
  const auto order = int_arg(o.args.at(0));
  if (order < 1 || order > 5) throw qf::InvalidArgument("census covers orders 1..5");
  const auto all = qf::enumerate_quandles(static_cast<std::size_t>(order));
  if (json_out(o)) {
    Json list = Json::array();
    for (const auto& q : all)
      list.push_back(Json{{"profile", Json::parse(qf::to_json(qf::invariant_profile(q)))},
                          {"table", table_json(q)}});
    std::cout << Json{{"order", order}, {"count", all.size()}, {"quandles", list}}.dump(2)
              << "\n";
    return 0;
  }
  std::cout << "count " << all.size() << "\n";
  for (const auto& q : all) qf::write_quandle_table(std::cout, q);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quandles of twist-spun knots"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Element budget for enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--catalog", o.catalog_path, "Catalog JSON file")->check(CLI::ExistingFile);
  };
  struct Command {
    const char* name;
    const char* help;
    std::size_t args;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"group", "Build a group from a presentation or table", 1, cmd_group},
      {"galex", "Generalized Alexander quandle of a group (--n, --s)", 1, cmd_galex},
      {"complete", "Complete a quandle presentation to a table", 1, cmd_complete},
      {"type", "Type of a quandle", 1, cmd_type},
      {"iso", "Quandle isomorphism test", 2, cmd_iso},
      {"colorings", "Count homomorphisms to a target quandle (--target)", 1, cmd_colorings},
      {"twist-spin", "Knot quandle of a twist spin (--n)", 1, cmd_twist_spin},
      {"branched", "Knot quandle of a branched twist spin (--n, --s)", 1, cmd_branched},
      {"classify", "Compare two twist spins: KNOT N KNOT N", 4, cmd_classify},
      {"triple", "Group-equivalent, quandle-distinct triple: P Q R", 3, cmd_triple},
      {"census", "All quandles of a given order up to isomorphism", 1, cmd_census},
  };
  int (*selected)(const Options&) = nullptr;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub);
    sub->add_option("args", o.args, "Positional arguments")
        ->expected(static_cast<int>(c.args))
        ->required()
        ->allow_extra_args(false);
    if (std::string(c.name) == "galex" || std::string(c.name) == "twist-spin" ||
        std::string(c.name) == "branched")
      sub->add_option("--n", o.n, "Twist number / automorphism order")->required();
    if (std::string(c.name) == "galex" || std::string(c.name) == "branched")
      sub->add_option("--s", o.s, "Power of the monodromy")->check(CLI::PositiveNumber);
    if (std::string(c.name) == "colorings")
      sub->add_option("--target", o.target, "R3, R5, R<m>, a table file or a presentation");
    if (std::string(c.name) == "group" || std::string(c.name) == "galex" ||
        std::string(c.name) == "twist-spin" || std::string(c.name) == "branched")
      sub->add_flag("--table", o.table, "Also print the operation table");
    sub->callback([&selected, run = c.run] { selected = run; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return selected(o);
  } catch (const qf::UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const qf::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
