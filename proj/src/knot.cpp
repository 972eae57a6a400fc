#include "qf/knot.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "catalog_data.hpp"
#include "qf/errors.hpp"

namespace qf {

using Json = nlohmann::ordered_json;

namespace {

void check_letters(const std::vector<std::int64_t>& braid, std::size_t strands) {
  if (strands == 0) throw InvalidArgument("a braid needs at least one strand");
  for (std::int64_t letter : braid) {
    const std::int64_t a = letter < 0 ? -letter : letter;
    if (letter == 0 || a >= static_cast<std::int64_t>(strands))
      throw InvalidArgument("braid letter " + std::to_string(letter) + " does not fit " +
                            std::to_string(strands) + " strands");
  }
}

std::string arc_name(std::size_t i, std::size_t count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

struct Crossing {
  std::size_t result;
  std::size_t under;
  std::size_t over;
  bool positive;
};

// Arcs of the braid diagram before the closure identifies top and bottom.
struct Diagram {
  std::size_t arcs = 0;
  std::vector<Crossing> crossings;
  std::vector<std::size_t> bottom;  // arc ending at each position
};

Diagram trace_diagram(const KnotSpec& k) {
  Diagram d;
  d.arcs = k.strands();
  d.bottom.resize(k.strands());
  std::iota(d.bottom.begin(), d.bottom.end(), std::size_t{0});
  for (std::int64_t letter : k.braid()) {
    const std::size_t p = static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1);
    const std::size_t left = d.bottom[p];
    const std::size_t right = d.bottom[p + 1];
    const std::size_t fresh = d.arcs++;
    if (letter > 0) {
      // The left strand passes over and moves right.
      d.crossings.push_back({fresh, right, left, true});
      d.bottom[p] = fresh;
      d.bottom[p + 1] = left;
    } else {
      d.crossings.push_back({fresh, left, right, false});
      d.bottom[p] = right;
      d.bottom[p + 1] = fresh;
    }
  }
  return d;
}

// Closes the diagram (leaving position `open` unjoined when set) and names
// arcs by their smallest member.
QuandlePresentation close_diagram(const Diagram& d, std::optional<std::size_t> open) {
  std::vector<std::size_t> parent(d.arcs);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t j = 0; j < d.bottom.size(); ++j) {
    if (open && j == *open) continue;
    const std::size_t a = find(d.bottom[j]);
    const std::size_t b = find(j);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> roots;
  for (std::size_t x = 0; x < d.arcs; ++x)
    if (find(x) == x) roots.push_back(x);
  std::vector<std::string> names(d.arcs);
  std::vector<std::string> generators;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    generators.push_back(arc_name(i, roots.size()));
    names[roots[i]] = generators.back();
  }
  auto term = [&](std::size_t arc) { return QuandleTerm::generator(names[find(arc)]); };
  std::vector<QuandleRelation> relations;
  for (const Crossing& c : d.crossings)
    relations.push_back(
        {QuandleTerm::apply(term(c.under), term(c.over), c.positive ? 1 : -1), term(c.result)});
  return QuandlePresentation(std::move(generators), std::move(relations));
}

}  // namespace

std::size_t closure_components(const std::vector<std::int64_t>& braid, std::size_t strands) {
  check_letters(braid, strands);
  // position[s] is where the strand starting at s currently sits.
  std::vector<std::size_t> at(strands);
  std::iota(at.begin(), at.end(), std::size_t{0});
  for (std::int64_t letter : braid) {
    const std::size_t p = static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1);
    std::swap(at[p], at[p + 1]);
  }
  // at[j] is the starting position of the strand that ends at j.
  std::vector<bool> seen(strands, false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = at[x]) seen[x] = true;
  }
  return cycles;
}

std::pair<std::vector<std::int64_t>, std::size_t> parse_braid(std::string_view text) {
  std::vector<std::int64_t> braid;
  std::int64_t widest = 0;
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string_view::npos) break;
      throw InvalidArgument("empty letter in braid word '" + std::string(text) + "'");
    }
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    std::size_t used = 0;
    std::int64_t letter = 0;
    try {
      letter = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || letter == 0)
      throw InvalidArgument("bad braid letter '" + item + "'");
    braid.push_back(letter);
    widest = std::max(widest, letter < 0 ? -letter : letter);
  }
  return {braid, static_cast<std::size_t>(widest + 1)};
}

std::vector<std::int64_t> reversed_braid(const std::vector<std::int64_t>& braid) {
  return {braid.rbegin(), braid.rend()};
}

std::vector<std::int64_t> mirrored_braid(const std::vector<std::int64_t>& braid) {
  std::vector<std::int64_t> out;
  for (std::int64_t letter : braid) out.push_back(-letter);
  return out;
}

KnotSpec::KnotSpec(std::string name, std::vector<std::int64_t> braid, std::size_t strands,
                   KnotTags tags)
    : name_(std::move(name)), braid_(std::move(braid)), strands_(strands), tags_(std::move(tags)) {
  const std::size_t components = closure_components(braid_, strands_);
  if (components != 1) throw NotAKnot(components);
  if (tags_.torus && tags_.torus->first > tags_.torus->second)
    std::swap(tags_.torus->first, tags_.torus->second);
}

QuandlePresentation wirtinger_presentation(const KnotSpec& k) {
  return close_diagram(trace_diagram(k), std::nullopt);
}

QuandlePresentation cut_presentation(const KnotSpec& k) {
  return close_diagram(trace_diagram(k), std::size_t{0});
}

TwistSpinSpec::TwistSpinSpec(KnotSpec knot_, std::int64_t n_, std::int64_t s_)
    : knot(std::move(knot_)), n(n_), s(s_) {
  if (n < 2) throw InvalidArgument("twist number n must be at least 2");
  if (s < 1) throw InvalidArgument("s must be positive");
  if (std::gcd(n, s) != 1)
    throw InvalidArgument("n=" + std::to_string(n) + " and s=" + std::to_string(s) +
                          " are not coprime");
}

QuandlePresentation twist_spin_presentation(const TwistSpinSpec& t) {
  const QuandlePresentation cut = cut_presentation(t.knot);
  std::vector<QuandleRelation> relations = cut.relations();
  const std::string& base = cut.generators().front();
  for (const auto& y : cut.generators()) {
    if (y == base) continue;
    relations.push_back({QuandleTerm::apply(QuandleTerm::generator(base),
                                            QuandleTerm::generator(y), t.n),
                         QuandleTerm::generator(base)});
  }
  return QuandlePresentation(cut.generators(), std::move(relations));
}

FiniteQuandle branched_twist_spin_quandle(const TwistSpinSpec& t, const FiniteGroup& g,
                                          const GroupAutomorphism& f) {
  if (f.size() != g.order()) throw InvalidMonodromy("automorphism acts on a different group");
  const std::uint64_t order = automorphism_order(f);
  if (order != static_cast<std::uint64_t>(t.n))
    throw InvalidMonodromy("automorphism has order " + std::to_string(order) + ", expected " +
                           std::to_string(t.n));
  return galex(g, power(f, t.s));
}

const char* to_string(Family f) {
  switch (f) {
    case Family::S1: return "S1";
    case Family::S2: return "S2";
    case Family::S3: return "S3";
    case Family::S4: return "S4";
    case Family::S5: return "S5";
    case Family::S6: return "S6";
  }
  return "?";
}

std::optional<Family> finite_family(const TwistSpinSpec& t) {
  const KnotTags& tags = t.knot.tags();
  auto torus_is = [&](std::int64_t p, std::int64_t q) {
    return tags.torus && tags.torus->first == p && tags.torus->second == q;
  };
  if (t.n == 2) {
    if (tags.two_bridge) return Family::S1;
    if (tags.montesinos) {
      std::vector<std::int64_t> d = tags.montesinos->denominators;
      std::sort(d.begin(), d.end());
      if (d == std::vector<std::int64_t>{2, 3, 3}) return Family::S2;
      if (d == std::vector<std::int64_t>{2, 3, 5}) return Family::S3;
    }
    return std::nullopt;
  }
  if (t.n == 3 && (torus_is(2, 3) || torus_is(2, 5))) return Family::S4;
  if (t.n == 4 && torus_is(2, 3)) return Family::S5;
  if (t.n == 5 && torus_is(2, 3)) return Family::S6;
  return std::nullopt;
}

const CatalogTwist* CatalogEntry::twist(std::int64_t n) const {
  for (const auto& t : twists)
    if (t.n == n) return &t;
  return nullptr;
}

namespace {

[[noreturn]] void inconsistent(const std::string& where, const std::string& what) {
  throw CatalogInconsistent(where + ": " + what);
}

KnotTags read_tags(const Json& j) {
  KnotTags tags;
  if (j.contains("torus")) {
    const auto pq = j.at("torus").get<std::vector<std::int64_t>>();
    if (pq.size() != 2) throw InvalidArgument("torus tag needs two parameters");
    tags.torus = std::pair{std::min(pq[0], pq[1]), std::max(pq[0], pq[1])};
  }
  tags.two_bridge = j.value("two_bridge", false);
  if (j.contains("montesinos")) {
    const Json& m = j.at("montesinos");
    MontesinosTag tag;
    tag.denominators = m.at("denominators").get<std::vector<std::int64_t>>();
    if (m.contains("betas")) tag.betas = m.at("betas").get<std::vector<std::int64_t>>();
    if (!tag.betas.empty() && tag.betas.size() != tag.denominators.size())
      throw InvalidArgument("montesinos tag needs one beta per denominator");
    tags.montesinos = std::move(tag);
  }
  return tags;
}

FiniteGroup read_group(const Json& j, const std::string& where, std::size_t budget,
                       std::string& source) {
  std::optional<FiniteGroup> from_text;
  std::optional<FiniteGroup> from_perms;
  if (j.contains("presentation")) {
    source = j.at("presentation").get<std::string>();
    from_text = group_from_presentation(parse_group_presentation(source), budget);
  }
  if (j.contains("permutations")) {
    const auto gens = j.at("permutations").get<std::vector<Perm>>();
    for (const Perm& p : gens)
      if (!is_permutation(p)) inconsistent(where, "group generator is not a permutation");
    from_perms = FiniteGroup::from_permutations(gens);
    if (source.empty()) source = "permutations";
  }
  if (!from_text && !from_perms) inconsistent(where, "group has neither presentation nor permutations");
  if (from_text && from_perms) {
    if (from_text->order() != from_perms->order())
      inconsistent(where, "presentation gives order " + std::to_string(from_text->order()) +
                              " but permutations give " + std::to_string(from_perms->order()));
    if (!groups_isomorphic(*from_text, *from_perms, 100000))
      inconsistent(where, "presentation and permutation groups are not isomorphic");
  }
  return from_text ? *from_text : *from_perms;
}

CatalogTwist build_twist(const KnotSpec& knot, const Json& j, std::size_t budget) {
  const std::int64_t n = j.at("n").get<std::int64_t>();
  const std::string where = knot.name() + " n=" + std::to_string(n);
  std::string source;
  FiniteGroup group = read_group(j.at("group"), where, budget, source);
  const TwistSpinSpec spec(knot, n);
  FiniteQuandle quandle = [&] {
    try {
      return complete(twist_spin_presentation(spec), budget).quandle;
    } catch (const BudgetExceeded&) {
      inconsistent(where, "presentation does not complete within the budget");
    }
  }();
  if (quandle.order() != group.order())
    inconsistent(where, "completion has order " + std::to_string(quandle.order()) +
                            " but the group has order " + std::to_string(group.order()));
  if (type_of(quandle) != static_cast<std::uint64_t>(n))
    inconsistent(where, "completion has type " + std::to_string(type_of(quandle)));
  std::optional<GroupAutomorphism> monodromy;
  try {
    monodromy = find_monodromy(group, static_cast<std::uint64_t>(n), quandle);
  } catch (const NotFound&) {
    inconsistent(where, "no order-n automorphism reproduces the completed quandle");
  }
  return {n, std::move(source), std::move(group), std::move(*monodromy), std::move(quandle)};
}

}  // namespace

Catalog Catalog::parse(std::string_view json_text, std::size_t budget) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw CatalogInconsistent(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw CatalogInconsistent("catalog must be a JSON array");
  Catalog catalog;
  try {
    for (const Json& e : doc) {
      KnotSpec knot(e.at("name").get<std::string>(), e.at("braid").get<std::vector<std::int64_t>>(),
                    e.at("strands").get<std::size_t>(),
                    e.contains("tags") ? read_tags(e.at("tags")) : KnotTags{});
      for (const auto& other : catalog.entries_)
        if (other.knot.name() == knot.name())
          throw CatalogInconsistent("duplicate knot '" + knot.name() + "'");
      CatalogEntry entry{knot, {}, e.value("notes", std::string())};
      if (e.contains("twists"))
        for (const Json& t : e.at("twists")) entry.twists.push_back(build_twist(knot, t, budget));
      catalog.entries_.push_back(std::move(entry));
    }
  } catch (const Json::exception& e) {
    throw CatalogInconsistent(std::string("malformed catalog entry: ") + e.what());
  } catch (const UsageError& e) {
    throw CatalogInconsistent(std::string("malformed catalog entry: ") + e.what());
  }
  return catalog;
}

Catalog Catalog::load(const std::string& path, std::size_t budget) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read catalog '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), budget);
}

namespace {

// "t_{2,3}", "t23" and "T(2,3)" all reduce to "t23".
std::string loose_name(std::string_view name) {
  std::string out;
  for (char ch : name)
    if (std::isalnum(static_cast<unsigned char>(ch)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

const CatalogEntry& Catalog::knot(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.knot.name() == name) return e;
  for (const auto& e : entries_)
    if (loose_name(e.knot.name()) == loose_name(name)) return e;
  throw NotFound("knot '" + std::string(name) + "' is not in the catalog");
}

KnotSpec Catalog::lookup(std::string_view text) const {
  if (!text.empty() && text.find_first_not_of("0123456789-, ") == std::string_view::npos) {
    auto [braid, strands] = parse_braid(text);
    KnotSpec raw("braid(" + std::string(text) + ")", std::move(braid), strands);
    for (const auto& e : entries_)
      if (e.knot.braid() == raw.braid() && e.knot.strands() == raw.strands()) return e.knot;
    return raw;
  }
  return knot(text).knot;
}

const CatalogEntry* Catalog::torus(std::int64_t p, std::int64_t q) const {
  const std::pair<std::int64_t, std::int64_t> pq{std::min(p, q), std::max(p, q)};
  for (const auto& e : entries_)
    if (e.knot.tags().torus == pq) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::resolve(const KnotSpec& k) const {
  for (const auto& e : entries_)
    if (e.knot.name() == k.name()) return e;
  for (const auto& e : entries_)
    if (e.knot.braid() == k.braid() && e.knot.strands() == k.strands()) return e;
  throw NotFound("knot '" + k.name() + "' is not in the catalog");
}

std::string_view builtin_catalog_json() { return detail::kCatalogJson; }

const Catalog& builtin_catalog() {
  static const Catalog catalog = Catalog::parse(builtin_catalog_json());
  return catalog;
}

}  // namespace qf
