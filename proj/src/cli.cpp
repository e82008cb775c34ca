#include <minorb/cli.hpp>

#include <minorb/catalog_io.hpp>
#include <minorb/classify.hpp>
#include <minorb/names.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorb::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "minorb-cli/1";

std::string tf(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Unknown-name recovery: rank candidates by edit distance and suggest the
// closest few.  Case-insensitive, since the name grammar is.

std::string lowered(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Int edit_distance(const std::string& a, const std::string& b) {
  const Int na = static_cast<Int>(a.size()), nb = static_cast<Int>(b.size());
  std::vector<Int> prev(nb + 1), cur(nb + 1);
  for (Int j = 0; j <= nb; ++j) prev[j] = j;
  for (Int i = 1; i <= na; ++i) {
    cur[0] = i;
    for (Int j = 1; j <= nb; ++j) {
      const Int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[nb];
}

std::vector<std::string> known_form_names(Int bound) {
  std::vector<std::string> out;
  for (const CartanType& t : canonical_simple_types(bound)) {
    for (const RealForm& f : catalog_real_forms(t)) out.push_back(f.name());
    out.push_back(RealForm::complex_simple(t).name());
  }
  return out;
}

std::string near_misses(const std::string& bad, const std::vector<std::string>& pool) {
  const std::string b = lowered(bad);
  const Int cutoff = std::max<Int>(2, static_cast<Int>(b.size()) / 3);
  std::vector<std::pair<Int, std::string>> scored;
  for (const std::string& cand : pool) {
    const Int d = edit_distance(b, lowered(cand));
    if (d <= cutoff) scored.emplace_back(d, cand);
  }
  std::sort(scored.begin(), scored.end());
  scored.erase(std::unique(scored.begin(), scored.end(),
                           [](const auto& x, const auto& y) { return x.second == y.second; }),
               scored.end());
  if (scored.size() > 3) scored.resize(3);
  if (scored.empty()) return "";
  std::string s = "; near misses: ";
  for (size_t i = 0; i < scored.size(); ++i) {
    if (i) s += ", ";
    s += scored[i].second;
  }
  return s;
}

RealForm resolve_form(const std::string& s, Int bound) {
  try {
    return parse_real_form(s);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(e.what() + near_misses(s, known_form_names(bound)));
  }
}

SymmetricPair resolve_pair(const std::string& g_str, const std::string& h_str, Int bound) {
  const RealForm g = resolve_form(g_str, bound);
  RealReductiveType h = rt::zero();
  try {
    h = parse_real_reductive(h_str);
  } catch (const std::invalid_argument& e) {
    std::vector<std::string> pool;
    for (const SymmetricPair& p : catalog_pairs(g)) pool.push_back(p.h.name());
    throw std::invalid_argument(e.what() + near_misses(h_str, pool));
  }
  // find_pair itself lists the available subalgebras when h is well-formed
  // but not a catalog row for this g.
  return find_pair(g, h);
}

// ---------------------------------------------------------------------------
// JSON payload builders.  Field sets mirror the public structs one-to-one so
// that parsing the emitted JSON reproduces every payload field.

json orbit_json(const OrbitDescriptor& o) {
  json w = json::array();
  for (Int i = 0; i < o.wdd.weights.size(); ++i) w.push_back(o.wdd.weights(i));
  return json{{"ambient", o.ambient.name()}, {"paired", o.paired},   {"weights", std::move(w)},
              {"label", o.label},            {"half_dim", o.half_dim}, {"str", o.str()}};
}

json pair_json(const SymmetricPair& p) {
  return json{{"g", p.g.name()},
              {"h", p.h.name()},
              {"h_assoc", p.h_assoc.name()},
              {"kind", pair_kind_name(p.kind)},
              {"riemannian", p.riemannian()},
              {"source", p.source}};
}

json dual_json(const DualResult& d) {
  return json{{"doubled", d.doubled},
              {"g_d0", d.g_d0.name()},
              {"g_d", d.g_d.name()},
              {"m_gd", d.m_gd},
              {"certificate", d.certificate}};
}

json decision_json(const Decision& d) {
  return json{{"pair", pair_json(d.pair)},
              {"empty", d.empty_intersection},
              {"agreement", d.agreement},
              {"route_a",
               {{"m_g", d.route_a.m_g},
                {"n_gC", d.route_a.n_gC},
                {"m_gd", d.route_a.m_gd},
                {"empty", d.route_a.empty}}},
              {"route_b",
               {{"orbit", orbit_json(d.route_b.orbit)},
                {"dual_diagram", d.route_b.dual_diagram},
                {"empty", d.route_b.empty}}},
              {"dual", dual_json(d.dual)},
              {"table_rows", d.table_rows},
              {"str", d.str()}};
}

const char* bmp_route_name(BmpRoute r) {
  switch (r) {
    case BmpRoute::ViaDimensionBound: return "via-dimension-bound";
    case BmpRoute::ViaHighestRootSymmetry: return "via-highest-root-symmetry";
    case BmpRoute::Combined: return "combined";
  }
  return "?";
}

const char* dim_assumption_name(DimAssumption a) {
  return a == DimAssumption::DimEqualsN ? "n(g_C)" : "m(g)";
}

json bmp_json(const BmpCertificate& c) {
  return json{{"bounded", c.bounded},
              {"assumption", dim_assumption_name(c.assumption)},
              {"route", bmp_route_name(c.route)},
              {"explanation", c.explanation}};
}

json instance_json(const TableInstance& ti) {
  return json{{"pair", pair_json(ti.pair)},
              {"dual_core", ti.dual_core.name()},
              {"assoc", ti.assoc.name()}};
}

json row_json(const TableRow& r) {
  json inst = json::array();
  for (const TableInstance& ti : r.instances) inst.push_back(instance_json(ti));
  return json{{"id", r.id}, {"family", r.family}, {"instances", std::move(inst)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Subcommands.

int cmd_info(const std::string& name, Int bound, bool as_json, std::ostream& out) {
  const RealForm f = resolve_form(name, bound);
  const Int m = min_real_orbit_half_dim(f);
  const Int n = min_orbit_half_dim(f.complexification());
  const Int orbits = count_minimal_real_orbits(f);
  const OrbitDescriptor o = smallest_orbit_meeting(f);
  const std::string satake = f.absolutely_simple()
                                 ? f.satake().str()
                                 : std::string("none (complex form: ambient x ambient)");
  if (as_json) {
    json j{{"schema", kSchema},
           {"command", "info"},
           {"form", f.name()},
           {"ambient", f.ambient().name()},
           {"absolutely_simple", f.absolutely_simple()},
           {"dim_real", f.dim_real()},
           {"m", m},
           {"n", n},
           {"hermitian", f.hermitian()},
           {"minimal_real_orbits", orbits},
           {"satake", satake},
           {"orbit", orbit_json(o)}};
    emit(out, j);
  } else {
    out << f.name() << "\n";
    out << "  ambient: " << f.ambient().name() << "\n";
    out << "  absolutely simple: " << tf(f.absolutely_simple()) << "\n";
    out << "  dim_R: " << f.dim_real() << "\n";
    out << "  m(g): " << m << "\n";
    out << "  n(g_C): " << n << "\n";
    out << "  hermitian: " << tf(f.hermitian()) << "\n";
    out << "  minimal real nilpotent orbits: " << orbits << "\n";
    out << "  satake: " << satake << "\n";
    out << "  O^C_{min,g}: " << o.str() << "\n";
  }
  return 0;
}

int cmd_pair(const std::string& g_str, const std::string& h_str, Int bound, bool as_json,
             std::ostream& out) {
  const SymmetricPair p = resolve_pair(g_str, h_str, bound);
  const Decision d = decide(p);
  const RealReductiveType assoc = associated(p);  // revalidated h^a
  const PropernessResult prop = properness(p);
  const BmpCertificate bn = bmp_certificate(p, DimAssumption::DimEqualsN);
  const BmpCertificate bm = bmp_certificate(p, DimAssumption::DimEqualsM);
  const bool has_star = p.g.absolutely_simple();
  const bool star = has_star ? almost_irreducible_star(p) : false;
  if (as_json) {
    json j{{"schema", kSchema}, {"command", "pair"}};
    j["decision"] = decision_json(d);
    j["associated"] = assoc.name();
    j["properness"] = json{{"proper", prop.proper}, {"explanation", prop.explanation}};
    j["bmp"] = json{{"dim_equals_n", bmp_json(bn)}, {"dim_equals_m", bmp_json(bm)}};
    j["star"] = has_star ? json(star) : json(nullptr);
    emit(out, j);
  } else {
    out << "pair " << p.name() << "\n";
    out << "  kind: " << pair_kind_name(p.kind) << "\n";
    out << "  riemannian: " << tf(p.riemannian()) << "\n";
    out << "  empty: " << tf(d.empty_intersection) << "\n";
    out << "  m(g): " << d.route_a.m_g << "\n";
    out << "  n(g_C): " << d.route_a.n_gC << "\n";
    out << "  m(g^d): " << d.route_a.m_gd << "\n";
    out << "  orbit: " << d.route_b.orbit.str() << "\n";
    out << "  dual diagram: " << d.route_b.dual_diagram << "\n";
    out << "  agreement: " << tf(d.agreement) << "\n";
    out << "  g^d: " << d.dual.g_d.name() << "\n";
    out << "  doubled: " << tf(d.dual.doubled) << "\n";
    out << "  dual certificate: " << d.dual.certificate << "\n";
    out << "  h^a: " << assoc.name() << "\n";
    out << "  table rows: " << (d.table_rows.empty() ? "-" : d.table_rows) << "\n";
    out << "  proper: " << tf(prop.proper) << "\n";
    out << "  properness: " << prop.explanation << "\n";
    out << "  bmp[dim=n(g_C)]: bounded (" << bmp_route_name(bn.route) << ") -- "
        << bn.explanation << "\n";
    out << "  bmp[dim=m(g)]: bounded (" << bmp_route_name(bm.route) << ") -- "
        << bm.explanation << "\n";
    out << "  condition (*): " << (has_star ? tf(star) : "n/a (g not absolutely simple)")
        << "\n";
  }
  return 0;
}

int cmd_dual(const std::string& g_str, const std::string& h_str, Int bound, bool as_json,
             std::ostream& out) {
  const SymmetricPair p = resolve_pair(g_str, h_str, bound);
  const DualResult d = dual(p);
  if (as_json) {
    json j{{"schema", kSchema}, {"command", "dual"}};
    j["pair"] = pair_json(p);
    j["dual"] = dual_json(d);
    emit(out, j);
  } else {
    out << "pair " << p.name() << "\n";
    out << "  kind: " << pair_kind_name(p.kind) << "\n";
    out << "  g^d_0: " << d.g_d0.name() << "\n";
    out << "  g^d: " << d.g_d.name() << "\n";
    out << "  doubled: " << tf(d.doubled) << "\n";
    out << "  m(g^d): " << d.m_gd << "\n";
    out << "  certificate: " << d.certificate << "\n";
  }
  return 0;
}

int cmd_tables(int which, Int bound, bool as_json, std::ostream& out) {
  if (which == 1) {
    // Table 1: the minimal complex-orbit half-dimension for every simple type.
    json rows = json::array();
    if (!as_json) out << "table 1: n for the simple complex types, bound " << bound << "\n";
    for (const CartanType& t : canonical_simple_types(bound)) {
      const Int n = min_orbit_half_dim(t);
      if (as_json)
        rows.push_back(json{{"type", t.name()}, {"algebra", t.algebra_name()}, {"n", n}});
      else
        out << "  " << t.name() << "  " << t.algebra_name() << "  n=" << n << "\n";
    }
    if (as_json) emit(out, rows);
    return 0;
  }
  if (which == 2) {
    // Table 2: the real forms whose minimal real orbit is strictly larger
    // than the minimal complex orbit (m > n), with the smallest complex orbit
    // that does meet the form.
    json rows = json::array();
    if (!as_json) out << "table 2: forms with m > n, bound " << bound << "\n";
    for (const CartanType& t : canonical_simple_types(bound)) {
      for (const RealForm& f : catalog_real_forms(t)) {
        if (!complex_minimal_misses(f)) continue;
        const Int m = min_real_orbit_half_dim(f);
        const Int n = min_orbit_half_dim(f.complexification());
        const OrbitDescriptor o = smallest_orbit_meeting(f);
        if (as_json)
          rows.push_back(json{{"form", f.name()},
                              {"m", m},
                              {"n", n},
                              {"orbit", orbit_json(o)}});
        else
          out << "  " << f.name() << "  m=" << m << "  n=" << n << "  meets " << o.str()
              << "\n";
      }
    }
    if (as_json) emit(out, rows);
    return 0;
  }
  // Tables 3 and 4: the empty-intersection classification.
  const std::vector<TableRow> rows =
      which == 3 ? empty_pair_table_real(bound) : empty_pair_table_complex(bound);
  if (as_json) {
    json arr = json::array();
    for (const TableRow& r : rows) arr.push_back(row_json(r));
    emit(out, arr);
  } else {
    out << "table " << which << ": empty-intersection pairs with "
        << (which == 3 ? "absolutely simple" : "complex") << " g, bound " << bound << "\n";
    for (const TableRow& r : rows) {
      out << "  " << r.id << "  " << r.family << "\n";
      for (const TableInstance& ti : r.instances)
        out << "    " << ti.pair.name() << "  g^d" << (which == 4 ? "_0" : "") << "="
            << ti.dual_core.name() << "  h^a=" << ti.assoc.name() << "\n";
    }
  }
  return 0;
}

int cmd_enumerate_empty(Int bound, bool as_json, std::ostream& out) {
  const std::vector<Decision> ds = enumerate_empty(bound);
  if (as_json) {
    json arr = json::array();
    for (const Decision& d : ds) arr.push_back(decision_json(d));
    emit(out, arr);
  } else {
    out << "empty-intersection pairs, bound " << bound << " (" << ds.size() << ")\n";
    for (const Decision& d : ds) out << "  " << d.str() << "\n";
  }
  return 0;
}

int cmd_catalog(const std::string& which, Int bound, bool as_json, std::ostream& out) {
  const std::string text =
      which == "satake" ? dump_satake_catalog(bound) : dump_pair_catalog(bound);
  if (!as_json) {
    out << text;  // byte-exact dump; re-parses to the identical catalog
    return 0;
  }
  json j{{"schema", kSchema}, {"command", "catalog"}, {"which", which}, {"bound", bound}};
  json recs = json::array();
  if (which == "satake") {
    const SatakeCatalogFile f = parse_satake_catalog(text);
    j["version"] = f.version;
    for (const SatakeRecord& r : f.records)
      recs.push_back(json{{"form", r.form.name()},
                          {"class", r.cls},
                          {"ambient", r.ambient},
                          {"black", r.black},
                          {"arrows", r.arrows},
                          {"k_C", r.k_C},
                          {"hermitian", r.hermitian},
                          {"source", r.source}});
  } else {
    const PairCatalogFile f = parse_pair_catalog(text);
    j["version"] = f.version;
    for (const PairRecord& r : f.records) recs.push_back(pair_json(r.pair));
  }
  j["records"] = std::move(recs);
  emit(out, j);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"minimal nilpotent orbits vs. symmetric pairs: exact decisions, duals, "
               "published tables, catalogs"};
  app.name("minorb");
  app.require_subcommand(1);

  bool as_json = false;
  Int bound = 12;
  app.add_flag("--json", as_json, "emit JSON (schema " + std::string(kSchema) + ")");
  app.add_option("--bound", bound, "classical rank bound for tables, enumeration, catalogs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string info_form;
  CLI::App* info = app.add_subcommand("info", "orbit data for one real form");
  info->add_option("FORM", info_form, "real form name, e.g. su*_4 or so_{4,3}")->required();

  std::string pair_g, pair_h;
  CLI::App* pairc = app.add_subcommand("pair", "decide a symmetric pair, with applications");
  pairc->add_option("G", pair_g, "ambient real form")->required();
  pairc->add_option("H", pair_h, "symmetric subalgebra, e.g. sp_2(R) or sl_2(C)+so_2")
      ->required();

  std::string dual_g, dual_h;
  CLI::App* dualc = app.add_subcommand("dual", "the dual real form of a symmetric pair");
  dualc->add_option("G", dual_g, "ambient real form")->required();
  dualc->add_option("H", dual_h, "symmetric subalgebra")->required();

  int which_table = 0;
  CLI::App* tablesc = app.add_subcommand("tables", "reproduce a published table");
  tablesc->add_option("--which", which_table, "1 orbit half-dims, 2 forms with m > n, "
                                              "3 empty pairs (real), 4 empty pairs (complex)")
      ->required()
      ->check(CLI::Range(1, 4));

  CLI::App* enumc =
      app.add_subcommand("enumerate-empty", "all empty-intersection pairs at the bound");

  bool do_dump = false;
  std::string catalog_which = "pairs";
  CLI::App* catalogc = app.add_subcommand("catalog", "shipped catalog files");
  catalogc->add_flag("--dump", do_dump, "print the catalog file")->required();
  catalogc->add_option("--which", catalog_which, "pairs or satake")
      ->check(CLI::IsMember({"pairs", "satake"}));

  for (CLI::App* sub : {info, pairc, dualc, tablesc, enumc, catalogc})
    sub->fallthrough();  // accept --json / --bound after the subcommand too

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("minorb");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;  // help exits 0; every parse failure is an argument error
  }

  try {
    if (*info) return cmd_info(info_form, bound, as_json, out);
    if (*pairc) return cmd_pair(pair_g, pair_h, bound, as_json, out);
    if (*dualc) return cmd_dual(dual_g, dual_h, bound, as_json, out);
    if (*tablesc) return cmd_tables(which_table, bound, as_json, out);
    if (*enumc) return cmd_enumerate_empty(bound, as_json, out);
    if (*catalogc) return cmd_catalog(catalog_which, bound, as_json, out);
  } catch (const CatalogIntegrityError& e) {
    err << "catalog integrity error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1) guarantees a dispatch above
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace minorb::cli
