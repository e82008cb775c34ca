#include <minorb/catalog_io.hpp>

#include <minorb/embedded_data.hpp>
#include <minorb/names.hpp>

#include <sstream>
#include <stdexcept>

namespace minorb {

namespace {

constexpr int kSatakeVersion = 1;
constexpr int kPairVersion = 1;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

std::string render_black(const SatakeDiagram& d) {
  std::string out;
  for (int i = 0; i < d.rank(); ++i)
    if (d.is_black(i)) {
      if (!out.empty()) out += ",";
      out += std::to_string(i + 1);
    }
  return out.empty() ? "-" : out;
}

std::string render_arrows(const SatakeDiagram& d) {
  std::string out;
  for (int i = 0; i < d.rank(); ++i)
    if (d.partner[i] > i) {
      if (!out.empty()) out += ",";
      out += std::to_string(i + 1) + ":" + std::to_string(d.partner[i] + 1);
    }
  return out.empty() ? "-" : out;
}

// All absolutely simple forms covered by a bound, in catalog order.
std::vector<RealForm> absolutely_simple_forms(Int bound) {
  std::vector<RealForm> out;
  for (const CartanType& t : canonical_simple_types(bound))
    for (const RealForm& f : catalog_real_forms(t)) out.push_back(f);
  return out;
}

PairKind parse_kind(const std::string& s, const std::string& line) {
  for (PairKind k : {PairKind::RealAbsolutelySimple, PairKind::ComplexHolomorphic,
                     PairKind::ComplexAntiholomorphic})
    if (pair_kind_name(k) == s) return k;
  throw std::invalid_argument("pair catalog: unknown kind '" + s + "' in line: " + line);
}

// Header: "# minorb <which> catalog v<version> bound=<bound>".
std::pair<int, Int> parse_header(const std::string& line, const std::string& which) {
  const std::string prefix = "# minorb " + which + " catalog v";
  if (line.rfind(prefix, 0) != 0)
    throw std::invalid_argument(which + " catalog: bad header line: " + line);
  std::istringstream in(line.substr(prefix.size()));
  int version = 0;
  Int bound = 0;
  std::string bound_field;
  in >> version >> bound_field;
  if (!in || bound_field.rfind("bound=", 0) != 0)
    throw std::invalid_argument(which + " catalog: bad header line: " + line);
  try {
    bound = std::stoll(bound_field.substr(6));
  } catch (const std::exception&) {
    throw std::invalid_argument(which + " catalog: bad bound in header: " + line);
  }
  return {version, bound};
}

void integrity(const std::string& msg) { throw CatalogIntegrityError(msg); }

}  // namespace

std::string dump_satake_catalog(Int bound) {
  std::ostringstream out;
  out << "# minorb satake catalog v" << kSatakeVersion << " bound=" << bound << "\n";
  out << "# columns: name|class|ambient|black|arrows|k_C|hermitian|source\n";
  out << "# One record per non-compact absolutely simple real form of every simple\n";
  out << "# type with classical rank <= bound (exceptional types once their rank\n";
  out << "# fits).  black: 1-based indices of black (compact) nodes, ascending, or\n";
  out << "# \"-\"; arrows: i:j pairs of arrow-linked white nodes (1-based, i < j), or\n";
  out << "# \"-\".  Node numbering is Bourbaki (docs/numbering.md).  k_C names the\n";
  out << "# complexified maximal compact subalgebra.  sp index convention: sp_n(R)\n";
  out << "# and sp_{p,q} have rank n and p+q (so_{p,q} ranks are floor((p+q)/2)).\n";
  for (const RealForm& f : absolutely_simple_forms(bound)) {
    const SatakeDiagram d = f.satake();
    out << f.name() << "|" << cartan_class(f) << "|" << f.ambient().name() << "|"
        << render_black(d) << "|" << render_arrows(d) << "|"
        << f.maximal_compact_complexified().name() << "|" << (f.hermitian() ? "yes" : "no")
        << "|araki:" << cartan_class(f) << "\n";
  }
  return out.str();
}

std::string dump_pair_catalog(Int bound) {
  std::ostringstream out;
  out << "# minorb pair catalog v" << kPairVersion << " bound=" << bound << "\n";
  out << "# columns: g|h|h_assoc|kind|source\n";
  out << "# One record per symmetric pair (g, h) up to isomorphism, for every\n";
  out << "# non-compact simple real form g over every simple type with classical\n";
  out << "# rank <= bound (exceptional types once their rank fits; complex forms\n";
  out << "# t(C) are listed after the absolutely simple forms of t).  h_assoc is\n";
  out << "# the associate subalgebra, the fixed algebra of the composed involution\n";
  out << "# sigma.theta; Riemannian rows (h = k) are normalized to h_assoc = g.\n";
  out << "# kind: absolutely-simple | holomorphic | antiholomorphic.  Completeness\n";
  out << "# within the bound is a claim of this file, enforced against the\n";
  out << "# generating classification rows at load time.\n";
  for (const SymmetricPair& p : all_catalog_pairs(bound))
    out << p.g.name() << "|" << p.h.name() << "|" << p.h_assoc.name() << "|"
        << pair_kind_name(p.kind) << "|" << p.source << "\n";
  return out.str();
}

SatakeCatalogFile parse_satake_catalog(const std::string& text) {
  SatakeCatalogFile f;
  std::istringstream in(text);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!seen_header) {
      const auto [version, bound] = parse_header(line, "satake");
      f.version = version;
      f.bound = bound;
      seen_header = true;
      continue;
    }
    if (line[0] == '#') continue;
    const std::vector<std::string> cols = split(line, '|');
    if (cols.size() != 8)
      throw std::invalid_argument("satake catalog: expected 8 columns in line: " + line);
    if (cols[6] != "yes" && cols[6] != "no")
      throw std::invalid_argument("satake catalog: hermitian must be yes|no in line: " + line);
    f.records.push_back(SatakeRecord{parse_real_form(cols[0]), cols[1], cols[2], cols[3],
                                     cols[4], cols[5], cols[6] == "yes", cols[7]});
  }
  if (!seen_header) throw std::invalid_argument("satake catalog: missing header line");
  return f;
}

PairCatalogFile parse_pair_catalog(const std::string& text) {
  PairCatalogFile f;
  std::istringstream in(text);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!seen_header) {
      const auto [version, bound] = parse_header(line, "pair");
      f.version = version;
      f.bound = bound;
      seen_header = true;
      continue;
    }
    if (line[0] == '#') continue;
    const std::vector<std::string> cols = split(line, '|');
    if (cols.size() != 5)
      throw std::invalid_argument("pair catalog: expected 5 columns in line: " + line);
    f.records.push_back(PairRecord{SymmetricPair{
        parse_real_form(cols[0]), parse_real_reductive(cols[1]), parse_real_reductive(cols[2]),
        parse_kind(cols[3], line), cols[4]}});
  }
  if (!seen_header) throw std::invalid_argument("pair catalog: missing header line");
  return f;
}

Int verify_satake_catalog(const SatakeCatalogFile& f) {
  if (f.version != kSatakeVersion)
    integrity("satake catalog: unsupported version v" + std::to_string(f.version));
  const std::vector<RealForm> expected = absolutely_simple_forms(f.bound);
  if (f.records.size() != expected.size())
    integrity("satake catalog: " + std::to_string(f.records.size()) + " records but bound " +
              std::to_string(f.bound) + " implies " + std::to_string(expected.size()));
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const SatakeRecord& r = f.records[i];
    const RealForm& want = expected[i];
    if (r.form != want)
      integrity("satake catalog: record " + std::to_string(i + 1) + " is " + r.form.name() +
                " but catalog order expects " + want.name());
    const SatakeDiagram d = want.satake();
    if (r.cls != cartan_class(want))
      integrity("satake catalog: " + want.name() + ": class " + r.cls + " != " +
                cartan_class(want));
    if (r.ambient != want.ambient().name())
      integrity("satake catalog: " + want.name() + ": ambient " + r.ambient + " != " +
                want.ambient().name());
    if (r.black != render_black(d))
      integrity("satake catalog: " + want.name() + ": black " + r.black + " != " +
                render_black(d));
    if (r.arrows != render_arrows(d))
      integrity("satake catalog: " + want.name() + ": arrows " + r.arrows + " != " +
                render_arrows(d));
    if (r.k_C != want.maximal_compact_complexified().name())
      integrity("satake catalog: " + want.name() + ": k_C " + r.k_C + " != " +
                want.maximal_compact_complexified().name());
    if (r.hermitian != want.hermitian())
      integrity("satake catalog: " + want.name() + ": hermitian flag disagrees");
    if (r.source != "araki:" + cartan_class(want))
      integrity("satake catalog: " + want.name() + ": source " + r.source + " != araki:" +
                cartan_class(want));
  }
  return Int(f.records.size());
}

Int verify_pair_catalog(const PairCatalogFile& f) {
  if (f.version != kPairVersion)
    integrity("pair catalog: unsupported version v" + std::to_string(f.version));
  const std::vector<SymmetricPair> expected = all_catalog_pairs(f.bound);
  if (f.records.size() != expected.size())
    integrity("pair catalog: " + std::to_string(f.records.size()) + " records but bound " +
              std::to_string(f.bound) + " implies " + std::to_string(expected.size()));
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const SymmetricPair& got = f.records[i].pair;
    const SymmetricPair& want = expected[i];
    if (got != want)  // compares g, h, h_assoc, kind
      integrity("pair catalog: record " + std::to_string(i + 1) + " is " + got.name() +
                " [h_assoc " + got.h_assoc.name() + ", " + pair_kind_name(got.kind) +
                "] but catalog order expects " + want.name() + " [h_assoc " +
                want.h_assoc.name() + ", " + pair_kind_name(want.kind) + "]");
    if (got.source != want.source)
      integrity("pair catalog: " + want.name() + ": source " + got.source + " != " +
                want.source);
  }
  return Int(f.records.size());
}

const SatakeCatalogFile& shipped_satake_catalog() {
  static const SatakeCatalogFile f = [] {
    SatakeCatalogFile parsed = parse_satake_catalog(embedded::satake_catalog_txt);
    verify_satake_catalog(parsed);
    return parsed;
  }();
  return f;
}

const PairCatalogFile& shipped_pair_catalog() {
  static const PairCatalogFile f = [] {
    PairCatalogFile parsed = parse_pair_catalog(embedded::pair_catalog_txt);
    verify_pair_catalog(parsed);
    return parsed;
  }();
  return f;
}

}  // namespace minorb
