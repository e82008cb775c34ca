#pragma once

// Serialization of the two shipped catalogs as versioned, pipe-separated
// structured text (grammar documented in docs/catalog-formats.md):
//
//   satake catalog: one record per non-compact absolutely simple real form --
//     name, involution class, ambient type, black nodes, arrows, complexified
//     maximal compact subalgebra, Hermitian flag, per-row source tag;
//   pair catalog: one record per symmetric pair -- g, h, associate h^a, kind,
//     per-row source tag.
//
// The library constructs both catalogs programmatically; the shipped files
// (data/*.txt, compiled in) are snapshots of those constructions.  The
// verify_* functions hold the two sides together: every record must reproduce
// the built-in construction exactly, and the file must be complete for the
// bound named in its own header.  A transcription error on either side breaks
// that equality, so the file and the code audit each other.
//
// dump -> parse -> verify -> dump round-trips byte-identically; the CLI's
// `catalog --dump` prints exactly these dumps.

#include <minorb/pairs.hpp>

#include <string>
#include <vector>

namespace minorb {

// One parsed record of the Satake catalog file.  Diagram and subalgebra
// columns stay textual; verification compares them against the canonical
// renderings of the built-in constructions.
struct SatakeRecord {
  RealForm form;          // resolved from the name column
  std::string cls;        // involution class label ("AI", "DIII", "EIV", ...)
  std::string ambient;    // Cartan type of g_C ("A3", "E6", ...)
  std::string black;      // "2,4" (1-based, ascending) or "-"
  std::string arrows;     // "1:6,3:5" (1-based, i < j, ascending) or "-"
  std::string k_C;        // canonical name of k complexified
  bool hermitian = false;
  std::string source;
};

struct SatakeCatalogFile {
  int version = 0;
  Int bound = 0;
  std::vector<SatakeRecord> records;
};

// One parsed record of the pair catalog file: the pair carries its g, h,
// associate, kind, and source tag exactly as resolved from the columns.
struct PairRecord {
  SymmetricPair pair;
};

struct PairCatalogFile {
  int version = 0;
  Int bound = 0;
  std::vector<PairRecord> records;
};

// Render the catalogs for every simple type with classical rank <= bound
// (exceptional types included once their rank fits).  Deterministic;
// `catalog --dump` prints these strings unchanged.
std::string dump_satake_catalog(Int bound);
std::string dump_pair_catalog(Int bound);

// Parse dumps.  Total over the documented grammar; anything else raises
// std::invalid_argument with the offending line.
SatakeCatalogFile parse_satake_catalog(const std::string& text);
PairCatalogFile parse_pair_catalog(const std::string& text);

// Check a parsed file against the built-in constructions: every record must
// match (diagram, class, k_C, Hermitian flag, associate, kind, source) and
// the file must contain exactly the records its header's bound implies, in
// catalog order.  Returns the record count; throws CatalogIntegrityError on
// any deviation.
Int verify_satake_catalog(const SatakeCatalogFile& f);
Int verify_pair_catalog(const PairCatalogFile& f);

// The compiled-in copies of data/satake_catalog.txt and data/pair_catalog.txt,
// parsed and verified once, then cached.
const SatakeCatalogFile& shipped_satake_catalog();
const PairCatalogFile& shipped_pair_catalog();

}  // namespace minorb
