#pragma once

// Compiled-in copies of the shipped catalog data files (data/*.txt), so the
// library and CLI need no runtime file lookup.

namespace minorb::embedded {

extern const char* const satake_catalog_txt;
extern const char* const pair_catalog_txt;

}  // namespace minorb::embedded
