#pragma once

#include <string>

#include "skewbox/mosaic.hpp"

namespace skewbox {

// CSV serialization of a mosaic run, one row per cell, row-major (p outer,
// alpha inner):
//   alpha_index,p_index,alpha,p,rate,stderr,reps_completed,reps_failed
// Doubles are written in shortest round-trip form, so re-parsing is lossless
// and re-runs are byte-identical.
std::string mosaic_to_csv(const MosaicResult& result);

// Sidecar metadata: flat "key = value" lines recording the full SimConfig,
// grid endpoints, seed, side rule, and software version.
std::string mosaic_meta(const MosaicResult& result);

// Parses mosaic_to_csv output (used by the renderer). Throws
// std::invalid_argument naming the offending row on malformed input.
MosaicResult mosaic_from_csv(const std::string& csv_text);

}  // namespace skewbox
