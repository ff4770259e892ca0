#pragma once

#include <cstdint>
#include <vector>

#include "fractlip/metric_space.hpp"
#include "fractlip/ultra.hpp"

namespace fractlip {

// Enumeration substrate for the minimal number of Lipschitz-1 images of A
// covering B. Hard caps: |B|^|A| <= 10^6 and |B| <= 64 (this module is a
// verification instrument for tiny instances, not a production solver).

struct ImageFamilyEntry {
  std::uint64_t image_mask = 0;          // subset of B
  std::vector<std::size_t> witness_map;  // lexicographically least map with
                                         // this image set
};

// All maximal image sets of Lipschitz-1 maps A -> B, each with its least
// witness map. Image sets contained in another are dropped; covering with
// supersets never increases the cover size.
std::vector<ImageFamilyEntry> lip1_image_family(const Metric& a, const Metric& b);

struct CoverWitness {
  std::size_t k = 0;
  std::vector<MapTable> maps;                     // k Lipschitz-1 maps A -> B
  std::vector<std::vector<std::size_t>> images;   // their image sets
};

// Minimal k with Lipschitz-1 images of A covering B, via exact set cover
// over the maximal image family; deterministic lexicographically least
// witness.
CoverWitness f_cover_number(const Metric& a, const Metric& b);

}  // namespace fractlip
