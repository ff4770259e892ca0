#include "fractlip/lip_cover.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fractlip/cover.hpp"

namespace fractlip {

namespace {

void check_caps(const Metric& a, const Metric& b) {
  if (a.size() == 0 || b.size() == 0) throw BadInput("spaces must be nonempty");
  if (b.size() > 64) throw SearchSpaceTooLarge("|B| caps at 64");
  const double total =
      std::pow(static_cast<double>(b.size()), static_cast<double>(a.size()));
  if (total > 1e6) throw SearchSpaceTooLarge("|B|^|A| exceeds 10^6");
}

bool lipschitz1(const Metric& a, const Metric& b, const std::vector<std::size_t>& f) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dy = f[i] == f[j] ? 0.0 : b.distance(f[i], f[j]);
      if (dy > a.distance(i, j)) return false;
    }
  return true;
}

}  // namespace

std::vector<ImageFamilyEntry> lip1_image_family(const Metric& a, const Metric& b) {
  check_caps(a, b);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();

  // Lexicographic enumeration of all total maps; the first map producing an
  // image set is its least witness.
  std::map<std::uint64_t, std::vector<std::size_t>> by_image;
  std::vector<std::size_t> f(na, 0);
  for (bool done = false; !done;) {
    if (lipschitz1(a, b, f)) {
      std::uint64_t mask = 0;
      for (std::size_t v : f) mask |= std::uint64_t{1} << v;
      by_image.try_emplace(mask, f);
    }
    std::size_t pos = na;
    for (;;) {
      if (pos == 0) {
        done = true;
        break;
      }
      --pos;
      if (++f[pos] < nb) break;
      f[pos] = 0;
    }
  }

  std::vector<ImageFamilyEntry> family;
  family.reserve(by_image.size());
  for (auto& [mask, witness] : by_image) {
    bool maximal = true;
    for (const auto& [other, w2] : by_image)
      if (other != mask && (mask & other) == mask) {
        maximal = false;
        break;
      }
    if (maximal) family.push_back(ImageFamilyEntry{mask, std::move(witness)});
  }
  return family;
}

CoverWitness f_cover_number(const Metric& a, const Metric& b) {
  const std::vector<ImageFamilyEntry> family = lip1_image_family(a, b);
  if (family.size() > 10000)
    throw SearchSpaceTooLarge("image family exceeds 10^4 sets");

  const std::size_t nb = b.size();
  const std::uint64_t universe =
      nb == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nb) - 1;
  std::vector<std::uint64_t> masks;
  masks.reserve(family.size());
  for (const auto& entry : family) masks.push_back(entry.image_mask);

  // Singleton images of constant maps guarantee a cover exists; family
  // entries are sorted by mask, and exact_set_cover returns the
  // lexicographically least optimal index selection.
  const std::vector<std::size_t> picks = exact_set_cover(universe, masks);

  CoverWitness witness;
  witness.k = picks.size();
  for (std::size_t idx : picks) {
    witness.maps.push_back(MapTable{family[idx].witness_map});
    std::vector<std::size_t> image;
    for (std::size_t v = 0; v < nb; ++v)
      if (family[idx].image_mask & (std::uint64_t{1} << v)) image.push_back(v);
    witness.images.push_back(std::move(image));
  }
  return witness;
}

}  // namespace fractlip
