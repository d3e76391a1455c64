#include "imlabel/image.hpp"

#include <stdexcept>

namespace imlabel {

int FeatureImage::count_valid() const {
  int count = 0;
  for (auto v : valid) count += v != 0;
  return count;
}

void FeatureImage::validate() const {
  if (geom.height < 1 || geom.width < 1)
    throw std::invalid_argument("feature image: empty grid");
  const auto n = static_cast<size_t>(geom.size());
  if (features.size() != n || valid.size() != n)
    throw std::invalid_argument("feature image: size mismatch with grid");
  if (count_valid() == 0)
    throw std::invalid_argument("feature image: no valid pixels");
}

}  // namespace imlabel
