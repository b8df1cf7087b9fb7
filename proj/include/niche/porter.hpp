#pragma once

#include <string>

namespace niche {

// Classic Porter (1980) suffix-stripping stemmer. Input must already be
// lowercase ASCII letters; anything else is returned unchanged.
std::string porter_stem(std::string word);

}  // namespace niche
