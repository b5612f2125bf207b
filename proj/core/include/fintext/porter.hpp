#pragma once

#include <string>
#include <string_view>

namespace fintext {

/// Classic Porter stemmer (the five-step 1980 algorithm as distributed,
/// including its two conventional step-2 amendments). Expects a lowercase
/// alphabetic token; words of length <= 2 are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace fintext
