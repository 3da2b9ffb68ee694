#ifndef EC3_PROFILES_HPP
#define EC3_PROFILES_HPP

#include <string>
#include <vector>

#include "ec3/objective.hpp"

namespace ec3 {

// Named parameter presets shipped in data/profiles.json and compiled into
// the library. An explicit path loads the same layout from disk instead.
ObjectiveParams profile_params(const std::string& name,
                               const std::string& profiles_path = "");
ObjectiveParams default_params();
std::vector<std::string> profile_names(const std::string& profiles_path = "");

}  // namespace ec3

#endif
