#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rbasis/seqspec.hpp"

namespace rbasis::cli {

/// Expands a named preset:
///   dowd(h,c)                  H_n = {h}, R_n = [1, c]
///   exact-f(h,d[,n:v,...])     H_n = {h}, R_n = {f(n)}, f(n) = v at listed n, d elsewhere
///   paper-example              H_0 = R_0 = {1}, H_n = {n}, R_n = {1,2} for n >= 1
/// The expansion is validated exactly like a loaded config. Throws ConfigError.
SpecPair expand_preset(std::string_view spec);

/// Names with argument syntax, for --help text.
std::vector<std::string> preset_usage();

}  // namespace rbasis::cli
