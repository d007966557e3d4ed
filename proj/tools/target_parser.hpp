#pragma once

#include <string>

#include "bgr/target_graph.hpp"

namespace bgr::cli {

/// Parses "P4+C6+K1,5+K2,3" and "3xP10". K1,t is a star; Ks,t with s > t is
/// normalised to Kt,s. Underscores, braces and blanks are ignored.
TargetGraph parseTarget(const std::string& text);

}  // namespace bgr::cli
