#ifndef SVB_CATALOG_HPP
#define SVB_CATALOG_HPP

#include <string>

#include <json.hpp>

#include "svb/algebra.hpp"

namespace svb {

/// Centerless super-Virasoro algebra S(s), s in {0, 1/2}:
///   [L_m,L_n] = (n-m) L_{m+n}
///   [L_m,G_k] = (k-m/2) G_{m+k}
///   [G_k,G_l] = 2 L_{k+l}
AlgebraSpec make_super_virasoro(HalfInt s);

/// Witt algebra: single even family L with [L_m,L_n] = (n-m) L_{m+n}.
AlgebraSpec make_witt();

AlgebraSpec load_algebra(const nlohmann::json& doc);
AlgebraSpec load_algebra_file(const std::string& path);

nlohmann::json serialize_algebra(const AlgebraSpec& alg);

/// Resolves "sv0", "sv0.5", "witt", or a file path.
AlgebraSpec resolve_algebra(const std::string& selector);

}  // namespace svb

#endif
