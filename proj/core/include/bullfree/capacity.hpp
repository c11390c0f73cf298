#pragma once

#include <cstddef>
#include <string_view>

namespace bullfree {

inline constexpr std::size_t kBranchAndBoundMaxN = 256;
inline constexpr std::size_t kEnumerationMaxN = 20;

// Returns `fallback` unless BULLFREE_MAX_N is set to a positive integer,
// in which case that value replaces every guard.
std::size_t capacity_limit(std::size_t fallback);

// Throws CapacityError when n > capacity_limit(fallback).
void require_capacity(std::size_t n, std::size_t fallback, std::string_view what);

}  // namespace bullfree
