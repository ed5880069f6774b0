#pragma once

namespace haarlab {

// Levels the dyadic tree may reach by default; a resolution-N step function
// stores 2^N values, so this also caps memory. HAARLAB_MAX_LEVEL overrides.
inline constexpr int kDefaultMaxLevel = 16;

// Structural cap regardless of the environment (2^24 values is already 16M
// rationals; indices must also stay well inside 64 bits).
inline constexpr int kHardMaxLevel = 24;

// Effective maximum level for this process: HAARLAB_MAX_LEVEL if set and
// valid (1..kHardMaxLevel), else kDefaultMaxLevel. Read once.
int max_level();

}  // namespace haarlab
