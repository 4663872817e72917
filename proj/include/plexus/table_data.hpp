#pragma once

#include <array>
#include <string>

namespace plexus::tables {

/// Printed statistics column of the polyadics table, serials 0..27
/// (ranks 0 through 4 as printed, twelve columns in the rank 3 and 4 rows).
/// The printed sign at serial 10 is '-' while the multiplicative
/// odd-monadic rule gives '+'; the reproduction must flag it, not match it.
struct PrintedPolyadic {
  unsigned serial;
  int printed_sign;
};

inline constexpr std::array<PrintedPolyadic, 28> kPolyadicsPrinted = {{
    {0, +1},  {1, -1},  {2, -1},  {3, +1},  {4, -1},  {5, +1},  {6, +1},
    {7, -1},  {8, -1},  {9, +1},  {10, -1}, {11, -1}, {12, +1}, {13, -1},
    {14, -1}, {15, +1}, {16, -1}, {17, +1}, {18, +1}, {19, -1}, {20, +1},
    {21, -1}, {22, -1}, {23, +1}, {24, +1}, {25, -1}, {26, -1}, {27, +1},
}};

inline constexpr unsigned kPolyadicsDivergentSerial = 10;

/// The sixteen monadics of the rank-4 stage: serials 2^q, q = 0..15.
inline constexpr int kMonadicsLog2Count = 16;

struct TreeRow {
  int level;
  const char* algebra;
  unsigned long spinor_dim;
  unsigned long vector_dim;
  const char* group;
};

inline constexpr std::array<TreeRow, 4> kSpinorTree = {{
    {0, "Fermi 0", 1, 0, "1"},
    {1, "Fermi 1R", 2, 4, "SO(2,2)"},
    {2, "Fermi 2R", 4, 8, "SO(4,4)"},
    {3, "Fermi 4R", 16, 32, "SO(16,16)"},
}};

}  // namespace plexus::tables
