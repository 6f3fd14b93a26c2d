#pragma once

#include "prymgauss/curve.hpp"

#include <cstdint>

namespace prymgauss {

/// Parameter rows of the Maple computation: a1 is a prefix of 1..11 and a2 a
/// prefix of (326, -28, -875, -97, 20, -651, -523, -306, 369, -31, 99).
/// Available for 3 <= g <= 12.
CurveParams paper_params(int genus, Convention convention);

/// Seeded draw: numerators uniform in [-10^4, 10^4] \ {0}, denominators in
/// [1, 100], redrawing a value that collides with an earlier one in the same
/// row. The stream is keyed by (seed, genus) and is identical on every
/// platform.
CurveParams seeded_params(int genus, std::uint64_t seed, Convention convention);

}  // namespace prymgauss
