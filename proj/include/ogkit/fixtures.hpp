#pragma once

// Small ordered groupoids used throughout the tests, the acceptance suite and
// the CLI's built-in examples.

#include "ogkit/ogpd.hpp"
#include "ogkit/quotients.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ogkit::fixtures {

// One-object groupoid of a finite group given by its multiplication table
// (element 0 is the identity), trivially ordered.
GroupoidPtr group(const std::string& object, const std::vector<std::string>& elements,
                  const std::vector<std::vector<int>>& table);

GroupoidPtr cyclic(int n);  // C_n on object "e", elements e, a, a2, ...
GroupoidPtr klein_four();
// Identities only: "u" >= "v" (and "v" >= "w" for the 3-chain).
GroupoidPtr chain2();
GroupoidPtr chain3();
// Objects x, y with mutually inverse arrows xy: x -> y and yx: y -> x.
GroupoidPtr pair_groupoid();
// C2 at "a" and a trivial group at "b", incomparable: no glb of a and b.
GroupoidPtr two_component();
// C2 at both u >= v with s_v <= s_u (a Clifford semigroup).
GroupoidPtr clifford_c2();
// Pair groupoid on x, y with a bottom identity z below both.
GroupoidPtr pair_over_point();

std::vector<std::pair<std::string, GroupoidPtr>> all_groupoids();

// C_n at both u >= v, a^i_v <= a^i_u. Morphisms are named a<i>u and a<i>v.
GroupoidPtr clifford_cyclic(int n);
// S3 acting on {0, 1, 2}: e, r, r2 (3-cycles), t0, t1, t2 (tk fixes k).
GroupoidPtr symmetric3();

// Z4 -> C2 with kernel {e, a2} = DeltaZ/2.
ModuleExtension z4_over_c2();
// The same extension fibred over u >= v.
ModuleExtension clifford_z4_over_c2();
// S3 -> C2 with kernel A3 = Z/3 and a acting by -1.
ModuleExtension s3_over_c2();

}  // namespace ogkit::fixtures
