#pragma once

// Fixture groupoids with exactly one ordered-groupoid axiom broken, shared by
// the unit tests and the acceptance binary.

#include "ogkit/ogpd.hpp"

#include <string>
#include <vector>

namespace mutations {

struct Mutation {
  std::string axiom;
  ogkit::OrderedGroupoid groupoid;
};

std::vector<Mutation> axiom_mutations();

}  // namespace mutations
