#pragma once

/*
  Input descriptors: a JSON document naming the group (by family or raw
  data), the representation as [coefficients, multiplicity] weight pairs,
  and options. Parsing validates symmetry; serialization is canonical, so
  serialize(parse(x)) is idempotent.
*/

#include <string>

#include "cohint/group_data.hpp"

namespace cohint {

struct InputDescriptor {
  PairVG pair;
  Z cutoff = 20;
};

// Throws std::invalid_argument with a diagnostic on malformed input.
InputDescriptor parse_descriptor(const std::string& json_text);
InputDescriptor load_descriptor(const std::string& path);

std::string serialize_descriptor(const InputDescriptor& d);

}  // namespace cohint
