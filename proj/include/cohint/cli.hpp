#pragma once

/*
  Command-line front end: describe | poset [--dot PATH] | verify [--cutoff N]
  [--json PATH] | rank1, all taking --input PATH. Exit codes: 0 pass,
  1 identity failure, 2 invalid input. Reports are deterministic byte for
  byte for a fixed input and cutoff.
*/

#include <iosfwd>
#include <string>
#include <vector>

#include "cohint/bps.hpp"
#include "cohint/descriptor.hpp"
#include "cohint/poset.hpp"

namespace cohint {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string render_describe(const InputDescriptor& d);
std::string render_poset_table(const PairVG& pair, const PosetData& poset);
std::string render_poset_dot(const PairVG& pair, const PosetData& poset);
std::string render_verify_table(const IntegralityReport& report);
std::string report_to_json(const IntegralityReport& report);
std::string render_rank1(const Rank1Report& report);

}  // namespace cohint
