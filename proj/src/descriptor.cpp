#include "cohint/descriptor.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace cohint {

namespace {

using nlohmann::json;

ZVec parse_zvec(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string("expected array for ") + what);
  ZVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string("expected integer in ") + what);
    v.push_back(x.get<Z>());
  }
  return v;
}

// Weights and roots come as [coeffs, multiplicity] pairs.
std::vector<Weight> parse_weight_list(const json& j, std::size_t rank, const char* what) {
  std::vector<Weight> out;
  if (!j.is_array()) throw std::invalid_argument(std::string("expected array of ") + what);
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument(std::string(what) + " entries must be [coeffs, multiplicity]");
    ZVec coords = parse_zvec(entry[0], what);
    if (coords.size() != rank)
      throw std::invalid_argument(std::string(what) + " coefficient length does not match rank");
    Z mult = entry[1].get<Z>();
    if (mult < 0) throw std::invalid_argument(std::string(what) + " multiplicity must be nonnegative");
    for (Z m = 0; m < mult; ++m) out.push_back(Weight{coords});
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupDescriptor parse_group(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("group must be an object");
  if (j.contains("family")) {
    std::string family = j.at("family").get<std::string>();
    if (family == "torus") return build_torus(j.at("rank").get<std::size_t>());
    if (family == "gl") return build_gl(j.at("n").get<std::size_t>());
    if (family == "sl") return build_sl(j.at("n").get<std::size_t>());
    if (family == "product") {
      std::vector<GroupDescriptor> factors;
      for (const auto& f : j.at("factors")) factors.push_back(parse_group(f));
      return build_product(factors);
    }
    throw std::invalid_argument("unknown group family: " + family);
  }
  GroupDescriptor g;
  g.rank = j.at("rank").get<std::size_t>();
  if (j.contains("roots")) g.roots = parse_weight_list(j.at("roots"), g.rank, "roots");
  g.sort_roots();
  std::vector<GroupElement> gens;
  if (j.contains("weyl_generators")) {
    for (const auto& mj : j.at("weyl_generators")) {
      ZMat m;
      for (const auto& row : mj) m.push_back(parse_zvec(row, "weyl generator row"));
      if (m.size() != g.rank) throw std::invalid_argument("weyl generator is not rank x rank");
      for (const auto& row : m)
        if (row.size() != g.rank) throw std::invalid_argument("weyl generator is not rank x rank");
      gens.push_back(make_element(m));
    }
  }
  g.weyl = FiniteGroup::generate(gens, g.rank);
  g.dim = j.contains("dim") ? j.at("dim").get<Z>()
                            : static_cast<Z>(g.rank) + static_cast<Z>(g.roots.size());
  g.label = j.contains("label") ? j.at("label").get<std::string>() : "raw";
  if (!g.roots_symmetric() && !g.roots.empty())
    throw std::invalid_argument("root multiset is not symmetric");
  return g;
}

json group_to_json(const GroupDescriptor& g) {
  // Families round-trip through their raw presentation; this keeps the
  // serializer canonical without tracking how the group was built.
  json j;
  j["rank"] = g.rank;
  json roots = json::array();
  std::map<ZVec, Z> mult;
  for (const auto& r : g.roots) ++mult[r.coords];
  for (const auto& [coords, m] : mult) roots.push_back(json::array({coords, m}));
  j["roots"] = roots;
  json gens = json::array();
  for (const auto& e : g.weyl.generators()) gens.push_back(e.matrix);
  j["weyl_generators"] = gens;
  j["dim"] = g.dim;
  j["label"] = g.label;
  return j;
}

}  // namespace

InputDescriptor parse_descriptor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    InputDescriptor d;
    d.pair.group = parse_group(j.at("group"));
    if (!j.contains("representation") || !j.at("representation").contains("weights"))
      throw std::invalid_argument("missing representation.weights");
    d.pair.rep.weights =
        parse_weight_list(j.at("representation").at("weights"), d.pair.group.rank, "weights");
    if (j.contains("options") && j.at("options").contains("cutoff"))
      d.cutoff = j.at("options").at("cutoff").get<Z>();
    if (!is_symmetric(d.pair.rep))
      throw std::invalid_argument("representation is not symmetric");
    return d;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid descriptor: ") + e.what());
  }
}

InputDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

std::string serialize_descriptor(const InputDescriptor& d) {
  json j;
  j["group"] = group_to_json(d.pair.group);
  json weights = json::array();
  std::map<ZVec, Z> mult;
  for (const auto& w : d.pair.rep.weights) ++mult[w.coords];
  for (const auto& [coords, m] : mult) weights.push_back(json::array({coords, m}));
  j["representation"] = json{{"weights", weights}};
  j["options"] = json{{"cutoff", d.cutoff}};
  return j.dump(2) + "\n";
}

}  // namespace cohint
