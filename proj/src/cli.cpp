#include "cohint/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace cohint {

std::string render_describe(const InputDescriptor& d) {
  std::ostringstream os;
  os << "rank " << d.pair.group.rank << ", dim G " << d.pair.group.dim << ", |W| "
     << d.pair.group.weyl.order() << ", dim V " << d.pair.rep.dim() << ", d " << d.pair.d()
     << ", symmetric: " << (is_symmetric(d.pair.rep) ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_poset_table(const PairVG& pair, const PosetData& poset) {
  std::ostringstream os;
  os << "classes " << poset.classes.size() << ", orbits " << poset.orbits.size() << ", edges "
     << poset.hasse.size() << "\n";
  os << std::left << std::setw(5) << "idx" << std::setw(14) << "rep" << std::right << std::setw(6)
     << "|V^l|" << std::setw(8) << "|roots|" << std::setw(6) << "gdim" << std::setw(5) << "d"
     << std::setw(5) << "r" << std::setw(7) << "orbit" << std::setw(7) << "|W_l|" << std::setw(7)
     << "|W^l|" << std::setw(7) << "|Wbar|" << "\n";
  for (std::size_t i = 0; i < poset.classes.size(); ++i) {
    const auto& c = poset.classes[i];
    std::ostringstream rep;
    rep << "(";
    for (std::size_t j = 0; j < c.rep.coords.size(); ++j) {
      if (j) rep << ",";
      rep << c.rep.coords[j];
    }
    rep << ")";
    os << std::left << std::setw(5) << (std::to_string(i) + (i == poset.trivial_index ? "*" : ""))
       << std::setw(14) << rep.str() << std::right << std::setw(6) << c.key.v_fixed.size()
       << std::setw(8) << c.key.roots.size() << std::setw(6) << c.g_dim << std::setw(5) << c.d
       << std::setw(5) << c.r << std::setw(7) << poset.orbit_of[i] << std::setw(7)
       << poset.weyl[i].stabilizer.order() << std::setw(7) << poset.weyl[i].pointwise.order()
       << std::setw(7) << poset.weyl[i].lifts.size() << "\n";
  }
  os << "(* marks the trivial class)\n";
  return os.str();
}

std::string render_poset_dot(const PairVG&, const PosetData& poset) {
  std::ostringstream os;
  os << "digraph poset {\n";
  for (std::size_t i = 0; i < poset.classes.size(); ++i) {
    const auto& c = poset.classes[i];
    os << "  c" << i << " [label=\"c" << i << ": gdim " << c.g_dim << ", d " << c.d << ", r "
       << c.r << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.hasse) os << "  c" << lo << " -> c" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_verify_table(const IntegralityReport& report) {
  std::ostringstream os;
  os << "integrality check up to shifted degree " << report.cutoff << "\n";
  os << std::right << std::setw(5) << "deg" << std::setw(8) << "target";
  for (std::size_t i = 0; i < report.contributions.size(); ++i)
    os << std::setw(9) << ("orbit" + std::to_string(i));
  os << std::setw(10) << "residual" << "\n";
  std::set<Z> degrees;
  for (const auto& [n, v] : report.target) degrees.insert(n);
  for (const auto& c : report.contributions)
    for (const auto& [n, v] : c.dims) degrees.insert(n);
  for (const auto& [n, v] : report.residual) degrees.insert(n);
  for (Z n : degrees) {
    Z t = report.target.count(n) ? report.target.at(n) : 0;
    os << std::setw(5) << n << std::setw(8) << t;
    Z sum = 0;
    for (const auto& c : report.contributions) {
      Z v = c.dims.count(n) ? c.dims.at(n) : 0;
      sum += v;
      os << std::setw(9) << v;
    }
    os << std::setw(10) << (t - sum) << "\n";
  }
  os << (report.pass ? "PASS" : "FAIL") << ": residual "
     << (report.pass ? "identically zero" : "nonzero") << " up to cutoff\n";
  return os.str();
}

namespace {

nlohmann::json degree_map_to_json(const std::map<Z, Z>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [deg, v] : m) j[std::to_string(deg)] = v;
  return j;
}

}  // namespace

std::string report_to_json(const IntegralityReport& report) {
  nlohmann::json j;
  j["cutoff"] = report.cutoff;
  j["pass"] = report.pass;
  j["target"] = degree_map_to_json(report.target);
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& c : report.contributions) {
    nlohmann::json o;
    o["class_index"] = c.class_index;
    o["orbit_size"] = c.orbit_size;
    o["relative_weyl_order"] = c.weyl_bar_order;
    o["epsilon"] = c.eps;
    o["bps_dims"] = degree_map_to_json(c.p_dims);
    o["dims"] = degree_map_to_json(c.dims);
    orbits.push_back(o);
  }
  j["contributions"] = orbits;
  j["residual"] = degree_map_to_json(report.residual);
  return j.dump(2) + "\n";
}

std::string render_rank1(const Rank1Report& report) {
  std::ostringstream os;
  if (report.degenerate) {
    os << "trivial C*-action: closed form not applicable\n";
  } else {
    os << "deg   expected computed\n";
    std::set<Z> degrees;
    for (const auto& [n, v] : report.expected) degrees.insert(n);
    for (const auto& [n, v] : report.computed) degrees.insert(n);
    for (Z n : degrees) {
      Z e = report.expected.count(n) ? report.expected.at(n) : 0;
      Z c = report.computed.count(n) ? report.computed.at(n) : 0;
      os << n << "     " << e << "        " << c << (e == c ? "" : "   MISMATCH") << "\n";
    }
    os << "dims " << (report.dims_match ? "match" : "MISMATCH") << ", integrality "
       << (report.integrality_pass ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cohomological integrality checker for symmetric representations"};
  app.require_subcommand(1);

  std::string input_path;
  std::string dot_path;
  std::string json_path;
  Z cutoff_flag = -1;
  bool corrupt = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_path, "descriptor JSON file")->required();
  };
  CLI::App* describe = app.add_subcommand("describe", "summarize the input pair");
  add_common(describe);
  CLI::App* poset_cmd = app.add_subcommand("poset", "enumerate partition classes");
  add_common(poset_cmd);
  poset_cmd->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
  CLI::App* verify = app.add_subcommand("verify", "check the integrality identity");
  add_common(verify);
  verify->add_option("--cutoff", cutoff_flag, "shifted-degree cutoff (overrides input options)");
  verify->add_option("--json", json_path, "also write the JSON report to a file");
  verify->add_flag("--corrupt-kernel", corrupt)->group("");  // negative-control hook
  CLI::App* rank1 = app.add_subcommand("rank1", "closed-form check for rank-1 torus input");
  add_common(rank1);
  rank1->add_option("--cutoff", cutoff_flag, "shifted-degree cutoff (overrides input options)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  InputDescriptor d;
  try {
    d = load_descriptor(input_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  Z cutoff = cutoff_flag >= 0 ? cutoff_flag : d.cutoff;

  try {
    if (describe->parsed()) {
      out << render_describe(d);
      return 0;
    }
    if (poset_cmd->parsed()) {
      auto classes = enumerate_classes(d.pair);
      PosetData poset = weyl_structure(classes, d.pair);
      out << render_poset_table(d.pair, poset);
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) {
          err << "error: cannot write " << dot_path << "\n";
          return 2;
        }
        dot << render_poset_dot(d.pair, poset);
      }
      return 0;
    }
    if (verify->parsed()) {
      EngineOptions opt;
      opt.corrupt_kernel = corrupt;
      Engine engine(opt);
      IntegralityReport report = engine.verify_integrality(d.pair, cutoff);
      out << render_verify_table(report);
      std::string doc = report_to_json(report);
      out << doc;
      if (!json_path.empty()) {
        std::ofstream jf(json_path);
        if (!jf) {
          err << "error: cannot write " << json_path << "\n";
          return 2;
        }
        jf << doc;
      }
      return report.pass ? 0 : 1;
    }
    if (rank1->parsed()) {
      if (d.pair.group.rank != 1 || !d.pair.group.roots.empty() || d.pair.group.weyl.order() != 1) {
        err << "error: rank1 requires a rank-1 torus input\n";
        return 2;
      }
      Engine engine;
      Rank1Report report = engine.rank1_conjecture_check(d.pair.rep, cutoff);
      out << render_rank1(report);
      return (!report.degenerate && report.dims_match && report.integrality_pass) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cohint
