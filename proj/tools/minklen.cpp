// minklen: Minkowski length of 2D/3D lattice polytopes, with a brute-force
// cross-check, length-1 classification and a differential test harness.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "minklen/classify.hpp"
#include "minklen/io.hpp"
#include "minklen/length.hpp"
#include "minklen/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace minklen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;
constexpr int kExitMismatch = 4;

struct Options {
  std::vector<std::string> files;
  bool use_oracle = false;
  bool witness = false;
  bool as_json = false;
  bool check = false;
  bool diff = false;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  int count = 10;
  i64 box = 4;
  int dim = 3;
  std::uint64_t seed = 1;
};

json vec_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.dim; ++i) a.push_back(v.c[i]);
  return a;
}

json witness_json(const Decomposition& d) {
  json parts = json::array();
  for (const auto& p : d.parts)
    parts.push_back(json{{"multiplicity", p.multiplicity}, {"direction", vec_json(p.direction)}});
  return json{{"anchor", vec_json(d.anchor)}, {"parts", parts}};
}

std::string witness_text(const Decomposition& d) {
  std::string s = "anchor " + d.anchor.str();
  for (const auto& p : d.parts)
    s += "; " + std::to_string(p.multiplicity) + " x " + p.direction.str();
  return s;
}

json report_skeleton(const std::string& command) {
  return json{{"schema", kReportSchema}, {"version", kVersion}, {"command", command}};
}

void emit(const json& report, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

json stats_json(const SearchStats& st) {
  return json{{"quadruples_examined", st.quadruples_examined},
              {"planar_triples_examined", st.planar_triples_examined},
              {"templates_searched", st.templates_searched},
              {"tuple_nodes", st.tuple_nodes}};
}

int cmd_length(const Options& opt) {
  Timer timer;
  LatticePolytope p = to_polytope(load_polytope_file(opt.files[0]));
  json report = report_skeleton("length");
  report["input"] = json::parse(serialize_polytope(p));
  std::string text;

  int fast_len = -1, oracle_len = -1;
  Decomposition fast_witness;
  std::vector<Vec> oracle_witness;
  bool budget_hit = false;

  if (!opt.use_oracle || opt.check) {
    LengthResult r = minkowski_length(p);
    fast_len = r.length;
    fast_witness = r.witness;
    report["result"]["length"] = r.length;
    report["result"]["method"] = "template-search";
    report["work"] = stats_json(r.stats);
    text += "L = " + std::to_string(r.length) + "\n";
    if (opt.witness) {
      report["result"]["witness"] = witness_json(r.witness);
      text += "witness: " + witness_text(r.witness) + "\n";
    }
  }
  if (opt.use_oracle || opt.check) {
    try {
      OracleResult r = oracle_length(p.lattice_points(), opt.oracle_budget);
      oracle_len = r.length;
      oracle_witness = r.witness;
      report["result"]["oracle_length"] = r.length;
      report["result"]["oracle_nodes"] = r.nodes;
      if (opt.use_oracle && !opt.check) {
        report["result"]["length"] = r.length;
        report["result"]["method"] = "oracle";
        text += "L = " + std::to_string(r.length) + " (oracle, " + std::to_string(r.nodes) +
                " nodes)\n";
        if (opt.witness) {
          json dirs = json::array();
          for (const Vec& v : r.witness) dirs.push_back(vec_json(v));
          report["result"]["witness_directions"] = dirs;
          std::string w = "witness:";
          for (const Vec& v : r.witness) w += " " + v.str();
          text += w + "\n";
        }
      }
    } catch (const OracleBudgetExceeded& e) {
      budget_hit = true;
      report["result"]["oracle_status"] = "budget exceeded";
      text += "oracle budget exceeded after " + std::to_string(e.nodes()) + " nodes\n";
    }
  }
  if (opt.check && !budget_hit) {
    bool agree = fast_len == oracle_len;
    report["result"]["check"] = agree ? "agree" : "mismatch";
    text += std::string("check: ") + (agree ? "agree" : "MISMATCH") + "\n";
    emit(report, opt.as_json, text);
    std::cerr << "elapsed: " << timer.seconds() << " s\n";
    return agree ? kExitOk : kExitMismatch;
  }
  emit(report, opt.as_json, text);
  std::cerr << "elapsed: " << timer.seconds() << " s\n";
  return budget_hit ? kExitBudgetExceeded : kExitOk;
}

int cmd_classify(const Options& opt) {
  Timer timer;
  LatticePolytope p = to_polytope(load_polytope_file(opt.files[0]));
  json report = report_skeleton("classify");
  report["input"] = json::parse(serialize_polytope(p));
  std::string text;

  LengthResult len = minkowski_length(p);
  report["result"]["length"] = len.length;
  text += "L = " + std::to_string(len.length) + "\n";

  if (p.dim_ambient() == 2) {
    if (len.length == 1) {
      Length1PolygonKind kind = classify_length1_polygon(p);
      report["result"]["polygon_kind"] = to_string(kind);
      text += "polygon kind: " + to_string(kind) + "\n";
    } else {
      report["result"]["polygon_kind"] = nullptr;
      text += "polygon classification applies only to length-1 polygons\n";
    }
    emit(report, opt.as_json, text);
    std::cerr << "elapsed: " << timer.seconds() << " s\n";
    return kExitOk;
  }

  size_t n = p.lattice_points().size();
  size_t interior = p.interior_points().size();
  report["result"]["lattice_points"] = n;
  report["result"]["interior_points"] = interior;
  text += std::to_string(n) + " lattice points; " + std::to_string(interior) +
          " interior points\n";
  if (n >= 5) {
    double subsets = 1;
    for (int i = 0; i < 5; ++i) subsets = subsets * double(n - i) / double(i + 1);
    if (subsets <= 250000) {
      std::vector<FivePointType> types = five_subset_types(p.lattice_points());
      if (types.size() <= 56) {
        json arr = json::array();
        std::string line = "5-subset types:";
        for (FivePointType t : types) {
          arr.push_back(to_string(t));
          line += " " + to_string(t);
        }
        report["result"]["five_subset_types"] = arr;
        text += line + "\n";
      } else {
        std::map<std::string, int> histo;
        for (FivePointType t : types) ++histo[to_string(t)];
        json h = json::object();
        std::string line = "5-subset type histogram:";
        for (const auto& [k, v] : histo) {
          h[k] = v;
          line += " " + k + ":" + std::to_string(v);
        }
        report["result"]["five_subset_histogram"] = h;
        text += line + "\n";
      }
    } else {
      report["result"]["five_subset_types"] = nullptr;
      text += "too many 5-subsets to type\n";
    }
  }
  emit(report, opt.as_json, text);
  std::cerr << "elapsed: " << timer.seconds() << " s\n";
  return kExitOk;
}

int cmd_sum(const Options& opt) {
  Timer timer;
  std::vector<LatticePolytope> parts;
  for (const std::string& f : opt.files) parts.push_back(to_polytope(load_polytope_file(f)));
  int dim = parts[0].dim_ambient();
  for (const LatticePolytope& p : parts)
    if (p.dim_ambient() != dim) throw ParseError("summands have mismatched dimensions");

  json report = report_skeleton("sum");
  std::string text;
  int part_total = 0;
  json part_lengths = json::array();
  for (size_t i = 0; i < parts.size(); ++i) {
    int li = minkowski_length(parts[i]).length;
    part_total += li;
    part_lengths.push_back(li);
    text += "L(P" + std::to_string(i + 1) + ") = " + std::to_string(li) + "\n";
  }
  report["result"]["part_lengths"] = part_lengths;

  LatticePolytope sum = minkowski_sum(parts);
  int sum_len;
  if (opt.use_oracle) {
    OracleResult r = oracle_length(sum.lattice_points(), opt.oracle_budget);
    sum_len = r.length;
  } else {
    LengthResult r = minkowski_length(sum);
    sum_len = r.length;
    if (opt.witness) {
      report["result"]["witness"] = witness_json(r.witness);
      text += "witness: " + witness_text(r.witness) + "\n";
    }
    report["work"] = stats_json(r.stats);
  }
  report["result"]["sum_length"] = sum_len;
  report["result"]["superadditivity_margin"] = sum_len - part_total;
  text += "L(sum) = " + std::to_string(sum_len) + "\n";
  text += "superadditivity margin = " + std::to_string(sum_len - part_total) + "\n";
  emit(report, opt.as_json, text);
  std::cerr << "elapsed: " << timer.seconds() << " s\n";
  return kExitOk;
}

int cmd_random(const Options& opt) {
  Timer timer;
  json report = report_skeleton("random");
  report["seed"] = opt.seed;
  report["count"] = opt.count;
  report["box"] = opt.box;
  report["dim"] = opt.dim;
  std::string text;

  Mcg64 rng(opt.seed);
  int mismatches = 0;
  json instances = json::array();
  for (int i = 0; i < opt.count; ++i) {
    LatticePolytope p = random_polytope(rng, opt.dim, opt.box);
    if (!opt.diff) {
      instances.push_back(json::parse(serialize_polytope(p)));
      text += serialize_polytope(p) + "\n";
      continue;
    }
    LengthResult fast = minkowski_length(p);
    OracleResult oracle = oracle_length(p.lattice_points(), opt.oracle_budget);
    bool ok = fast.length == oracle.length && verify_decomposition(p, fast.witness);
    if (!ok) {
      ++mismatches;
      json inst = json::parse(serialize_polytope(p));
      inst["fast_length"] = fast.length;
      inst["oracle_length"] = oracle.length;
      instances.push_back(inst);
      text += "MISMATCH " + serialize_polytope(p) + " fast=" + std::to_string(fast.length) +
              " oracle=" + std::to_string(oracle.length) + "\n";
    }
  }
  if (opt.diff) {
    report["result"]["mismatches"] = mismatches;
    report["result"]["failing_instances"] = instances;
    text += std::to_string(mismatches) + " mismatches\n";
  } else {
    report["result"]["instances"] = instances;
  }
  emit(report, opt.as_json, text);
  std::cerr << "elapsed: " << timer.seconds() << " s\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

// Built-in golden suite: the worked examples and the class-arithmetic facts
// the library is expected to reproduce, in a quick self-contained run.
int cmd_selftest(const Options& opt) {
  Timer timer;
  json checks = json::array();
  std::string text;
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back(json{{"name", name}, {"ok", ok}});
    text += std::string(ok ? "[PASS] " : "[FAIL] ") + name + "\n";
    all_ok = all_ok && ok;
  };

  try {
    // Sharp interior-point example: 4 interior points, length 1.
    LatticePolytope sharp = LatticePolytope::hull(
        {Vec(0, 0, 0), Vec(1, 3, 0), Vec(0, 2, 3), Vec(4, 1, 3)});
    std::vector<Vec> interior = sharp.interior_points();
    std::vector<Vec> expected =
        sorted_unique({Vec(1, 2, 1), Vec(1, 2, 2), Vec(1, 1, 1), Vec(2, 1, 2)});
    record("four-interior-point simplex: interior set", interior == expected);
    record("four-interior-point simplex: length 1", length_3d(sharp).length == 1);
    record("four-interior-point simplex: ledger total 4",
           interior_ledger({sharp}, sharp).total == 4);

    // Reflexive tetrahedron: type (10), doubling gives length 2.
    LatticePolytope tetra = LatticePolytope::hull(
        {Vec(-1, -1, -1), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)});
    record("reflexive tetrahedron: 5 lattice points", tetra.lattice_points().size() == 5);
    bool all10 = true;
    for (FivePointType t : five_subset_types(tetra.lattice_points()))
      all10 = all10 && t == FivePointType::TenDistinct;
    record("reflexive tetrahedron: all 5-subsets type (10)", all10);
    record("reflexive tetrahedron: length 1", length_3d(tetra).length == 1);
    record("reflexive tetrahedron: doubled length 2",
           length_3d(minkowski_sum(tetra, tetra)).length == 2);

    // Polygon classification.
    LatticePolytope t0 = LatticePolytope::hull({Vec(1, 0), Vec(0, 1), Vec(2, 2)});
    LatticePolytope simplex2 = LatticePolytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1)});
    LatticePolytope simplex2x2 = LatticePolytope::hull({Vec(0, 0), Vec(2, 0), Vec(0, 2)});
    record("T0: length 1, kind T0", length_2d(t0).length == 1 &&
                                        classify_length1_polygon(t0) == Length1PolygonKind::T0);
    record("unit simplex: length 1, kind unit simplex",
           classify_length1_polygon(simplex2) == Length1PolygonKind::UnitSimplex);
    record("doubled simplex: length 2", length_2d(simplex2x2).length == 2);

    // Class arithmetic.
    record("13 classes in 3D, 4 in 2D",
           all_mod3_classes(3).size() == 13 && all_mod3_classes(2).size() == 4);
    std::vector<Mod3Class> classes = all_mod3_classes(3);
    bool pairwise = true;
    for (const Mod3Class& a : classes)
      for (const Mod3Class& b : classes) {
        if (a == b) continue;
        for (const Mod3Class& c : classes)
          for (const Mod3Class& d : classes) {
            if (c == d) continue;
            auto s1 = class_combinations(a, b);
            auto s2 = class_combinations(c, d);
            bool meet = false;
            for (const Mod3Class& x : s1)
              for (const Mod3Class& y : s2) meet = meet || x == y;
            pairwise = pairwise && meet;
          }
      }
    record("2-class spans pairwise intersect", pairwise);

    // Small differential batch.
    Mcg64 rng(2024);
    bool diff_ok = true;
    for (int i = 0; i < 60 && diff_ok; ++i) {
      LatticePolytope p = random_polytope(rng, 3, 3);
      LengthResult fast = minkowski_length(p);
      diff_ok = fast.length == oracle_length(p.lattice_points(), opt.oracle_budget).length &&
                verify_decomposition(p, fast.witness);
    }
    for (int i = 0; i < 60 && diff_ok; ++i) {
      LatticePolytope p = random_polytope(rng, 2, 4);
      LengthResult fast = minkowski_length(p);
      diff_ok = fast.length == oracle_length(p.lattice_points(), opt.oracle_budget).length &&
                verify_decomposition(p, fast.witness);
    }
    record("differential batch (120 instances)", diff_ok);
  } catch (const std::exception& e) {
    record(std::string("unexpected exception: ") + e.what(), false);
  }

  json report = report_skeleton("selftest");
  report["result"]["checks"] = checks;
  report["result"]["ok"] = all_ok;
  text += all_ok ? "all checks passed\n" : "FAILURES present\n";
  emit(report, opt.as_json, text);
  std::cerr << "elapsed: " << timer.seconds() << " s\n";
  return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski length of lattice polytopes"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.as_json, "emit a JSON report on stdout");
    sub->add_option("--oracle-budget", opt.oracle_budget, "oracle recursion node budget")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* length = app.add_subcommand("length", "compute the Minkowski length of a polytope");
  length->add_option("file", opt.files, "polytope file (JSON or text)")->required()->expected(1);
  length->add_flag("--oracle", opt.use_oracle, "use the brute-force oracle");
  length->add_flag("--witness", opt.witness, "print a maximal decomposition witness");
  length->add_flag("--check", opt.check, "run both paths and compare");
  add_common(length);

  CLI::App* classify = app.add_subcommand("classify", "classify a polytope");
  classify->add_option("file", opt.files, "polytope file")->required()->expected(1);
  add_common(classify);

  CLI::App* sum = app.add_subcommand("sum", "Minkowski-sum polytopes and compute lengths");
  sum->add_option("files", opt.files, "two or more polytope files")->required()->expected(2, -1);
  sum->add_flag("--oracle", opt.use_oracle, "use the brute-force oracle for the sum");
  sum->add_flag("--witness", opt.witness, "print the sum's witness");
  add_common(sum);

  CLI::App* random = app.add_subcommand("random", "generate random instances");
  random->add_option("--count", opt.count, "number of instances")->check(CLI::PositiveNumber);
  random->add_option("--box", opt.box, "coordinate range [0, box]")->check(CLI::PositiveNumber);
  random->add_option("--dim", opt.dim, "ambient dimension")->check(CLI::Range(2, 3));
  random->add_option("--seed", opt.seed, "generator seed");
  random->add_flag("--diff", opt.diff, "differential-test fast vs oracle");
  add_common(random);

  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in verification suite");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (length->parsed()) return cmd_length(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (sum->parsed()) return cmd_sum(opt);
    if (random->parsed()) return cmd_random(opt);
    if (selftest->parsed()) return cmd_selftest(opt);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const OracleBudgetExceeded& e) {
    std::cerr << "oracle budget exceeded after " << e.nodes() << " nodes\n";
    return kExitBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}
