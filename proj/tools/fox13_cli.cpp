// fox13: command-line front end. Exit codes:
//   0 success, 1 input or usage error, 2 mathematical or internal error,
//   3 zero determinant, 4 budget exhausted, 5 a check reported failures.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fox13/elimination.hpp"
#include "fox13/palettes.hpp"
#include "fox13/verifier.hpp"

namespace {

using namespace fox13;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kInput = 1, kMath = 2, kZeroDet = 3, kBudget = 4, kCheckFailed = 5 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A PD file holds X(...) tokens; '#' starts a comment.
Diagram read_pd(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line, text;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    text += line + ' ';
  }
  return parse_pd(text);
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string braces(const std::vector<int>& v) { return "{" + join(v) + "}"; }

struct Common {
  std::string pd;
  int p = 13;
  bool json = false;
};

int cmd_color(const Common& o) {
  Diagram d = read_pd(o.pd);
  ColoringSpace space = solve_colorings(d, o.p);
  const int dim = space.dimension();
  BigInt count = 1;
  for (int i = 0; i < dim; ++i) count *= o.p;
  auto sample = first_nontrivial(space);
  if (o.json) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : space.basis) basis.push_back(b);
    nlohmann::json j{{"p", o.p}, {"arcs", d.num_arcs()}, {"dimension", dim}, {"colorings", count.str()},
                     {"basis", basis}};
    j["sample"] = sample ? nlohmann::json(sample->colors) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "dimension " << dim << "\ncolorings " << count << "\n";
    if (sample)
      std::cout << "sample " << join(sample->colors) << "\npalette " << braces(palette(*sample)) << "\n";
    else
      std::cout << "sample none (trivial colorings only)\n";
  }
  return kOk;
}

int cmd_det(const Common& o) {
  BigInt det = determinant(read_pd(o.pd));
  if (o.json)
    std::cout << nlohmann::json{{"determinant", det.str()}}.dump() << '\n';
  else
    std::cout << det << '\n';
  return kOk;
}

int cmd_snf(const Common& o) {
  Diagram d = read_pd(o.pd);
  ColoringMatrix m = build_matrix(d);
  SmithForm s = smith_normal_form(m.matrix);
  if (!verify_smith(m.matrix, s)) throw std::logic_error("Smith form failed its own certificate");
  std::vector<std::string> diag;
  for (const auto& v : s.diag) diag.push_back(v.str());
  if (o.json) {
    std::cout << nlohmann::json{{"rows", m.matrix.rows()}, {"cols", m.matrix.cols()}, {"diagonal", diag}, {"rank", s.rank}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < diag.size(); ++i) std::cout << (i ? " " : "") << diag[i];
    std::cout << '\n';
  }
  return kOk;
}

struct MinimizeOptions {
  long budget = 100000;
  long initial_budget = 200;
  double time_limit = 0;
  std::string trace_out;
};

int cmd_minimize(const Common& o, const MinimizeOptions& m) {
  if (o.p != 13) throw InputError("minimize runs the mod 13 elimination; -p must be 13");
  Diagram d = read_pd(o.pd);
  if (determinant(d) == 0) throw ZeroDeterminant();
  auto coloring = first_nontrivial(solve_colorings(d, 13));
  if (!coloring) throw std::domain_error("determinant is not divisible by 13; no nontrivial coloring");
  SearchOptions opts;
  opts.budget = m.budget;
  opts.initial_budget = m.initial_budget;
  opts.time_limit = m.time_limit;
  SequenceResult r = run_sequence({d, *coloring}, opts);
  for (const auto& t : r.traces)
    if (replay(t).coloring != t.final.coloring) throw std::logic_error("replay disagrees with the trace");
  if (!m.trace_out.empty()) {
    fs::path dir(m.trace_out);
    for (const auto& t : r.traces) write_json(dir / ("trace_" + std::to_string(t.target) + ".json"), to_json(t));
    write_json(dir / "final.json", to_json(r.final));
  }
  if (o.json) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& t : r.traces)
      steps.push_back({{"target", t.target}, {"steps", t.steps.size()}, {"expansions", t.expansions}});
    std::cout << nlohmann::json{{"lambda", r.lambda},     {"mu", r.mu},
                                {"attempts", r.attempts}, {"budget", r.budget},
                                {"traces", steps},        {"crossings", r.final.diagram.num_crossings()},
                                {"palette", r.normalized}, {"input_palette", r.raw}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "normalization " << r.lambda << "x+" << r.mu << " (attempt " << r.attempts << ", budget "
              << r.budget << ")\n";
    for (const auto& t : r.traces)
      std::cout << "color " << t.target << ": " << t.steps.size() << " moves, " << t.expansions << " expansions\n";
    std::cout << "final crossings " << r.final.diagram.num_crossings() << "\nfinal palette "
              << braces(r.normalized) << " (input colors " << braces(r.raw) << ")\n";
  }
  return kOk;
}

int cmd_verify_tables(bool json, const std::string& tables, const std::string& report_out) {
  if (!tables.empty() && !fs::exists(tables)) throw InputError("cannot open " + tables);
  TableSet set = tables.empty() ? embedded_tables() : load_tables(tables);
  VerificationReport r = verify_tables(set);
  if (!report_out.empty()) write_json(report_out, to_json(r));
  if (json)
    std::cout << to_json(r).dump(2) << '\n';
  else
    std::cout << to_text(r);
  return r.ok() ? kOk : kCheckFailed;
}

struct PalettesOptions {
  std::string corpus;
  int max_crossings = 8;
  int bound = 5;
  int max_dim = kDefaultMaxDimension;
  bool minimize = true;
  long budget = 100000;
};

// Lower bound from exhaustive enumeration on each diagram, then the affine
// classes of the palettes the elimination reaches on every member.
int cmd_palettes(bool json, int p, const PalettesOptions& o) {
  if (!fs::exists(o.corpus)) throw InputError("cannot open " + o.corpus);
  CorpusLoad load = load_corpus(o.corpus, o.max_crossings, p);
  LowerBoundReport r = lower_bound_check(load.corpus, o.bound, o.max_dim);
  std::vector<Palette> reached;
  nlohmann::json runs = nlohmann::json::array();
  if (o.minimize) {
    if (p != 13) throw InputError("palettes runs the mod 13 elimination; use --no-minimize for other moduli");
    SearchOptions opts;
    opts.budget = o.budget;
    for (const auto& m : load.corpus.members()) {
      auto coloring = first_nontrivial(solve_colorings(m.diagram, p));
      if (!coloring) throw std::logic_error(m.name + " has no nontrivial coloring");
      SequenceResult s = run_sequence({m.diagram, *coloring}, opts);
      for (const auto& t : s.traces)
        if (replay(t).coloring != t.final.coloring) throw std::logic_error("replay disagrees with the trace");
      reached.push_back(s.raw);
      runs.push_back({{"name", m.name}, {"palette", s.raw}, {"normalized", s.normalized}});
    }
  }
  auto classes = affine_classes(reached, p);
  const bool ok = r.ok() && (!o.minimize || (classes.size() == 1 && reached.front().size() ==
                                                                        static_cast<std::size_t>(o.bound)));
  if (json) {
    auto j = to_json(r);
    j["read"] = load.read;
    j["minimized"] = runs;
    j["classes"] = classes;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << load.read << " diagrams read, " << load.corpus.members().size() << " kept\n" << to_text(r);
    for (const auto& run : runs)
      std::cout << "minimized " << run["name"].get<std::string>() << ": "
                << braces(run["palette"].get<Palette>()) << '\n';
    if (o.minimize) {
      std::cout << classes.size() << " affine class(es) of reached palettes:";
      for (const auto& c : classes) std::cout << ' ' << braces(c);
      std::cout << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_rewrite(const Common& o, const std::string& state, const std::string& site, const std::string& list,
                const std::string& out) {
  ColoredDiagram cd;
  if (!state.empty()) {
    cd = colored_diagram_from_json(nlohmann::json::parse(read_file(state)));
  } else {
    cd.diagram = read_pd(o.pd);
    auto c = first_nontrivial(solve_colorings(cd.diagram, o.p));
    if (!c) throw std::domain_error("no nontrivial coloring to carry");
    cd.coloring = *c;
  }
  if (!list.empty()) {
    for (const auto& s : legal_sites(cd.diagram, move_kind_from_string(list))) std::cout << site_spec(s) << '\n';
    return kOk;
  }
  MoveResult r = apply_move(cd, parse_site_spec(site));
  if (!is_valid_coloring(r.after.diagram, r.after.coloring))
    throw std::logic_error("transported coloring is invalid");
  if (!out.empty()) write_json(out, to_json(r.after));
  if (o.json) {
    std::cout << nlohmann::json{{"step", to_json(r.step)}, {"result", to_json(r.after)}}.dump(2) << '\n';
  } else {
    std::cout << serialize(r.after.diagram) << "\ncolors " << join(r.after.coloring.colors) << "\npalette "
              << braces(palette(r.after.coloring)) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fox colorings modulo 13: determinants, palettes, and color elimination"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Machine-readable JSON output");

  auto add_pd = [&](CLI::App* sub) {
    sub->add_option("pd-file", common.pd, "File with a PD code")->required();
  };
  auto add_modulus = [&](CLI::App* sub) {
    sub->add_option("-p,--modulus", common.p, "Prime modulus")->check(CLI::Range(2, 1000003));
  };

  auto* color = app.add_subcommand("color", "Kernel dimension, coloring count, and a sample coloring");
  add_pd(color);
  add_modulus(color);
  auto* det = app.add_subcommand("det", "Knot determinant");
  add_pd(det);
  auto* snf = app.add_subcommand("snf", "Smith normal form diagonal of the coloring matrix");
  add_pd(snf);

  MinimizeOptions mopt;
  auto* minimize = app.add_subcommand("minimize", "Eliminate colors down to a five-color palette");
  add_pd(minimize);
  add_modulus(minimize);
  minimize->add_option("--budget", mopt.budget, "Node expansions per color")->check(CLI::PositiveNumber);
  minimize->add_option("--initial-budget", mopt.initial_budget, "Budget of the first normalization pass")
      ->check(CLI::PositiveNumber);
  minimize->add_option("--time-limit", mopt.time_limit, "Seconds before giving up; 0 means none")
      ->check(CLI::NonNegativeNumber);
  minimize->add_option("--trace-out", mopt.trace_out, "Directory for replayable JSON traces");

  std::string tables, report_out;
  auto* verify = app.add_subcommand("verify-tables", "Check the elimination and duplet tables");
  verify->add_option("--tables", tables, "Table file instead of the built-in copy");
  verify->add_option("--report-out", report_out, "Write the JSON report here");

  PalettesOptions popt;
  auto* pal = app.add_subcommand("palettes", "Palette lower bound and reached palettes over a corpus");
  pal->add_option("corpus-file", popt.corpus, "Lines of 'name X(...) ...'")->required();
  add_modulus(pal);
  pal->add_option("--max-crossings", popt.max_crossings, "Skip diagrams with more crossings");
  pal->add_option("--bound", popt.bound, "Palette size every nontrivial coloring must reach");
  pal->add_option("--max-dim", popt.max_dim, "Largest kernel dimension enumerated");
  pal->add_flag("!--no-minimize", popt.minimize, "Only run the lower bound check");
  pal->add_option("--budget", popt.budget, "Node expansions per color")->check(CLI::PositiveNumber);

  std::string state, site, list, out;
  auto* rewrite = app.add_subcommand("rewrite", "Apply one move to a colored diagram");
  rewrite->add_option("pd-file", common.pd, "File with a PD code");
  add_modulus(rewrite);
  rewrite->add_option("--state", state, "Colored diagram JSON instead of a PD file");
  auto* site_opt = rewrite->add_option("--site", site, "Move site spec, e.g. r2push:0.1:3.0:under");
  auto* list_opt = rewrite->add_option("--list", list, "List legal sites of a move kind instead");
  site_opt->excludes(list_opt);
  rewrite->add_option("--out", out, "Write the resulting colored diagram JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*color) return cmd_color(common);
    if (*det) return cmd_det(common);
    if (*snf) return cmd_snf(common);
    if (*minimize) return cmd_minimize(common, mopt);
    if (*verify) return cmd_verify_tables(common.json, tables, report_out);
    if (*pal) return cmd_palettes(common.json, common.p, popt);
    if (*rewrite) {
      if (common.pd.empty() == state.empty()) throw InputError("rewrite needs exactly one of pd-file and --state");
      if (site.empty() == list.empty()) throw InputError("rewrite needs exactly one of --site and --list");
      return cmd_rewrite(common, state, site, list, out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const DiagramError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const TableFormatError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const ZeroDeterminant& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kZeroDet;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMath;
  }
  return kMath;
}
