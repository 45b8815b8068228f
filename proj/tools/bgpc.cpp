#include <filesystem>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "bgpc/decompose.hpp"
#include "bgpc/error.hpp"
#include "bgpc/fixtures.hpp"
#include "bgpc/int_matrix.hpp"
#include "bgpc/matroid_io.hpp"
#include "bgpc/matroid_ops.hpp"
#include "bgpc/relu.hpp"
#include "bgpc/suites.hpp"
#include "bgpc/synth.hpp"
#include "bgpc/text.hpp"
#include "bgpc/tropical.hpp"

namespace fs = std::filesystem;
using namespace bgpc;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string tree;
  std::string matroid;
  bool autodecompose = false;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  std::size_t max_n = kAutoGuard;
  std::string circuit;
  std::string point;
  std::vector<std::string> assignments;
  bool ones = false;
  bool tropicalize = false;
  std::string suite;
  std::string fixture;
};

// Writes to --out when given (report on stdout), otherwise the artifact goes
// to stdout and the report to stderr.
void emit(const Options& o, const std::string& artifact, const std::string& report) {
  if (o.out.empty()) {
    std::cout << artifact;
    std::cerr << report;
    return;
  }
  text::write_file(o.out, artifact);
  std::cout << "wrote " << o.out << '\n' << report;
}

Tree load_tree(const std::string& arg) {
  if (text::trim(arg).rfind('(', 0) == 0) return parse_tree(arg, ".");
  const fs::path p(arg);
  return parse_tree(text::read_file(arg), p.has_parent_path() ? p.parent_path().string() : ".");
}

Assignment load_point(const Options& o, const std::vector<std::string>& vars) {
  Assignment p;
  if (o.ones) {
    for (const auto& v : vars) p[v] = 1;
  }
  if (!o.point.empty()) {
    for (const auto& line : text::content_lines(text::read_file(o.point))) {
      std::string s = line.text;
      std::replace(s.begin(), s.end(), '=', ' ');
      const auto tok = text::split_ws(s);
      if (tok.size() != 2) text::fail(line.number, "expected '<variable> <value>'");
      p[tok[0]] = parse_rational(tok[1]);
    }
  }
  for (const auto& a : o.assignments) {
    for (const auto& part : text::split(a, ',')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::Usage, "--set expects name=value, got '" + part + "'");
      p[part.substr(0, eq)] = parse_rational(part.substr(eq + 1));
    }
  }
  return p;
}

int cmd_synth(const Options& o) {
  if (o.tree.empty() == o.matroid.empty()) throw Error(ErrorKind::Usage, "synth needs exactly one of --tree and --matroid");
  Tree tree;
  std::ostringstream report;
  if (!o.tree.empty()) {
    tree = load_tree(o.tree);
  } else {
    const Matroid m = read_matroid(o.matroid);
    if (o.autodecompose) {
      if (o.max_n != kAutoGuard) std::cerr << "warning: --max-n " << o.max_n << " overrides the default guard of " << kAutoGuard << '\n';
      tree = auto_decompose(m, o.max_n);
      report << "tree " << format_tree(tree) << '\n';
    } else if (m.graph()) {
      tree = graphic_leaf(*m.graph());
    } else {
      tree = explicit_leaf(m);
    }
  }
  const SynthesisReport r = synth(tree);
  report << "size=" << r.size << " n=" << r.elements << " bound=" << r.bound;
  if (tree->kind == NodeKind::Graphic) report << " half_bound=" << r.bound / 2;
  report << '\n' << format_ledger(r);
  emit(o, format_circuit(r.circuit), report.str());
  return 0;
}

int cmd_eval(const Options& o) {
  const Circuit c = parse_circuit(text::read_file(o.circuit));
  std::cout << to_string(eval_rational(c, load_point(o, c.variables()))) << '\n';
  return 0;
}

TropicalCircuit load_tropical(const Options& o) {
  const std::string body = text::read_file(o.circuit);
  return o.tropicalize ? tropicalize(parse_circuit(body)) : parse_tropical(body);
}

int cmd_trop_eval(const Options& o) {
  const TropicalCircuit t = load_tropical(o);
  std::cout << to_string(eval_tropical(t, load_point(o, t.variables()))) << '\n';
  return 0;
}

int cmd_relu_export(const Options& o) {
  const TropicalCircuit t = load_tropical(o);
  const ReluNetwork net = lower_to_relu(t);
  std::ostringstream report;
  report << "neurons=" << net.size() << " bound=" << 3 * t.size() << " unit_weights=" << (net.unit_weights() ? "yes" : "no")
         << '\n';
  emit(o, format_relu(net), report.str());
  return 0;
}

int cmd_verify(const Options& o) {
  SuiteOptions opts;
  opts.seed = o.seed;
  if (o.trials > 0) {
    std::cerr << "warning: --trials " << o.trials << " replaces the default trial counts of every suite\n";
    opts.trials = o.trials;
  }
  bool ok = true;
  for (int id : suite_criteria(o.suite)) {
    const CriterionResult r = run_criterion(id, opts);
    std::cout << format_result(r) << '\n';
    for (const auto& line : r.lines) std::cout << "  " << line << '\n';
    ok = ok && r.pass;
  }
  if (o.suite == "all") {
    const CriterionResult r = run_coverage(opts);
    std::cout << "coverage " << (r.pass ? "PASS " : "FAIL ") << r.summary << '\n';
    for (const auto& line : r.lines) std::cout << "  " << line << '\n';
    ok = ok && r.pass;
  }
  return ok ? 0 : kFailure;
}

int cmd_stats(const Options& o) {
  const std::string body = text::read_file(o.circuit);
  std::map<std::string, std::size_t> ops;
  std::size_t gates = 0, size = 0, vars = 0;
  std::vector<std::size_t> depth;
  auto record = [&](const std::string& op, std::size_t d) {
    ++ops[op];
    depth.push_back(d);
  };
  try {
    const Circuit c = parse_circuit(body);
    for (const auto& g : c.gates()) {
      const char* names[] = {"input", "add", "mul", "div"};
      record(names[static_cast<int>(g.op)], g.op == Op::Input ? 0 : 1 + std::max(depth[g.lhs], depth[g.rhs]));
    }
    gates = c.gates().size();
    size = c.size();
    vars = c.variables().size();
    depth = {depth[c.output()]};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse) throw;
    const TropicalCircuit t = parse_tropical(body);
    ops.clear();
    depth.clear();
    for (const auto& g : t.gates()) {
      const char* names[] = {"input", "max", "add", "sub"};
      record(names[static_cast<int>(g.op)], g.op == TropOp::Input ? 0 : 1 + std::max(depth[g.lhs], depth[g.rhs]));
    }
    gates = t.gates().size();
    size = t.size();
    vars = t.variables().size();
    depth = {depth[t.output()]};
  }
  std::cout << "gates=" << gates << " size=" << size << " variables=" << vars << " depth=" << depth.front();
  for (const auto& [op, count] : ops) {
    if (op != "input") std::cout << ' ' << op << '=' << count;
  }
  std::cout << '\n';
  return 0;
}

int cmd_gen(const Options& o) {
  const std::string dir = o.out.empty() ? "." : o.out;
  fs::create_directories(dir);
  std::string name = o.fixture;
  if (name == "random-composite") name += "-" + std::to_string(o.seed);
  const Fixture f = make_fixture(name);
  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back(name + ".tree", format_tree(f.tree) + "\n");
  Matroid m = f.matroid.renamed(name);
  if (name == "r10") m = Matroid::from_binary(name, m.ground(), standard_form(matrix_a10()));
  if (name == "r12") m = Matroid::from_binary(name, m.ground(), standard_form(matrix_a12()));
  if (name == "f7") m = Matroid::from_binary(name, m.ground(), standard_form(matrix_a7()));
  files.emplace_back(name + ".mtx", format_matroid(m));
  if (name == "r10" || name == "r12" || name == "f7") {
    const BinaryMatrix a = name == "r10" ? matrix_a10() : name == "r12" ? matrix_a12() : matrix_a7();
    IntMatrix block(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) block(i, j) = a.get(i, j);
    }
    files.emplace_back(name + "-block.mat", format_int_matrix(block));
  }
  for (const auto& [file, body] : files) {
    const std::string path = (fs::path(dir) / file).string();
    text::write_file(path, body);
    std::cout << "wrote " << path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bgpc: basis generating polynomial circuits for regular matroids"};
  app.require_subcommand(1);
  Options o;
  auto seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "random seed"); };

  auto* synth = app.add_subcommand("synth", "synthesize a circuit from a decomposition tree or a matroid file");
  synth->add_option("--tree", o.tree, "tree expression or tree file");
  synth->add_option("--matroid", o.matroid, "matroid file");
  synth->add_flag("--auto", o.autodecompose, "decompose the matroid automatically");
  synth->add_option("--max-n", o.max_n, "ground-size guard for --auto");
  synth->add_option("--out", o.out, "circuit output path");
  seed(synth);

  auto* eval = app.add_subcommand("eval", "evaluate a circuit at a rational point");
  auto* trop = app.add_subcommand("trop-eval", "evaluate a tropical circuit at a point");
  for (auto* c : {eval, trop}) {
    c->add_option("circuit", o.circuit, "circuit file")->required();
    c->add_option("point", o.point, "point file with '<variable> <value>' lines");
    c->add_flag("--ones", o.ones, "assign 1 to every variable");
    c->add_option("--set", o.assignments, "name=value[,name=value...]");
  }
  trop->add_flag("--tropicalize", o.tropicalize, "read a (+,*,/) circuit and tropicalize it first");

  auto* relu = app.add_subcommand("relu-export", "lower a tropical circuit to a ReLU network");
  relu->add_option("circuit", o.circuit, "circuit file")->required();
  relu->add_flag("--tropicalize", o.tropicalize, "read a (+,*,/) circuit and tropicalize it first");
  relu->add_option("--out", o.out, "network output path");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", o.suite, "core, tropical, matrices or all")->required();
  verify->add_option("--trials", o.trials, "trial count for every randomized suite");
  seed(verify);

  auto* stats = app.add_subcommand("stats", "gate statistics of a circuit file");
  stats->add_option("circuit", o.circuit, "circuit or tropical circuit file")->required();

  auto* gen = app.add_subcommand("gen", "write fixture files");
  gen->add_option("fixture", o.fixture, "k3..k7, k3-co..k7-co, r10, r12, f7, c4-2sum, k4-dsum-k4, random-composite")->required();
  gen->add_option("--out", o.out, "output directory");
  seed(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*synth) return cmd_synth(o);
    if (*eval) return cmd_eval(o);
    if (*trop) return cmd_trop_eval(o);
    if (*relu) return cmd_relu_export(o);
    if (*verify) return cmd_verify(o);
    if (*stats) return cmd_stats(o);
    if (*gen) return cmd_gen(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Usage ? kUsage : kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
