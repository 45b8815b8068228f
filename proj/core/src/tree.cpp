#include "bgpc/tree.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <set>
#include <sstream>

#include "bgpc/error.hpp"
#include "bgpc/fixtures.hpp"
#include "bgpc/matroid_io.hpp"
#include "bgpc/text.hpp"

namespace bgpc {

Tree graphic_leaf(Graph g) {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::Graphic;
  n->graph = std::move(g);
  return n;
}

Tree cographic_leaf(Graph g) {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::Cographic;
  n->graph = std::move(g);
  return n;
}

Tree r10_leaf(std::vector<std::string> labels) {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::R10;
  n->leaf = r10_matroid(std::move(labels));
  return n;
}

Tree f7_leaf(std::vector<std::string> labels) {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::F7;
  n->leaf = f7_matroid(std::move(labels));
  return n;
}

Tree explicit_leaf(Matroid m) {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::Explicit;
  n->leaf = std::move(m);
  return n;
}

Tree one_sum_node(Tree left, Tree right) {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::OneSum;
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

Tree two_sum_node(Tree left, Tree right, std::string glue) {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::TwoSum;
  n->left = std::move(left);
  n->right = std::move(right);
  n->glue = std::move(glue);
  return n;
}

Tree delta_sum_node(Tree left, Tree right, Triangle triangle, bool plus) {
  auto n = std::make_shared<TreeNode>();
  n->kind = plus ? NodeKind::DeltaSumPlus : NodeKind::DeltaSum;
  n->left = std::move(left);
  n->right = std::move(right);
  n->triangle = std::move(triangle);
  return n;
}

std::vector<std::string> tree_ground(const Tree& t) {
  switch (t->kind) {
    case NodeKind::Graphic:
    case NodeKind::Cographic:
      return t->graph.labels();
    case NodeKind::R10:
    case NodeKind::F7:
    case NodeKind::Explicit:
      return t->leaf.ground();
    default:
      break;
  }
  std::set<std::string> drop;
  if (t->kind == NodeKind::TwoSum) drop.insert(t->glue);
  if (t->kind == NodeKind::DeltaSum) drop.insert(t->triangle.begin(), t->triangle.end());
  std::vector<std::string> out;
  auto left = tree_ground(t->left);
  std::set<std::string> in_left(left.begin(), left.end());
  for (auto& l : left) {
    if (!drop.count(l)) out.push_back(l);
  }
  for (auto& l : tree_ground(t->right)) {
    if (!drop.count(l) && !in_left.count(l)) out.push_back(l);
  }
  return out;
}

Matroid recompose(const Tree& t) {
  switch (t->kind) {
    case NodeKind::Graphic:
      return Matroid::from_graph("graphic", t->graph);
    case NodeKind::Cographic:
      return dual(Matroid::from_graph("graphic", t->graph)).renamed("cographic");
    case NodeKind::R10:
    case NodeKind::F7:
    case NodeKind::Explicit:
      return t->leaf;
    case NodeKind::OneSum:
      return one_sum(recompose(t->left), recompose(t->right));
    case NodeKind::TwoSum:
      return two_sum(recompose(t->left), recompose(t->right), t->glue);
    case NodeKind::DeltaSum:
      return delta_sum(recompose(t->left), recompose(t->right), t->triangle);
    case NodeKind::DeltaSumPlus:
      return delta_sum_plus(recompose(t->left), recompose(t->right), t->triangle);
  }
  throw Error(ErrorKind::InvalidMatroid, "unknown tree node");
}

std::size_t tree_depth(const Tree& t) {
  if (t->is_leaf()) return 1;
  return 1 + std::max(tree_depth(t->left), tree_depth(t->right));
}

namespace {

struct Sexp {
  bool list = false;
  std::string atom;
  std::vector<Sexp> items;
  std::size_t line = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  Sexp read() {
    skip();
    if (pos_ >= s_.size()) text::fail(line_, "unexpected end of tree");
    Sexp e;
    e.line = line_;
    if (s_[pos_] == '(') {
      ++pos_;
      e.list = true;
      while (true) {
        skip();
        if (pos_ >= s_.size()) text::fail(e.line, "unbalanced '('");
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    if (s_[pos_] == ')') text::fail(line_, "unexpected ')'");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' && s_[pos_] != ')') ++pos_;
    e.atom = std::string(s_.substr(start, pos_ - start));
    return e;
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  std::size_t line() const { return line_; }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == ';' || s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::string resolve(const std::string& base, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base) / p).string();
}

std::vector<std::string> atoms(const Sexp& e, std::size_t from) {
  std::vector<std::string> out;
  for (std::size_t i = from; i < e.items.size(); ++i) {
    if (e.items[i].list) text::fail(e.items[i].line, "expected a label, found a sub-tree");
    out.push_back(e.items[i].atom);
  }
  return out;
}

int size_suffix(const std::string& atom, std::size_t line) {
  const long long v = text::parse_int(atom.substr(1), line);
  if (v < 2 || v > 64) text::fail(line, "size out of range in '" + atom + "'");
  return static_cast<int>(v);
}

Graph parse_graph_args(const Sexp& e, const std::string& base) {
  if (e.items.size() < 2) text::fail(e.line, "graph leaf needs a shape");
  const auto args = atoms(e, 1);
  const std::string& shape = args[0];
  std::vector<std::string> labels(args.begin() + 1, args.end());
  try {
    if (shape == "edges") {
      std::vector<std::pair<std::size_t, std::string>> lines;
      for (const auto& a : labels) {
        const auto colon = a.find(':');
        const auto dash = a.find('-', colon == std::string::npos ? 0 : colon);
        if (colon == std::string::npos || dash == std::string::npos) text::fail(e.line, "edge '" + a + "' is not label:u-v");
        lines.emplace_back(e.line, a.substr(0, colon) + " " + a.substr(colon + 1, dash - colon - 1) + " " + a.substr(dash + 1));
      }
      return parse_edge_lines(lines);
    }
    if (shape.rfind("file=", 0) == 0) {
      Matroid m = read_matroid(resolve(base, shape.substr(5)));
      if (!m.graph()) text::fail(e.line, "'" + shape.substr(5) + "' has no graph section");
      return *m.graph();
    }
    if (shape.size() >= 2 && shape[0] == 'K') return complete_graph(size_suffix(shape, e.line), labels);
    if (shape.size() >= 2 && shape[0] == 'C') return cycle_graph(size_suffix(shape, e.line), labels);
    if (shape.size() >= 2 && shape[0] == 'W') return wheel_graph(size_suffix(shape, e.line), labels);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::Parse) throw;
    text::fail(e.line, err.what());
  }
  text::fail(e.line, "unknown graph shape '" + shape + "'");
}

Matroid parse_inline_matroid(const Sexp& e, const std::string& base) {
  const auto args = atoms(e, 1);
  if (args.size() == 1 && args[0].find('=') == std::string::npos) return read_matroid(resolve(base, args[0]));
  if (auto file = text::keyed(args, "file")) return read_matroid(resolve(base, *file));
  auto ground = text::keyed(args, "ground");
  auto bases = text::keyed(args, "bases");
  if (!ground || !bases) text::fail(e.line, "explicit leaf needs a file or ground= and bases=");
  std::vector<std::vector<std::string>> list;
  for (const auto& b : text::split(*bases, ',')) {
    list.push_back(b == "-" ? std::vector<std::string>{} : text::split(b, '+'));
  }
  return Matroid::from_basis_labels("explicit", text::split(*ground, ','), list);
}

Tree build(const Sexp& e, const std::string& base) {
  if (!e.list || e.items.empty() || e.items[0].list) text::fail(e.line, "expected '(<kind> ...)'");
  const std::string& head = e.items[0].atom;
  auto sub = [&](std::size_t i) {
    if (i >= e.items.size() || !e.items[i].list) text::fail(e.line, "'" + head + "' needs two sub-trees");
    return build(e.items[i], base);
  };
  auto keyed_arg = [&](const char* key) {
    std::vector<std::string> rest;
    for (std::size_t i = 3; i < e.items.size(); ++i) {
      if (!e.items[i].list) rest.push_back(e.items[i].atom);
    }
    auto v = text::keyed(rest, key);
    if (!v) text::fail(e.line, "'" + head + "' needs " + key + "=");
    return *v;
  };
  try {
    if (head == "1sum") return one_sum_node(sub(1), sub(2));
    if (head == "2sum") return two_sum_node(sub(1), sub(2), keyed_arg("glue"));
    if (head == "dsum" || head == "dsum+") {
      auto parts = text::split(keyed_arg("triangle"), ',');
      if (parts.size() != 3) text::fail(e.line, "triangle= needs three labels");
      return delta_sum_node(sub(1), sub(2), {parts[0], parts[1], parts[2]}, head == "dsum+");
    }
    if (head == "graphic") return graphic_leaf(parse_graph_args(e, base));
    if (head == "cographic") return cographic_leaf(parse_graph_args(e, base));
    if (head == "explicit") return explicit_leaf(parse_inline_matroid(e, base));
    if (head == "r10") return r10_leaf(atoms(e, 1));
    if (head == "f7") return f7_leaf(atoms(e, 1));
    if (head == "r12") return r12_tree(atoms(e, 1));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::Parse) throw;
    text::fail(e.line, err.what());
  }
  text::fail(e.line, "unknown tree node '" + head + "'");
}

void write_graph(std::ostringstream& out, const Graph& g) {
  out << "edges";
  for (const auto& e : g.edges()) out << ' ' << e.label << ':' << e.u + 1 << '-' << e.v + 1;
}

void write(std::ostringstream& out, const Tree& t) {
  switch (t->kind) {
    case NodeKind::Graphic:
      out << "(graphic ";
      write_graph(out, t->graph);
      out << ')';
      return;
    case NodeKind::Cographic:
      out << "(cographic ";
      write_graph(out, t->graph);
      out << ')';
      return;
    case NodeKind::R10:
    case NodeKind::F7:
      out << (t->kind == NodeKind::R10 ? "(r10" : "(f7");
      for (const auto& l : t->leaf.ground()) out << ' ' << l;
      out << ')';
      return;
    case NodeKind::Explicit: {
      out << "(explicit ground=";
      const auto& g = t->leaf.ground();
      for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i];
      out << " bases=";
      bool first = true;
      for (auto b : t->leaf.bases()) {
        out << (first ? "" : ",");
        first = false;
        auto labels = t->leaf.labels_of(b);
        if (labels.empty()) out << '-';
        for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "+" : "") << labels[i];
      }
      out << ')';
      return;
    }
    case NodeKind::OneSum:
      out << "(1sum ";
      break;
    case NodeKind::TwoSum:
      out << "(2sum ";
      break;
    case NodeKind::DeltaSum:
      out << "(dsum ";
      break;
    case NodeKind::DeltaSumPlus:
      out << "(dsum+ ";
      break;
  }
  write(out, t->left);
  out << ' ';
  write(out, t->right);
  if (t->kind == NodeKind::TwoSum) out << " glue=" << t->glue;
  if (t->kind == NodeKind::DeltaSum || t->kind == NodeKind::DeltaSumPlus) {
    out << " triangle=" << t->triangle[0] << ',' << t->triangle[1] << ',' << t->triangle[2];
  }
  out << ')';
}

}  // namespace

Tree parse_tree(std::string_view input, const std::string& base_dir) {
  Reader r(input);
  Sexp e = r.read();
  if (!r.at_end()) text::fail(r.line(), "trailing content after tree");
  return build(e, base_dir);
}

std::string format_tree(const Tree& t) {
  std::ostringstream out;
  write(out, t);
  return out.str();
}

}  // namespace bgpc
