#include "bgpc/matroid_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bgpc/error.hpp"
#include "bgpc/text.hpp"

namespace bgpc {

Graph parse_edge_lines(const std::vector<std::pair<std::size_t, std::string>>& lines) {
  struct Raw {
    std::string label;
    long long u, v;
  };
  std::vector<Raw> raw;
  std::map<long long, int> ids;
  for (const auto& [number, line] : lines) {
    auto tok = text::split_ws(line);
    if (tok.size() != 3) text::fail(number, "edge line must be 'label u v'");
    Raw r{tok[0], text::parse_int(tok[1], number), text::parse_int(tok[2], number)};
    if (r.u < 0 || r.v < 0) text::fail(number, "vertex ids must be non-negative");
    ids.emplace(r.u, 0);
    ids.emplace(r.v, 0);
    raw.push_back(std::move(r));
  }
  int next = 0;
  for (auto& [key, id] : ids) id = next++;
  std::vector<Edge> edges;
  for (const auto& r : raw) edges.push_back({r.label, ids[r.u], ids[r.v]});
  return Graph(next, std::move(edges));
}

Matroid parse_matroid(std::string_view input) {
  const auto lines = text::content_lines(input);
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty matroid file");
  const auto header = text::split_ws(lines[0].text);
  if (header.size() < 2 || header[0] != "matroid") text::fail(lines[0].number, "expected 'matroid <name> rank=<r> n=<n>'");
  const std::string name = header[1];
  auto rank_s = text::keyed(header, "rank");
  auto n_s = text::keyed(header, "n");
  if (!rank_s || !n_s) text::fail(lines[0].number, "header needs rank= and n=");
  const long long rank = text::parse_int(*rank_s, lines[0].number);
  const long long n = text::parse_int(*n_s, lines[0].number);
  if (lines.size() < 2) text::fail(lines[0].number, "missing section after header");
  const std::string section = lines[1].text;
  const std::size_t body = 2;

  Matroid m;
  if (section == "bases:") {
    std::vector<std::string> ground;
    std::map<std::string, bool> seen;
    std::vector<std::vector<std::string>> bases;
    for (std::size_t i = body; i < lines.size(); ++i) {
      auto tok = text::split_ws(lines[i].text);
      if (tok.size() == 1 && tok[0] == "-") tok.clear();
      if (static_cast<long long>(tok.size()) != rank) {
        text::fail(lines[i].number, "basis has " + std::to_string(tok.size()) + " elements, rank is " + std::to_string(rank));
      }
      for (const auto& l : tok) {
        if (!seen[l]) {
          seen[l] = true;
          ground.push_back(l);
        }
      }
      bases.push_back(std::move(tok));
    }
    if (auto g = text::keyed(header, "ground")) {
      std::vector<std::string> declared = text::split(*g, ',');
      for (const auto& l : ground) {
        if (std::find(declared.begin(), declared.end(), l) == declared.end()) {
          text::fail(lines[0].number, "basis element '" + l + "' missing from ground=");
        }
      }
      ground = declared;
    }
    if (static_cast<long long>(ground.size()) != n) {
      text::fail(lines[0].number, "bases mention " + std::to_string(ground.size()) + " elements, header says n=" + std::to_string(n));
    }
    m = Matroid::from_basis_labels(name, ground, bases);
  } else if (section == "binary:") {
    if (lines.size() < body + static_cast<std::size_t>(rank) + 1) text::fail(lines[1].number, "binary section needs rank rows and a label line");
    std::vector<std::string> rows;
    for (long long i = 0; i < rank; ++i) rows.push_back(lines[body + static_cast<std::size_t>(i)].text);
    BinaryMatrix a;
    try {
      a = BinaryMatrix::from_strings(rows);
    } catch (const Error& e) {
      text::fail(lines[body].number, e.what());
    }
    const auto& label_line = lines[body + static_cast<std::size_t>(rank)];
    auto labels = text::split_ws(label_line.text);
    if (static_cast<long long>(labels.size()) != n || static_cast<long long>(a.cols()) != n) {
      text::fail(label_line.number, "expected " + std::to_string(n) + " columns and labels");
    }
    if (static_cast<long long>(a.rank()) != rank) {
      text::fail(lines[1].number, "matrix has GF(2) rank " + std::to_string(a.rank()) + ", header says rank=" + std::to_string(rank));
    }
    if (lines.size() > body + static_cast<std::size_t>(rank) + 1) text::fail(lines.back().number, "trailing content");
    m = Matroid::from_binary(name, labels, a);
  } else if (section == "graph:") {
    std::vector<std::pair<std::size_t, std::string>> edge_lines;
    for (std::size_t i = body; i < lines.size(); ++i) edge_lines.emplace_back(lines[i].number, lines[i].text);
    Graph g = parse_edge_lines(edge_lines);
    if (static_cast<long long>(g.edge_count()) != n) text::fail(lines[0].number, "graph has " + std::to_string(g.edge_count()) + " edges, header says n=" + std::to_string(n));
    if (!g.is_connected()) text::fail(lines[1].number, "graph is not connected");
    if (g.vertex_count() - 1 != rank) {
      text::fail(lines[0].number, "graph has rank " + std::to_string(g.vertex_count() - 1) + ", header says rank=" + std::to_string(rank));
    }
    m = Matroid::from_graph(name, std::move(g));
  } else {
    text::fail(lines[1].number, "unknown section '" + section + "'");
  }
  if (static_cast<long long>(m.rank()) != rank) {
    text::fail(lines[0].number, "rank mismatch: header " + std::to_string(rank) + ", data " + std::to_string(m.rank()));
  }
  return m;
}

Matroid read_matroid(const std::string& path) { return parse_matroid(text::read_file(path)); }

std::string format_matroid(const Matroid& m) {
  std::ostringstream out;
  out << "matroid " << m.name() << " rank=" << m.rank() << " n=" << m.size();
  if (const Graph* g = m.graph()) {
    out << "\ngraph:\n";
    for (const auto& e : g->edges()) out << e.label << ' ' << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
  }
  if (const BinaryMatrix* a = m.binary()) {
    out << "\nbinary:\n";
    for (std::size_t i = 0; i < a->rows(); ++i) out << a->row_string(i) << '\n';
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.ground()[j];
    out << '\n';
    return out.str();
  }
  out << " ground=";
  for (std::size_t j = 0; j < m.size(); ++j) out << (j ? "," : "") << m.ground()[j];
  out << "\nbases:\n";
  for (auto b : m.bases()) {
    auto labels = m.labels_of(b);
    if (labels.empty()) out << "-";
    for (std::size_t k = 0; k < labels.size(); ++k) out << (k ? " " : "") << labels[k];
    out << '\n';
  }
  return out.str();
}

}  // namespace bgpc
