#include "bgpc/circuit.hpp"

#include <optional>
#include <sstream>

#include "bgpc/error.hpp"
#include "bgpc/text.hpp"
#include "gate_names.hpp"

namespace bgpc {

Circuit::Circuit(std::vector<Gate> gates, std::size_t output) : gates_(std::move(gates)), output_(output) {
  if (output_ >= gates_.size()) throw Error(ErrorKind::InvalidMatroid, "circuit output out of range");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.op == Op::Input) continue;
    if (g.lhs >= i || g.rhs >= i) throw Error(ErrorKind::InvalidMatroid, "gate " + std::to_string(i) + " references a later gate");
    ++size_;
  }
}

std::vector<std::string> Circuit::variables() const {
  std::vector<std::string> out;
  for (const auto& g : gates_) {
    if (g.op == Op::Input) out.push_back(g.var);
  }
  return out;
}

std::size_t CircuitBuilder::input(const std::string& var) {
  auto [it, fresh] = inputs_.emplace(var, gates_.size());
  if (fresh) gates_.push_back({Op::Input, 0, 0, var});
  return it->second;
}

std::size_t CircuitBuilder::push(Op op, std::size_t a, std::size_t b) {
  gates_.push_back({op, a, b, {}});
  ++size_;
  return gates_.size() - 1;
}

std::size_t CircuitBuilder::splice(const Circuit& c, const std::map<std::string, std::size_t>& bound) {
  std::vector<std::size_t> id(c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    if (g.op == Op::Input) {
      auto it = bound.find(g.var);
      id[i] = it != bound.end() ? it->second : input(g.var);
    } else {
      id[i] = push(g.op, id[g.lhs], id[g.rhs]);
    }
  }
  return id[c.output()];
}

Circuit CircuitBuilder::build(std::size_t output) const { return Circuit(gates_, output); }

std::vector<Rational> eval_gates(const Circuit& c, const Assignment& point) {
  std::vector<Rational> v(c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    switch (g.op) {
      case Op::Input: {
        auto it = point.find(g.var);
        if (it == point.end()) throw Error(ErrorKind::Parse, "no value for variable '" + g.var + "'");
        v[i] = it->second;
        break;
      }
      case Op::Add:
        v[i] = v[g.lhs] + v[g.rhs];
        break;
      case Op::Mul:
        v[i] = v[g.lhs] * v[g.rhs];
        break;
      case Op::Div:
        if (v[g.rhs] == 0) throw Error(ErrorKind::DivisionByZero, "gate g" + std::to_string(i) + " divides by zero");
        v[i] = v[g.lhs] / v[g.rhs];
        break;
    }
  }
  return v;
}

Rational eval_rational(const Circuit& c, const Assignment& point) {
  return eval_gates(c, point)[c.output()];
}

Circuit substitute(const Circuit& c, const std::map<std::string, Circuit>& bindings) {
  CircuitBuilder b;
  std::map<std::string, std::size_t> bound;
  for (const auto& [var, sub] : bindings) bound[var] = b.splice(sub);
  const std::size_t out = b.splice(c, bound);
  return b.build(out);
}

Circuit prune(const Circuit& c) {
  const auto& gates = c.gates();
  std::vector<bool> live(gates.size(), false);
  live[c.output()] = true;
  for (std::size_t i = gates.size(); i-- > 0;) {
    if (!live[i] || gates[i].op == Op::Input) continue;
    live[gates[i].lhs] = true;
    live[gates[i].rhs] = true;
  }
  std::vector<std::size_t> id(gates.size());
  std::vector<Gate> kept;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (!live[i]) continue;
    Gate g = gates[i];
    if (g.op != Op::Input) {
      g.lhs = id[g.lhs];
      g.rhs = id[g.rhs];
    }
    id[i] = kept.size();
    kept.push_back(std::move(g));
  }
  return Circuit(std::move(kept), id[c.output()]);
}

Circuit eliminate_zero(const Circuit& c, const std::set<std::string>& zeroed) {
  CircuitBuilder b;
  std::vector<std::optional<std::size_t>> id(c.gates().size());  // nullopt = formal zero
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    if (g.op == Op::Input) {
      if (!zeroed.count(g.var)) id[i] = b.input(g.var);
      continue;
    }
    const auto& l = id[g.lhs];
    const auto& r = id[g.rhs];
    switch (g.op) {
      case Op::Add:
        id[i] = !l ? r : (!r ? l : std::optional(b.add(*l, *r)));
        break;
      case Op::Mul:
        if (l && r) id[i] = b.mul(*l, *r);
        break;
      case Op::Div:
        if (!r) throw Error(ErrorKind::PoleAtZero, "gate g" + std::to_string(i) + " divides by a formal zero");
        if (l) id[i] = b.div(*l, *r);
        break;
      case Op::Input:
        break;
    }
  }
  if (!id[c.output()]) throw Error(ErrorKind::ZeroOutput, "circuit is identically zero after zeroing");
  return prune(b.build(*id[c.output()]));
}

Circuit naive_from_bases(const std::vector<std::vector<std::string>>& bases) {
  if (bases.empty()) throw Error(ErrorKind::EmptyBasisSet, "no bases to sum");
  const std::size_t k = bases.front().size();
  if (k == 0) throw Error(ErrorKind::RankZero, "rank-0 polynomial is the constant 1");
  CircuitBuilder b;
  std::optional<std::size_t> sum;
  for (const auto& basis : bases) {
    if (basis.size() != k) throw Error(ErrorKind::InvalidMatroid, "bases differ in size");
    std::size_t prod = b.input(basis[0]);
    for (std::size_t i = 1; i < k; ++i) prod = b.mul(prod, b.input(basis[i]));
    sum = sum ? b.add(*sum, prod) : prod;
  }
  return b.build(*sum);
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    out << 'g' << i << " = ";
    switch (g.op) {
      case Op::Input:
        out << "input " << g.var;
        break;
      case Op::Add:
        out << "add g" << g.lhs << " g" << g.rhs;
        break;
      case Op::Mul:
        out << "mul g" << g.lhs << " g" << g.rhs;
        break;
      case Op::Div:
        out << "div g" << g.lhs << " g" << g.rhs;
        break;
    }
    out << '\n';
  }
  out << "output g" << c.output() << '\n';
  return out.str();
}


Circuit parse_circuit(std::string_view input) {
  detail::GateNames names;
  std::vector<Gate> gates;
  std::optional<std::size_t> output;
  for (const auto& line : text::content_lines(input)) {
    auto tok = text::split_ws(line.text);
    if (output) text::fail(line.number, "content after output line");
    if (tok.size() == 2 && tok[0] == "output") {
      output = names.ref(tok[1], line.number);
      continue;
    }
    if (tok.size() < 3 || tok[1] != "=") text::fail(line.number, "expected 'g<id> = <op> ...'");
    Gate g;
    if (tok[2] == "input" && tok.size() == 4) {
      g.var = tok[3];
    } else if (tok.size() == 5 && (tok[2] == "add" || tok[2] == "mul" || tok[2] == "div")) {
      g.op = tok[2] == "add" ? Op::Add : (tok[2] == "mul" ? Op::Mul : Op::Div);
      g.lhs = names.ref(tok[3], line.number);
      g.rhs = names.ref(tok[4], line.number);
    } else {
      text::fail(line.number, "unrecognised gate '" + line.text + "'");
    }
    names.define(tok[0], gates.size(), line.number);
    gates.push_back(std::move(g));
  }
  if (!output) throw Error(ErrorKind::Parse, "circuit has no output line");
  return Circuit(std::move(gates), *output);
}

}  // namespace bgpc
