#include "bgpc/tropical.hpp"

#include <optional>
#include <sstream>

#include "bgpc/error.hpp"
#include "bgpc/text.hpp"
#include "gate_names.hpp"

namespace bgpc {

TropicalCircuit::TropicalCircuit(std::vector<TropGate> gates, std::size_t output)
    : gates_(std::move(gates)), output_(output) {
  if (output_ >= gates_.size()) throw Error(ErrorKind::InvalidMatroid, "circuit output out of range");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const TropGate& g = gates_[i];
    if (g.op == TropOp::Input) continue;
    if (g.lhs >= i || g.rhs >= i) throw Error(ErrorKind::InvalidMatroid, "gate " + std::to_string(i) + " references a later gate");
    ++size_;
  }
}

std::vector<std::string> TropicalCircuit::variables() const {
  std::vector<std::string> out;
  for (const auto& g : gates_) {
    if (g.op == TropOp::Input) out.push_back(g.var);
  }
  return out;
}

TropicalCircuit tropicalize(const Circuit& c) {
  std::vector<TropGate> gates;
  gates.reserve(c.gates().size());
  for (const auto& g : c.gates()) {
    TropOp op = TropOp::Input;
    switch (g.op) {
      case Op::Input:
        op = TropOp::Input;
        break;
      case Op::Add:
        op = TropOp::Max;
        break;
      case Op::Mul:
        op = TropOp::Add;
        break;
      case Op::Div:
        op = TropOp::Sub;
        break;
    }
    gates.push_back({op, g.lhs, g.rhs, g.var});
  }
  return TropicalCircuit(std::move(gates), c.output());
}

Rational eval_tropical(const TropicalCircuit& t, const Assignment& point) {
  std::vector<Rational> v(t.gates().size());
  for (std::size_t i = 0; i < t.gates().size(); ++i) {
    const TropGate& g = t.gates()[i];
    switch (g.op) {
      case TropOp::Input: {
        auto it = point.find(g.var);
        if (it == point.end()) throw Error(ErrorKind::Parse, "no value for variable '" + g.var + "'");
        v[i] = it->second;
        break;
      }
      case TropOp::Max:
        v[i] = v[g.lhs] < v[g.rhs] ? v[g.rhs] : v[g.lhs];
        break;
      case TropOp::Add:
        v[i] = v[g.lhs] + v[g.rhs];
        break;
      case TropOp::Sub:
        v[i] = v[g.lhs] - v[g.rhs];
        break;
    }
  }
  return v[t.output()];
}

std::string format_tropical(const TropicalCircuit& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.gates().size(); ++i) {
    const TropGate& g = t.gates()[i];
    out << 'g' << i << " = ";
    switch (g.op) {
      case TropOp::Input:
        out << "input " << g.var;
        break;
      case TropOp::Max:
        out << "max g" << g.lhs << " g" << g.rhs;
        break;
      case TropOp::Add:
        out << "add g" << g.lhs << " g" << g.rhs;
        break;
      case TropOp::Sub:
        out << "sub g" << g.lhs << " g" << g.rhs;
        break;
    }
    out << '\n';
  }
  out << "output g" << t.output() << '\n';
  return out.str();
}

TropicalCircuit parse_tropical(std::string_view input) {
  detail::GateNames names;
  std::vector<TropGate> gates;
  std::optional<std::size_t> output;
  for (const auto& line : text::content_lines(input)) {
    auto tok = text::split_ws(line.text);
    if (output) text::fail(line.number, "content after output line");
    if (tok.size() == 2 && tok[0] == "output") {
      output = names.ref(tok[1], line.number);
      continue;
    }
    if (tok.size() < 3 || tok[1] != "=") text::fail(line.number, "expected 'g<id> = <op> ...'");
    TropGate g;
    if (tok[2] == "input" && tok.size() == 4) {
      g.var = tok[3];
    } else if (tok.size() == 5 && (tok[2] == "max" || tok[2] == "add" || tok[2] == "sub")) {
      g.op = tok[2] == "max" ? TropOp::Max : (tok[2] == "add" ? TropOp::Add : TropOp::Sub);
      g.lhs = names.ref(tok[3], line.number);
      g.rhs = names.ref(tok[4], line.number);
    } else {
      text::fail(line.number, "unrecognised tropical gate '" + line.text + "'");
    }
    names.define(tok[0], gates.size(), line.number);
    gates.push_back(std::move(g));
  }
  if (!output) throw Error(ErrorKind::Parse, "circuit has no output line");
  return TropicalCircuit(std::move(gates), *output);
}

}  // namespace bgpc
