#include "bgpc/relu.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "bgpc/error.hpp"
#include "bgpc/text.hpp"

namespace bgpc {

ReluNetwork::ReluNetwork(std::vector<std::string> inputs, std::vector<Neuron> neurons, std::vector<Term> readout)
    : inputs_(std::move(inputs)), neurons_(std::move(neurons)), readout_(std::move(readout)) {
  auto check = [&](const std::vector<Term>& terms, std::size_t limit) {
    for (const auto& t : terms) {
      const bool ok = t.ref.neuron ? t.ref.index < limit : t.ref.index < inputs_.size();
      if (!ok) throw Error(ErrorKind::InvalidMatroid, "network term refers to an unavailable node");
    }
  };
  for (std::size_t k = 0; k < neurons_.size(); ++k) check(neurons_[k].terms, k);
  check(readout_, neurons_.size());
}

Rational ReluNetwork::forward(const Assignment& point) const {
  std::vector<Rational> in(inputs_.size());
  for (std::size_t k = 0; k < inputs_.size(); ++k) {
    auto it = point.find(inputs_[k]);
    if (it == point.end()) throw Error(ErrorKind::Parse, "no value for variable '" + inputs_[k] + "'");
    in[k] = it->second;
  }
  std::vector<Rational> out(neurons_.size());
  auto combine = [&](const std::vector<Term>& terms) {
    Rational s = 0;
    for (const auto& t : terms) s += t.weight * (t.ref.neuron ? out[t.ref.index] : in[t.ref.index]);
    return s;
  };
  for (std::size_t k = 0; k < neurons_.size(); ++k) {
    Rational s = combine(neurons_[k].terms);
    out[k] = s > 0 ? s : Rational(0);
  }
  return combine(readout_);
}

bool ReluNetwork::unit_weights() const {
  auto unit = [](const std::vector<Term>& terms) {
    for (const auto& t : terms) {
      if (t.weight != 0 && t.weight != 1 && t.weight != -1) return false;
    }
    return true;
  };
  for (const auto& n : neurons_) {
    if (!unit(n.terms)) return false;
  }
  return unit(readout_);
}

namespace {

using Combo = std::map<NodeRef, int>;

Combo combine(const Combo& a, const Combo& b, int sign) {
  Combo out = a;
  for (const auto& [ref, w] : b) {
    int& slot = out[ref];
    slot += sign * w;
    if (slot == 0) out.erase(ref);
  }
  return out;
}

bool unit(const Combo& c) {
  for (const auto& [ref, w] : c) {
    if (w < -1 || w > 1) return false;
  }
  return true;
}

std::vector<Term> terms_of(const Combo& c) {
  std::vector<Term> t;
  for (const auto& [ref, w] : c) t.push_back({Rational(w), ref});
  return t;
}

class Lowering {
 public:
  explicit Lowering(const TropicalCircuit& t) : t_(t), value_(t.gates().size()), pair_(t.gates().size()) {}

  ReluNetwork run() {
    std::vector<std::string> inputs;
    std::map<std::string, std::size_t> input_index;
    for (std::size_t i = 0; i < t_.gates().size(); ++i) {
      const TropGate& g = t_.gates()[i];
      switch (g.op) {
        case TropOp::Input: {
          auto [it, fresh] = input_index.emplace(g.var, inputs.size());
          if (fresh) inputs.push_back(g.var);
          value_[i] = Combo{{NodeRef{false, it->second}, 1}};
          break;
        }
        case TropOp::Add:
        case TropOp::Sub:
          value_[i] = linear(g.lhs, g.rhs, g.op == TropOp::Add ? 1 : -1);
          break;
        case TropOp::Max:
          value_[i] = max(g.lhs, g.rhs);
          break;
      }
    }
    return ReluNetwork(std::move(inputs), std::move(neurons_), terms_of(value_[t_.output()]));
  }

 private:
  NodeRef emit(const Combo& c) {
    neurons_.push_back({terms_of(c)});
    return NodeRef{true, neurons_.size() - 1};
  }

  // v as (v)+ - (-v)+ over two new units.
  Combo fresh_pair(const Combo& v, std::size_t gate) {
    Combo neg;
    for (const auto& [ref, w] : v) neg[ref] = -w;
    const NodeRef pos_ref = emit(v);
    const NodeRef neg_ref = emit(neg);
    pair_[gate] = {pos_ref, neg_ref};
    return Combo{{pos_ref, 1}, {neg_ref, -1}};
  }

  Combo linear(std::size_t a, std::size_t b, int sign) {
    Combo c = combine(value_[a], value_[b], sign);
    if (unit(c)) return c;
    return combine(value_[a], fresh_pair(value_[b], b), sign);
  }

  Combo max(std::size_t a, std::size_t b) {
    Combo bval;
    if (pair_[b]) {
      bval = Combo{{pair_[b]->first, 1}, {pair_[b]->second, -1}};
    } else {
      bval = fresh_pair(value_[b], b);
    }
    Combo diff = combine(value_[a], bval, -1);
    if (!unit(diff)) {
      bval = fresh_pair(value_[b], b);
      diff = combine(value_[a], bval, -1);
    }
    const NodeRef top = emit(diff);
    return combine(Combo{{top, 1}}, bval, 1);
  }

  const TropicalCircuit& t_;
  std::vector<Combo> value_;
  std::vector<std::optional<std::pair<NodeRef, NodeRef>>> pair_;
  std::vector<Neuron> neurons_;
};

std::string ref_name(const NodeRef& r) { return (r.neuron ? "n" : "i") + std::to_string(r.index); }

void write_terms(std::ostringstream& out, const std::vector<Term>& terms) {
  for (const auto& t : terms) out << ' ' << to_fraction_string(t.weight) << '*' << ref_name(t.ref);
}

std::vector<Term> read_terms(const std::vector<std::string>& tok, std::size_t from, std::size_t line) {
  std::vector<Term> terms;
  for (std::size_t k = from; k < tok.size(); ++k) {
    const auto star = tok[k].find('*');
    if (star == std::string::npos) text::fail(line, "term '" + tok[k] + "' is not <weight>*<ref>");
    Term t;
    try {
      t.weight = parse_rational(tok[k].substr(0, star));
    } catch (const Error&) {
      text::fail(line, "bad weight in '" + tok[k] + "'");
    }
    const std::string ref = tok[k].substr(star + 1);
    if (ref.size() < 2 || (ref[0] != 'i' && ref[0] != 'n')) text::fail(line, "bad reference '" + ref + "'");
    t.ref.neuron = ref[0] == 'n';
    t.ref.index = static_cast<std::size_t>(text::parse_int(ref.substr(1), line));
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

ReluNetwork lower_to_relu(const TropicalCircuit& t) { return Lowering(t).run(); }

std::string format_relu(const ReluNetwork& net) {
  std::ostringstream out;
  out << "inputs";
  for (const auto& v : net.inputs()) out << ' ' << v;
  out << '\n';
  for (std::size_t k = 0; k < net.neurons().size(); ++k) {
    out << 'n' << k << " = relu";
    write_terms(out, net.neurons()[k].terms);
    out << '\n';
  }
  out << "readout";
  write_terms(out, net.readout());
  out << '\n';
  return out.str();
}

ReluNetwork parse_relu(std::string_view input) {
  std::vector<std::string> inputs;
  std::vector<Neuron> neurons;
  std::optional<std::vector<Term>> readout;
  bool have_inputs = false;
  for (const auto& line : text::content_lines(input)) {
    auto tok = text::split_ws(line.text);
    if (readout) text::fail(line.number, "content after readout line");
    if (tok[0] == "inputs") {
      if (have_inputs) text::fail(line.number, "duplicate inputs line");
      have_inputs = true;
      inputs.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "readout") {
      readout = read_terms(tok, 1, line.number);
    } else if (tok.size() >= 3 && tok[1] == "=" && tok[2] == "relu") {
      if (tok[0] != "n" + std::to_string(neurons.size())) text::fail(line.number, "neurons must be numbered consecutively");
      neurons.push_back({read_terms(tok, 3, line.number)});
    } else {
      text::fail(line.number, "unrecognised line '" + line.text + "'");
    }
  }
  if (!have_inputs) throw Error(ErrorKind::Parse, "network has no inputs line");
  if (!readout) throw Error(ErrorKind::Parse, "network has no readout line");
  return ReluNetwork(std::move(inputs), std::move(neurons), std::move(*readout));
}

}  // namespace bgpc
