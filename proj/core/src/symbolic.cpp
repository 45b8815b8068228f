#include "bgpc/symbolic.hpp"

#include <algorithm>
#include <numeric>

#include "bgpc/error.hpp"

namespace bgpc {

namespace {

SparsePolynomial add(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out = a;
  for (const auto& [m, c] : b.terms) out.terms[m] += c;
  return out;
}

SparsePolynomial mul(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      Monomial m(ma.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      out.terms[m] += ca * cb;
    }
  }
  if (out.degree() > kSymbolicMaxDegree) throw Error(ErrorKind::TooLarge, "expansion exceeds degree guard");
  return out;
}

}  // namespace

unsigned SparsePolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms) d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
  return d;
}

Rational SparsePolynomial::eval(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms) {
    Rational term = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (unsigned e = 0; e < m[k]; ++e) term *= point[k];
    }
    sum += term;
  }
  return sum;
}

Rational SparsePolynomial::tropical(const std::vector<Rational>& w) const {
  if (terms.empty()) throw Error(ErrorKind::ZeroOutput, "tropical value of the zero polynomial");
  bool first = true;
  Rational best;
  for (const auto& [m, c] : terms) {
    Rational s = 0;
    for (std::size_t k = 0; k < m.size(); ++k) s += m[k] * w[k];
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

std::vector<Rational> Expansion::point(const Assignment& a) const {
  std::vector<Rational> p;
  for (const auto& v : variables) {
    auto it = a.find(v);
    if (it == a.end()) throw Error(ErrorKind::Parse, "no value for variable '" + v + "'");
    p.push_back(it->second);
  }
  return p;
}

Expansion expand_symbolic(const Circuit& c) {
  if (c.size() > kSymbolicMaxSize) throw Error(ErrorKind::TooLarge, "circuit too large to expand");
  Expansion e;
  std::map<std::string, std::size_t> index;
  for (const auto& v : c.variables()) {
    if (index.emplace(v, e.variables.size()).second) e.variables.push_back(v);
  }
  const std::size_t nv = e.variables.size();
  const SparsePolynomial one{{{Monomial(nv, 0), Integer(1)}}};
  std::vector<SparsePolynomial> num(c.gates().size()), den(c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    switch (g.op) {
      case Op::Input: {
        Monomial m(nv, 0);
        m[index.at(g.var)] = 1;
        num[i].terms[m] = 1;
        den[i] = one;
        break;
      }
      case Op::Add:
        num[i] = add(mul(num[g.lhs], den[g.rhs]), mul(num[g.rhs], den[g.lhs]));
        den[i] = mul(den[g.lhs], den[g.rhs]);
        break;
      case Op::Mul:
        num[i] = mul(num[g.lhs], num[g.rhs]);
        den[i] = mul(den[g.lhs], den[g.rhs]);
        break;
      case Op::Div:
        num[i] = mul(num[g.lhs], den[g.rhs]);
        den[i] = mul(den[g.lhs], num[g.rhs]);
        break;
    }
  }
  e.numerator = num[c.output()];
  e.denominator = den[c.output()];
  return e;
}

}  // namespace bgpc
