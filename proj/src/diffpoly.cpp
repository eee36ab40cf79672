#include "spf/diffpoly.hpp"

#include <algorithm>

namespace spf {

namespace {

DiffPoly::Monomial trimmed(DiffPoly::Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

DiffPoly::Monomial multiply(const DiffPoly::Monomial& a, const DiffPoly::Monomial& b) {
  DiffPoly::Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

DiffPoly::DiffPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

DiffPoly DiffPoly::var(Potential w, int order) {
  Monomial m(static_cast<std::size_t>(2 * order + static_cast<int>(w)) + 1, 0);
  m.back() = 1;
  DiffPoly p;
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

int DiffPoly::max_order() const {
  int top = -1;
  for (const auto& [m, c] : terms_) top = std::max(top, static_cast<int>(m.size()) - 1);
  return top < 0 ? -1 : top / 2;
}

void DiffPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(trimmed(m), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(multiply(ma, mb), ca * cb);
  return r;
}

DiffPoly operator*(const Rat& c, const DiffPoly& a) {
  if (c.is_zero()) return {};
  DiffPoly r = a;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

DiffPoly derive(const DiffPoly& p) {
  DiffPoly r;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      DiffPoly::Monomial n = m;
      n.resize(std::max(n.size(), v + 3), 0);
      n[v] -= 1;
      n[v + 2] += 1;
      r.add_term(n, c * m[v]);
    }
  }
  return r;
}

DiffPoly derive(const DiffPoly& p, int k) {
  DiffPoly r = p;
  for (int i = 0; i < k; ++i) r = derive(r);
  return r;
}

DiffPoly integrate(const DiffPoly& p) {
  DiffPoly rest = p, result;
  while (!rest.is_zero()) {
    std::size_t top = 0;
    for (const auto& [m, c] : rest.terms()) top = std::max(top, m.size());
    if (top == 0) throw LogarithmicPart("constant term is not a total derivative");
    const std::size_t v = top - 1;
    if (v < 2) throw LogarithmicPart("underived potential in the highest position: " + to_string(rest));
    const std::size_t u = v - 2;

    // rest = a * q_v + (terms free of q_v); the antiderivative G has dG/du = a.
    DiffPoly g;
    for (const auto& [m, c] : rest.terms()) {
      if (m.size() != top) continue;
      if (m[v] != 1) throw LogarithmicPart("nonlinear in the highest derivative: " + to_string(rest));
      DiffPoly::Monomial n(m.begin(), m.end() - 1);
      n = trimmed(std::move(n));
      if (n.size() > u + 1) throw LogarithmicPart("not a total derivative: " + to_string(rest));
      n.resize(u + 1, 0);
      n[u] += 1;
      g.add_term(n, c / Rat(n[u]));
    }
    result += g;
    rest -= derive(g);
  }
  return result;
}

PotentialJets::PotentialJets(RationalFunction q0, RationalFunction q1)
    : q0_{std::move(q0)}, q1_{std::move(q1)} {}

const RationalFunction& PotentialJets::get(Potential w, int order) {
  auto& jet = w == Potential::Q0 ? q0_ : q1_;
  while (static_cast<int>(jet.size()) <= order) jet.push_back(derive(jet.back()));
  return jet[static_cast<std::size_t>(order)];
}

RationalFunction evaluate(const DiffPoly& p, PotentialJets& jets) {
  RationalFunction acc;
  for (const auto& [m, c] : p.terms()) {
    RationalFunction term(c);
    for (std::size_t v = 0; v < m.size() && !term.is_zero(); ++v) {
      if (m[v] == 0) continue;
      const auto w = static_cast<Potential>(v % 2);
      term *= pow(jets.get(w, static_cast<int>(v / 2)), m[v]);
    }
    acc += term;
  }
  return acc;
}

std::string to_string(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (v % 2 == 0 ? "q0" : "q1");
      const std::size_t order = v / 2;
      if (order > 0) mono += "^(" + std::to_string(order) + ")";
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

}  // namespace spf
