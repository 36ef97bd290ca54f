#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nagata/core/field.hpp"
#include "nagata/core/monomial.hpp"

namespace nagata {

template <class K>
struct Term {
  Monomial mono;
  typename K::Element coeff;
};

/// Terms sorted by descending degrevlex, no zero coefficients.
template <class K>
class Polynomial {
 public:
  using Element = typename K::Element;

  Polynomial() = default;
  explicit Polynomial(std::vector<Term<K>> terms) : terms_(std::move(terms)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::vector<Term<K>>& terms() { return terms_; }

  const Term<K>& lead() const {
    if (terms_.empty()) throw std::logic_error("lead term of zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().mono; }
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  /// Homogeneous component of degree d.
  Polynomial component(int d) const {
    Polynomial r;
    for (const auto& t : terms_)
      if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
  }

  bool operator==(const Polynomial& b) const {
    if (terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == b.terms_[i].mono) || !(terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
  }

 private:
  std::vector<Term<K>> terms_;
};

/// Polynomial ring k[x_1..x_n] with named variables.
template <class K>
class PolyRing {
 public:
  using Element = typename K::Element;
  using Poly = Polynomial<K>;

  PolyRing(K field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {
    if (names_.size() > static_cast<std::size_t>(kMaxVars))
      throw std::invalid_argument("at most 32 variables are supported");
  }

  const K& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  Poly zero() const { return Poly(); }
  Poly constant(const Element& c) const {
    if (field_.is_zero(c)) return Poly();
    return Poly({{Monomial(nvars()), c}});
  }
  Poly one() const { return constant(field_.one()); }
  Poly var(int i) const { return Poly({{Monomial::variable(nvars(), i), field_.one()}}); }
  Poly term(const Monomial& m, const Element& c) const {
    check(m);
    if (field_.is_zero(c)) return Poly();
    return Poly({{m, c}});
  }

  /// Sorts and merges arbitrary terms.
  Poly from_terms(std::vector<Term<K>> ts) const {
    for (const auto& t : ts) check(t.mono);
    std::sort(ts.begin(), ts.end(), [](const Term<K>& a, const Term<K>& b) { return b.mono < a.mono; });
    std::vector<Term<K>> out;
    for (auto& t : ts) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
        if (field_.is_zero(out.back().coeff)) out.pop_back();
      } else if (!field_.is_zero(t.coeff)) {
        out.push_back(std::move(t));
      }
    }
    return Poly(std::move(out));
  }

  Poly add(const Poly& a, const Poly& b) const { return combine(a, b, false); }
  Poly sub(const Poly& a, const Poly& b) const { return combine(a, b, true); }
  Poly neg(const Poly& a) const { return scale(a, field_.neg(field_.one())); }

  Poly scale(const Poly& a, const Element& c) const {
    if (field_.is_zero(c)) return Poly();
    std::vector<Term<K>> ts;
    ts.reserve(a.size());
    for (const auto& t : a.terms()) ts.push_back({t.mono, field_.mul(t.coeff, c)});
    return Poly(std::move(ts));
  }

  Poly mul_term(const Poly& a, const Monomial& m, const Element& c) const {
    check(m);
    if (field_.is_zero(c)) return Poly();
    std::vector<Term<K>> ts;
    ts.reserve(a.size());
    for (const auto& t : a.terms()) ts.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return Poly(std::move(ts));
  }

  Poly mul(const Poly& a, const Poly& b) const {
    std::vector<Term<K>> ts;
    ts.reserve(a.size() * b.size());
    for (const auto& s : a.terms())
      for (const auto& t : b.terms()) ts.push_back({s.mono * t.mono, field_.mul(s.coeff, t.coeff)});
    return from_terms(std::move(ts));
  }

  Poly pow(const Poly& a, int e) const {
    Poly r = one();
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  Poly monic(const Poly& a) const {
    if (a.is_zero()) return a;
    return scale(a, field_.inv(a.lead().coeff));
  }

  /// Replaces variable i by `value`.
  Poly substitute(const Poly& a, int i, const Poly& value) const {
    Poly result;
    for (const auto& t : a.terms()) {
      Monomial rest = t.mono;
      int e = rest[i];
      rest.set(i, 0);
      Poly piece = mul_term(pow(value, e), rest, t.coeff);
      result = add(result, piece);
    }
    return result;
  }

  /// Same polynomial in a ring whose first nvars() variables agree with this one.
  template <class Other>
  Poly embed(const Polynomial<K>& a, const Other& target) const {
    std::vector<Term<K>> ts;
    for (const auto& t : a.terms()) ts.push_back({t.mono.extend(target.nvars()), t.coeff});
    return Poly(std::move(ts));
  }

  std::string to_string(const Poly& a) const {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : a.terms()) {
      std::string c = field_.to_string(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c = c.substr(1);
      if (first)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      first = false;
      if (t.mono.is_one()) {
        s += c;
      } else {
        if (c != "1") s += c + "*";
        s += t.mono.to_string(names_);
      }
    }
    return s;
  }

  void check(const Monomial& m) const {
    if (m.nvars() != nvars()) throw std::invalid_argument("ring mismatch: monomial has wrong variable count");
  }
  void check(const Poly& p) const {
    for (const auto& t : p.terms()) check(t.mono);
  }

 private:
  Poly combine(const Poly& a, const Poly& b, bool subtract) const {
    check(a);
    check(b);
    std::vector<Term<K>> out;
    out.reserve(a.size() + b.size());
    auto i = a.terms().begin(), ie = a.terms().end();
    auto j = b.terms().begin(), je = b.terms().end();
    while (i != ie || j != je) {
      int c = (i == ie) ? -1 : (j == je) ? 1 : i->mono.cmp(j->mono);
      if (c > 0) {
        out.push_back(*i++);
      } else if (c < 0) {
        out.push_back({j->mono, subtract ? field_.neg(j->coeff) : j->coeff});
        ++j;
      } else {
        auto s = subtract ? field_.sub(i->coeff, j->coeff) : field_.add(i->coeff, j->coeff);
        if (!field_.is_zero(s)) out.push_back({i->mono, s});
        ++i;
        ++j;
      }
    }
    return Poly(std::move(out));
  }

  K field_;
  std::vector<std::string> names_;
};

}  // namespace nagata
