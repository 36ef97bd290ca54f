#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nagata/groebner/groebner.hpp"

namespace nagata {

/// Line-oriented ideal text:
///
///   # comment
///   field GF 32003        (or: field QQ)
///   vars x y z w
///   x^2
///   x*y + z*w
///
/// The field line is optional and defaults to GF 32003.
struct IdealFile {
  FieldSpec field = FieldSpec::prime(kDefaultCharacteristic);
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  std::vector<int> generator_lines;  // 1-based line of each generator
};

/// Header and line structure only; generators are checked by `to_presentation`.
IdealFile parse_ideal_text(std::string_view text);

/// parse_ideal_text plus a full check of every generator over the declared field.
IdealFile parse_ideal_file(const std::string& path);

/// Checks an IdealFile against its own field: every generator parses and is homogeneous.
void validate_ideal_file(const IdealFile& f);

template <class K>
RingPresentation<K> to_presentation(const IdealFile& f, const K& field) {
  PolyRing<K> ring(field, f.vars);
  std::vector<Polynomial<K>> gens;
  for (std::size_t k = 0; k < f.generators.size(); ++k) {
    int line = k < f.generator_lines.size() ? f.generator_lines[k] : static_cast<int>(k) + 1;
    auto p = parse_polynomial(ring, f.generators[k], line);
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw ParseError("generator is not homogeneous", line, 1);
    if (p.degree() < 1) throw ParseError("generator is a nonzero constant", line, 1);
    gens.push_back(std::move(p));
  }
  return RingPresentation<K>(std::move(ring), std::move(gens));
}

/// Monic over GF(p); over QQ a primitive integer polynomial with positive leading coefficient.
inline Polynomial<PrimeField> canonical_form(const PolyRing<PrimeField>& ring, const Polynomial<PrimeField>& p) {
  return p.is_zero() ? p : ring.monic(p);
}

inline Polynomial<RationalField> canonical_form(const PolyRing<RationalField>& ring, const Polynomial<RationalField>& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  mpq_class c(den, num);
  c.canonicalize();
  if (p.lead().coeff < 0) c = -c;
  return ring.scale(p, c);
}

template <class K>
IdealFile to_ideal_file(const RingPresentation<K>& R) {
  IdealFile f;
  f.field = R.ring.field().spec();
  f.vars = R.ring.names();
  for (const auto& g : R.generators) {
    f.generators.push_back(R.ring.to_string(canonical_form(R.ring, g)));
    f.generator_lines.push_back(static_cast<int>(f.generators.size()) + 2);
  }
  return f;
}

std::string format_ideal_file(const IdealFile& f, const std::string& comment = "");

template <class K>
std::string format_ideal_file(const RingPresentation<K>& R, const std::string& comment = "") {
  return format_ideal_file(to_ideal_file(R), comment);
}

}  // namespace nagata
