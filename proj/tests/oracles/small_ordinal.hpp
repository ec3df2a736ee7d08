#pragma once

// Ordinals below w^w as coefficient vectors c[k] of w^k, with + and * computed
// straight from the recursive definitions (successor and limit steps), not from
// any normal-form rule. Used to check the library on small instances.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "solenoid/ordinal.hpp"

namespace oracle {

using Coeffs = std::vector<std::uint64_t>;  // little-endian, no trailing zeros

inline Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline bool is_zero(const Coeffs& a) { return a.empty(); }

inline Coeffs successor(Coeffs a) {
  if (a.empty()) a.push_back(0);
  ++a[0];
  return a;
}

// beta = delta + 1 when the constant term is nonzero.
inline bool is_successor(const Coeffs& b) { return !b.empty() && b[0] > 0; }

inline Coeffs predecessor(Coeffs b) {
  --b[0];
  return trim(b);
}

// Fundamental sequence of a limit lambda = delta + w^k (k >= 1): delta + w^(k-1) * n.
inline Coeffs fundamental(const Coeffs& lambda, std::uint64_t n) {
  Coeffs out = lambda;
  std::size_t k = 0;
  while (out[k] == 0) ++k;
  --out[k];
  out[k - 1] += n;
  return trim(out);
}

// Supremum of an increasing sequence read off two of its members: above the
// highest exponent where they differ the terms are fixed, and that exponent's
// coefficient grows without bound, so the sup bumps the next exponent.
inline Coeffs sup_of(const Coeffs& x, const Coeffs& y) {
  if (x == y) return x;
  const std::size_t len = std::max(x.size(), y.size());
  std::size_t j = len;
  for (std::size_t i = len; i-- > 0;) {
    const auto xi = i < x.size() ? x[i] : 0;
    const auto yi = i < y.size() ? y[i] : 0;
    if (xi != yi) {
      j = i;
      break;
    }
  }
  Coeffs out(std::max(len, j + 2), 0);
  for (std::size_t i = j + 1; i < y.size(); ++i) out[i] = y[i];
  ++out[j + 1];
  return trim(out);
}

class Arith {
 public:
  Coeffs add(const Coeffs& a, const Coeffs& b) {
    if (is_zero(b)) return a;
    const auto key = std::make_pair(a, b);
    if (auto it = add_memo_.find(key); it != add_memo_.end()) return it->second;
    Coeffs out;
    if (is_successor(b))
      out = successor(add(a, predecessor(b)));
    else
      out = sup_of(add(a, fundamental(b, 2)), add(a, fundamental(b, 3)));
    add_memo_.emplace(key, out);
    return out;
  }

  Coeffs mul(const Coeffs& a, const Coeffs& b) {
    if (is_zero(b) || is_zero(a)) return {};
    const auto key = std::make_pair(a, b);
    if (auto it = mul_memo_.find(key); it != mul_memo_.end()) return it->second;
    Coeffs out;
    if (is_successor(b))
      out = add(mul(a, predecessor(b)), a);
    else
      out = sup_of(mul(a, fundamental(b, 2)), mul(a, fundamental(b, 3)));
    mul_memo_.emplace(key, out);
    return out;
  }

 private:
  std::map<std::pair<Coeffs, Coeffs>, Coeffs> add_memo_;
  std::map<std::pair<Coeffs, Coeffs>, Coeffs> mul_memo_;
};

// Order by substituting a large natural for w: below w^w, with every
// coefficient under the base, the base-N numerals compare like the ordinals.
inline int compare_by_evaluation(const Coeffs& a, const Coeffs& b, std::uint64_t base = 1000) {
  using boost::multiprecision::cpp_int;
  auto eval = [base](const Coeffs& c) {
    cpp_int v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * base + c[i];
    return v;
  };
  const cpp_int x = eval(a), y = eval(b);
  return x < y ? -1 : (x > y ? 1 : 0);
}

inline solenoid::CnfOrdinal to_cnf(const Coeffs& c) {
  std::vector<solenoid::CnfTerm> terms;
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0) terms.push_back({solenoid::CnfOrdinal::natural(i), c[i]});
  return solenoid::CnfOrdinal::from_terms(std::move(terms));
}

// Every ordinal with at most two terms, exponents <= max_exp, coefficients 1..max_coeff, and 0.
inline std::vector<Coeffs> small_family(std::size_t max_exp, std::uint64_t max_coeff) {
  std::vector<Coeffs> out{{}};
  for (std::size_t e1 = 0; e1 <= max_exp; ++e1)
    for (std::uint64_t c1 = 1; c1 <= max_coeff; ++c1) {
      Coeffs one(e1 + 1, 0);
      one[e1] = c1;
      out.push_back(one);
      for (std::size_t e2 = 0; e2 < e1; ++e2)
        for (std::uint64_t c2 = 1; c2 <= max_coeff; ++c2) {
          Coeffs two = one;
          two[e2] = c2;
          out.push_back(two);
        }
    }
  return out;
}

}  // namespace oracle
