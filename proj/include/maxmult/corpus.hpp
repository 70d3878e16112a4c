/*
   Copyright 2026 The maxmult Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// Named ideals with the invariants they are known to have.

#ifndef MAXMULT_CORPUS_HPP
#define MAXMULT_CORPUS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"
#include "theorems.hpp"

namespace maxmult {

struct Expected {
  std::optional<int> height;
  std::optional<std::int64_t> multiplicity;
  std::optional<int> pd;  // n - depth
  std::optional<int> s;
  std::optional<bool> cohen_macaulay;
  std::optional<bool> maximal;
  std::vector<int> generator_degrees;  // empty = unchecked
};

struct CorpusEntry {
  std::string name;
  Ideal ideal;
  Expected expected;
  std::string provenance;
  bool long_running = false;
  // decomposition data, when the entry comes with one
  std::optional<Ideal> Cprime;
  std::optional<Polynomial> F;
};

namespace detail {

inline Ideal ideal_from_strings(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(parse_polynomial(ring, g));
  return Ideal(ring, std::move(out));
}

inline std::vector<std::string> indexed_names(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace detail

/// Height-3 ideals of four quadrics in k[a,b,c,x,y,z], e = 1..6.
inline CorpusEntry four_quadrics(int i, std::uint32_t p = kDefaultCharacteristic, GBLimits limits = {}) {
  static const std::vector<std::vector<std::string>> gens{
      {"a*x", "b*y", "c*z", "x^2 + y^2 + z^2"},
      {"a*x", "b*y", "x*y + x*z + y*z", "x^2 + y^2 + z^2"},
      {"a*x + b*y + c*z", "x^2", "y^2", "z^2"},
      {"a*x", "x^2", "y^2", "z^2"},
      {"a*x + b*y + c*z", "b*x + c*y + a*z", "c*x + a*y + b*z", "b*x + c*y - b*z - c*z"},
      {"x^2", "y^2", "z^2", "x*y"},
  };
  static const int pd[] = {4, 4, 6, 4, 4, 3};
  if (i < 1 || i > 6) throw PreconditionError("four_quadrics", "index must be in 1..6");
  auto ring = make_ring(p, {"a", "b", "c", "x", "y", "z"}, MonomialOrder::grevlex(), limits);
  CorpusEntry e{"four-quadrics-" + std::to_string(i), detail::ideal_from_strings(ring, gens[static_cast<std::size_t>(i - 1)])};
  e.expected.height = 3;
  e.expected.multiplicity = i;
  e.expected.pd = pd[i - 1];
  e.expected.cohen_macaulay = i == 6;
  e.expected.generator_degrees = {2, 2, 2, 2};
  e.provenance = "four quadrics family, item " + std::to_string(i);
  return e;
}

/// 2-minors of the r x (N - r + 2) catalecticant matrix with entries
/// x_{i+j-1}^d in k[x_1..x_{N+1}].
inline CorpusEntry catalecticant(int d, int r, int N, std::uint32_t p = kDefaultCharacteristic, GBLimits limits = {}) {
  if (d < 1 || r < 2 || N < 3 || r > N) throw PreconditionError("catalecticant", "need d >= 1, 2 <= r <= N, N >= 3");
  if (N + 1 > static_cast<int>(kMaxVariables)) throw PreconditionError("catalecticant", "too many variables");
  auto ring = make_ring(p, detail::indexed_names("x", N + 1), MonomialOrder::grevlex(), limits);
  const int cols = N - r + 2;
  auto entry = [&](int i, int j) {  // 1-based
    return Polynomial::monomial(ring, Monomial::variable(static_cast<std::size_t>(i + j - 2), static_cast<unsigned>(d)));
  };
  std::vector<Polynomial> minors;
  std::set<std::vector<std::pair<std::vector<unsigned>, Coeff>>> seen;
  auto key = [&](const Polynomial& f) {
    std::vector<std::pair<std::vector<unsigned>, Coeff>> k;
    for (const auto& t : f.terms()) {
      std::vector<unsigned> e;
      for (std::size_t v = 0; v < ring->nvars(); ++v) e.push_back(t.mono[v]);
      k.emplace_back(std::move(e), t.coeff);
    }
    return k;
  };
  for (int i1 = 1; i1 <= r; ++i1)
    for (int i2 = i1 + 1; i2 <= r; ++i2)
      for (int j1 = 1; j1 <= cols; ++j1)
        for (int j2 = j1 + 1; j2 <= cols; ++j2) {
          Polynomial m = entry(i1, j1) * entry(i2, j2) - entry(i1, j2) * entry(i2, j1);
          if (m.is_zero()) continue;
          Polynomial canon = m.monic();
          if (seen.insert(key(canon)).second) minors.push_back(m);
        }

  CorpusEntry e{"catalecticant-" + std::to_string(d) + "-" + std::to_string(r) + "-" + std::to_string(N),
                Ideal(ring, minors)};
  e.expected.height = N - 1;
  e.expected.cohen_macaulay = true;
  e.expected.maximal = true;
  if (d == 1 && r == 2) e.expected.multiplicity = N;  // rational normal curve of degree N
  std::vector<Polynomial> cp;
  for (int v = 2; v <= N; ++v) cp.push_back(Polynomial::variable(ring, static_cast<std::size_t>(v - 1)));
  e.Cprime = Ideal(ring, cp);
  e.F = entry(1, 1) * entry(r, cols) - entry(r, 1) * entry(1, cols);
  e.provenance = "catalecticant 2-minors, maximal via C' = (x2..xN)";
  return e;
}

/// The 24-variable almost complete intersection (f1 f2, g1 g2, f1 g1 h1, h1 h2).
inline CorpusEntry aci_family(int t, std::uint32_t p = kDefaultCharacteristic, GBLimits limits = {}) {
  if (t < 1) throw PreconditionError("aci_family", "t must be >= 1");
  std::vector<std::string> names;
  for (const char* stem : {"x", "y", "z"})
    for (auto& n : detail::indexed_names(stem, 8)) names.push_back(n);
  auto ring = make_ring(p, names, MonomialOrder::grevlex(), limits);
  const std::string T = std::to_string(t);
  auto form = [&](const char* v, int base) {
    auto var = [&](int k) { return std::string(v) + std::to_string(base + k); };
    return parse_polynomial(ring, var(1) + "^" + T + "*" + var(2) + " - " + var(3) + "^" + T + "*" + var(4));
  };
  Polynomial f1 = form("x", 0), f2 = form("x", 4);
  Polynomial g1 = form("y", 0), g2 = form("y", 4);
  Polynomial h1 = form("z", 0), h2 = form("z", 4);

  CorpusEntry e{"aci-" + T, Ideal(ring, {f1 * f2, g1 * g2, f1 * g1 * h1, h1 * h2})};
  e.expected.height = 3;
  e.expected.s = 5 * t + 2;
  e.expected.cohen_macaulay = true;
  e.expected.maximal = true;
  e.expected.generator_degrees = {2 * t + 2, 2 * t + 2, 3 * t + 3, 2 * t + 2};
  e.Cprime = Ideal(ring, {Polynomial::variable(ring, 1), Polynomial::variable(ring, 3), g1});
  e.F = h1 * h2;
  e.provenance = "24-variable almost complete intersection, s = 5t + 2";
  e.long_running = true;
  return e;
}

/// Default corpus: the four-quadric list and the catalecticant grid
/// (d, r, N) in {1,2} x {2,3} x {3,4,5} with r <= N - 1, plus aci-1 when
/// long-running entries are requested. Sorted by name.
inline std::vector<std::string> corpus_names(bool include_long_running = false) {
  std::vector<std::string> out;
  for (int i = 1; i <= 6; ++i) out.push_back("four-quadrics-" + std::to_string(i));
  for (int d : {1, 2})
    for (int r : {2, 3})
      for (int N : {3, 4, 5})
        if (r <= N - 1)
          out.push_back("catalecticant-" + std::to_string(d) + "-" + std::to_string(r) + "-" + std::to_string(N));
  if (include_long_running) out.push_back("aci-1");
  std::sort(out.begin(), out.end());
  return out;
}

/// Looks up "four-quadrics-<i>", "catalecticant-<d>-<r>-<N>" or "aci-<t>".
inline CorpusEntry corpus_entry(const std::string& name, std::uint32_t p = kDefaultCharacteristic,
                                GBLimits limits = {}) {
  auto ints_after = [&](const std::string& prefix) {
    std::vector<int> out;
    std::string rest = name.substr(prefix.size());
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, '-')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4)
        throw ParseError("unknown corpus entry '" + name + "'");
      out.push_back(std::stoi(item));
    }
    return out;
  };
  try {
    if (name.rfind("four-quadrics-", 0) == 0) {
      auto v = ints_after("four-quadrics-");
      if (v.size() == 1) return four_quadrics(v[0], p, limits);
    } else if (name.rfind("catalecticant-", 0) == 0) {
      auto v = ints_after("catalecticant-");
      if (v.size() == 3) return catalecticant(v[0], v[1], v[2], p, limits);
    } else if (name.rfind("aci-", 0) == 0) {
      auto v = ints_after("aci-");
      if (v.size() == 1) return aci_family(v[0], p, limits);
    }
  } catch (const PreconditionError& e) {
    throw ParseError("corpus entry '" + name + "': " + e.what());
  }
  throw ParseError("unknown corpus entry '" + name + "'");
}

}  // namespace maxmult

#endif  // MAXMULT_CORPUS_HPP
