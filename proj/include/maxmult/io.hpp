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

// Text formats.
//
// Polynomials:   term (('+'|'-') term)*
//                term = [coeff]['*'] var['^'exp] ('*' var['^'exp])*  |  coeff
// Ideal files:   line 1 "ring <p>; x,y,z", then one generator per nonempty
//                line. '#' starts a comment anywhere on a line.

#ifndef MAXMULT_IO_HPP
#define MAXMULT_IO_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"

namespace maxmult {

namespace detail {

class PolyLexer {
 public:
  PolyLexer(std::string_view text, const PolyRing& ring) : s_(text), ring_(ring) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!at_end()) {
      char op = get();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      skip_ws();
      terms.push_back(parse_term(op == '-'));
      skip_ws();
    }
    return terms;
  }

 private:
  Term parse_term(bool negative) {
    const PrimeField& f = ring_.field();
    Coeff c = 1;
    Monomial m;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = parse_coeff();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (!is_ident_start(peek())) fail("expected variable after '*'");
      }
    }
    bool have_var = false;
    while (is_ident_start(peek())) {
      std::string name = parse_ident();
      auto idx = ring_.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'");
      unsigned e = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        e = parse_exponent();
        skip_ws();
      }
      unsigned total = static_cast<unsigned>(m[*idx]) + e;
      if (total > std::numeric_limits<Exponent>::max()) throw ParseError("malformed exponent: too large");
      m.set(*idx, total);
      have_var = true;
      if (peek() == '*') {
        get();
        skip_ws();
        if (!is_ident_start(peek())) fail("expected variable after '*'");
      } else {
        break;
      }
    }
    if (!have_coeff && !have_var) fail("expected a term");
    if (negative) c = f.neg(c);
    return Term{m, c};
  }

  Coeff parse_coeff() {
    const PrimeField& f = ring_.field();
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<unsigned>(get() - '0')) % f.characteristic();
    }
    return static_cast<Coeff>(v);
  }

  unsigned parse_exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("malformed exponent");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(get() - '0');
      if (v > std::numeric_limits<Exponent>::max()) throw ParseError("malformed exponent: too large");
    }
    return static_cast<unsigned>(v);
  }

  std::string parse_ident() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) out += get();
    return out;
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const PolyRing& ring_;
};

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  detail::PolyLexer lexer(text, *ring);
  return Polynomial(ring, lexer.parse());
}

inline std::string format_monomial(const PolyRing& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// Canonical text form; coefficients printed in the symmetric range.
inline std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PolyRing& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = ring.field().to_signed(t.coeff);
    bool neg = c < 0;
    std::uint64_t mag = static_cast<std::uint64_t>(neg ? -c : c);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += format_monomial(ring, t.mono);
    }
  }
  return out;
}

/// Contents of an ideal file before any ideal-theoretic processing.
struct IdealFile {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// Parses the "ring p; x,y,z" header. A nonzero `characteristic_override`
/// replaces the declared characteristic.
inline RingPtr parse_ring_header(std::string_view line, std::uint32_t characteristic_override = 0,
                                 GBLimits limits = {}) {
  std::string s = detail::trim(line);
  if (s.rfind("ring", 0) != 0) throw ParseError("ring header must start with 'ring'");
  auto semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("ring header is missing ';'");
  std::string pstr = detail::trim(std::string_view(s).substr(4, semi - 4));
  if (pstr.empty() || pstr.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("wrong characteristic literal '" + pstr + "'");
  std::uint64_t p = 0;
  for (char ch : pstr) {
    p = p * 10 + static_cast<unsigned>(ch - '0');
    if (p >= (1ull << 31)) throw ParseError("wrong characteristic literal '" + pstr + "'");
  }
  if (!is_prime(p)) throw ParseError("wrong characteristic literal '" + pstr + "': not prime");
  std::vector<std::string> names;
  std::stringstream vars(s.substr(semi + 1));
  std::string item;
  while (std::getline(vars, item, ',')) {
    std::string name = detail::trim(item);
    if (name.empty()) throw ParseError("empty variable name in ring header");
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
      throw ParseError("bad variable name '" + name + "'");
    for (char ch : name)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw ParseError("bad variable name '" + name + "'");
    names.push_back(name);
  }
  if (names.empty()) throw ParseError("ring declares no variables");
  std::uint32_t chr = characteristic_override ? characteristic_override : static_cast<std::uint32_t>(p);
  return make_ring(chr, std::move(names), MonomialOrder::grevlex(), limits);
}

inline IdealFile parse_ideal_text(std::string_view text, std::uint32_t characteristic_override = 0,
                                  GBLimits limits = {}) {
  IdealFile out;
  std::stringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (!out.ring) {
      out.ring = parse_ring_header(t, characteristic_override, limits);
      continue;
    }
    out.generators.push_back(parse_polynomial(out.ring, t));
  }
  if (!out.ring) throw ParseError("missing ring header");
  return out;
}

inline IdealFile read_ideal_file(const std::string& path, std::uint32_t characteristic_override = 0,
                                 GBLimits limits = {}) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_text(buf.str(), characteristic_override, limits);
}

inline std::string format_ring_header(const PolyRing& ring) {
  std::string out = "ring " + std::to_string(ring.characteristic()) + ";";
  for (std::size_t i = 0; i < ring.nvars(); ++i) out += (i ? "," : " ") + ring.name(i);
  return out;
}

inline std::string format_ideal_text(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::string out = format_ring_header(*ring) + "\n";
  for (const auto& g : gens) out += format_polynomial(g) + "\n";
  return out;
}

}  // namespace maxmult

#endif  // MAXMULT_IO_HPP
