#ifndef MDG_TEXTIO_HPP
#define MDG_TEXTIO_HPP

#include <cctype>
#include <string>
#include <vector>

#include "mdg/mpoly.hpp"
#include "mdg/unipoly.hpp"

namespace mdg {

// Polynomial text grammar shared by the library and the CLI:
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   coeff  := nat ['/' nat]
//   factor := var ['^' nat]
// Canonical output lists terms in descending ambient order and round-trips
// bit-exactly through the parser.

namespace textio_detail {

inline bool negative_string(const std::string& s) { return !s.empty() && s[0] == '-'; }

template <class K>
std::string term_to_string(const K& coeff, const Monomial& m,
                           const std::vector<std::string>& vars) {
  std::string mono;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    unsigned e = m[i];
    if (e == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += vars[i];
    if (e > 1) mono += "^" + std::to_string(e);
  }
  std::string c = coeff.to_string();
  if (mono.empty()) return c;
  if (c == "1") return mono;
  if (c == "-1") return "-" + mono;
  return c + "*" + mono;
}

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  unsigned long read_nat() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected number at position " + std::to_string(i) + " in '" + s + "'");
    unsigned long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<unsigned long>(s[i] - '0');
      if (v > 1000000000UL) throw ParseError("number too large in '" + s + "'");
      ++i;
    }
    return v;
  }
  std::string read_ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (start == i)
      throw ParseError("expected identifier at position " + std::to_string(start) +
                       " in '" + s + "'");
    return s.substr(start, i - start);
  }
};

}  // namespace textio_detail

template <class K>
std::string to_text(const MultiPoly<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, m] : f.terms()) {
    std::string t = textio_detail::term_to_string(c, m, f.ring()->vars);
    if (first) {
      out = t;
      first = false;
    } else if (textio_detail::negative_string(t)) {
      out += "-" + t.substr(1);
    } else {
      out += "+" + t;
    }
  }
  return out;
}

template <class K>
std::string to_text(const UniPoly<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int e = f.degree(); e >= 0; --e) {
    K c = f.coeff(static_cast<std::size_t>(e));
    if (c.is_zero()) continue;
    Monomial m(1);
    m[0] = static_cast<unsigned>(e);
    std::string t = textio_detail::term_to_string(c, m, {f.var()});
    if (out.empty()) {
      out = t;
    } else if (textio_detail::negative_string(t)) {
      out += "-" + t.substr(1);
    } else {
      out += "+" + t;
    }
  }
  return out;
}

template <class K>
MultiPoly<K> parse_poly(const RingPtr<K>& ring, const std::string& text,
                        TermOrder order = TermOrder::grevlex()) {
  textio_detail::Cursor cur{text};
  std::vector<typename MultiPoly<K>::Term> terms;
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.eat('-')) {
      neg = true;
    } else if (cur.eat('+')) {
      if (first) throw ParseError("leading '+' in '" + text + "'");
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(cur.i) +
                       " in '" + text + "'");
    }
    first = false;

    K coeff = ring->dom.one();
    Monomial mono(ring->nvars());
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      cur.skip_ws();
      char c = cur.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        unsigned long num = cur.read_nat();
        K val = ring->dom.from_int(static_cast<long>(num));
        if (cur.eat('/')) {
          unsigned long den = cur.read_nat();
          K d = ring->dom.from_int(static_cast<long>(den));
          if (d.is_zero()) throw ParseError("zero denominator in '" + text + "'");
          val = val * d.inv();
        }
        coeff = coeff * val;
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = cur.read_ident();
        int vi = ring->var_index(name);
        if (vi < 0) throw ParseError("unknown variable '" + name + "' in '" + text + "'");
        unsigned long e = 1;
        if (cur.eat('^')) e = cur.read_nat();
        mono[static_cast<std::size_t>(vi)] += static_cast<unsigned>(e);
        saw_factor = true;
      } else {
        throw ParseError("expected coefficient or variable at position " +
                         std::to_string(cur.i) + " in '" + text + "'");
      }
      expect_factor = cur.eat('*');
    }
    if (!saw_factor) throw ParseError("empty term in '" + text + "'");
    if (neg) coeff = -coeff;
    terms.emplace_back(coeff, mono);
  }
  if (terms.empty()) throw ParseError("empty polynomial text");
  return MultiPoly<K>::from_terms(ring, std::move(terms), std::move(order));
}

/// Special case of the shared grammar with a single variable.
template <class K>
UniPoly<K> parse_unipoly(const typename K::Domain& dom, const std::string& text,
                         const std::string& var = "t") {
  auto ring = make_ring<K>(dom, {var});
  MultiPoly<K> f = parse_poly<K>(ring, text, TermOrder::lex());
  return f.to_unipoly(0);
}

}  // namespace mdg

#endif
