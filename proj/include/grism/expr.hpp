#pragma once

// Text grammar for elements, orthogonal sets, and classes:
//
//   expr    := term ('.' term)*            products, left associative
//   term    := '0' | element | set | 'ck' set
//   set     := '{' [element (';' element)*] '}'
//   element := path '*' path '^-1'
//   path    := '1_<vertex>' | juxtaposed edge ids
//
// `.` is reserved for the product, so edge ids inside a path are written
// back to back and recovered by segmentation against the graph's declared
// ids; a word whose segmentation is not unique is rejected.  Printing uses
// the same shapes, so print-then-parse is the identity.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grism/ck.hpp"
#include "grism/ortho.hpp"

namespace grism {

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + msg),
        position(pos) {}
  std::size_t position;
};

// The value domain of an expression: a single element or an orthogonal set
// (classes evaluate through their representative sets).
using ExprValue = std::variant<GisElement, OrthoSet>;

namespace detail {

struct Token {
  enum Kind { Word, Star, InvExp, LBrace, RBrace, Semi, Dot, End } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto issep = [](char c) {
    return c == '*' || c == '^' || c == '{' || c == '}' || c == ';' ||
           c == '.' || std::isspace(static_cast<unsigned char>(c));
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '*': out.push_back({Token::Star, "*", i++}); continue;
      case '{': out.push_back({Token::LBrace, "{", i++}); continue;
      case '}': out.push_back({Token::RBrace, "}", i++}); continue;
      case ';': out.push_back({Token::Semi, ";", i++}); continue;
      case '.': out.push_back({Token::Dot, ".", i++}); continue;
      case '^': {
        if (text.substr(i, 3) != "^-1")
          throw ParseError(i, "expected ^-1");
        out.push_back({Token::InvExp, "^-1", i});
        i += 3;
        continue;
      }
      default: break;
    }
    std::size_t start = i;
    while (i < text.size() && !issep(text[i])) ++i;
    out.push_back({Token::Word, std::string(text.substr(start, i - start)),
                   start});
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

// Splits a word into declared edge ids; the segmentation must be unique.
inline std::vector<EdgeId> segment_edge_word(const DirectedGraph& g,
                                             const std::string& word,
                                             std::size_t pos) {
  std::size_t n = word.size();
  std::vector<std::size_t> ways(n + 1, 0);
  std::vector<std::size_t> back(n + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (ways[i] == 0) continue;
    for (const auto& e : g.edges()) {
      const std::string& id = e.id;
      if (word.compare(i, id.size(), id) == 0) {
        std::size_t j = i + id.size();
        if (j <= n) {
          ways[j] = std::min<std::size_t>(ways[j] + ways[i], 2);
          back[j] = i;
        }
      }
    }
  }
  if (ways[n] == 0)
    throw ParseError(pos, "cannot read '" + word + "' as a sequence of edge ids");
  if (ways[n] > 1)
    throw ParseError(pos, "ambiguous edge sequence '" + word + "'");
  std::vector<EdgeId> rev;
  for (std::size_t j = n; j > 0; j = back[j])
    rev.push_back(word.substr(back[j], j - back[j]));
  return {rev.rbegin(), rev.rend()};
}

class Parser {
 public:
  Parser(const DirectedGraph& g, std::string_view text)
      : g_(g), toks_(tokenize(text)) {}

  ExprValue parse_expression() {
    ExprValue v = parse_term();
    while (peek().kind == Token::Dot) {
      next();
      ExprValue w = parse_term();
      v = apply_product(v, w);
    }
    expect(Token::End, "end of input");
    return v;
  }

  GisElement parse_single_element() {
    GisElement s = parse_element_or_zero();
    expect(Token::End, "end of input");
    return s;
  }

  OrthoSet parse_single_set() {
    OrthoSet a = parse_set_like();
    expect(Token::End, "end of input");
    return a;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  const Token& next() { return toks_[idx_++]; }
  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError(peek().pos, "expected " + what);
    next();
  }

  Path parse_path() {
    if (peek().kind != Token::Word)
      throw ParseError(peek().pos, "expected a path");
    Token t = next();
    if (t.text.rfind("1_", 0) == 0) {
      std::string v = t.text.substr(2);
      if (!g_.has_vertex(v))
        throw ParseError(t.pos, "unknown vertex in empty path: " + v);
      return Path::empty_at(v);
    }
    return Path::of_edges(g_, segment_edge_word(g_, t.text, t.pos));
  }

  GisElement parse_element_or_zero() {
    if (peek().kind == Token::Word && peek().text == "0") {
      next();
      return GisElement::zero();
    }
    Token at = peek();
    Path x = parse_path();
    expect(Token::Star, "'*'");
    Path y = parse_path();
    expect(Token::InvExp, "'^-1'");
    try {
      return GisElement::pair(g_, x, y);
    } catch (const std::invalid_argument& e) {
      throw ParseError(at.pos, e.what());
    }
  }

  OrthoSet parse_set_like() {
    Token at = peek();
    expect(Token::LBrace, "'{'");
    std::vector<GisElement> elems;
    if (peek().kind != Token::RBrace) {
      elems.push_back(parse_element_or_zero());
      while (peek().kind == Token::Semi) {
        next();
        elems.push_back(parse_element_or_zero());
      }
    }
    expect(Token::RBrace, "'}'");
    try {
      return OrthoSet::make(g_, std::move(elems));
    } catch (const std::invalid_argument& e) {
      throw ParseError(at.pos, e.what());
    }
  }

  ExprValue parse_term() {
    if (peek().kind == Token::LBrace) return parse_set_like();
    if (peek().kind == Token::Word && peek().text == "ck" &&
        toks_[idx_ + 1].kind == Token::LBrace) {
      next();
      return parse_set_like();
    }
    return parse_element_or_zero();
  }

  ExprValue apply_product(const ExprValue& a, const ExprValue& b) {
    if (std::holds_alternative<GisElement>(a) &&
        std::holds_alternative<GisElement>(b))
      return multiply(g_, std::get<GisElement>(a), std::get<GisElement>(b));
    OrthoSet sa = std::holds_alternative<OrthoSet>(a)
                      ? std::get<OrthoSet>(a)
                      : iota(g_, std::get<GisElement>(a));
    OrthoSet sb = std::holds_alternative<OrthoSet>(b)
                      ? std::get<OrthoSet>(b)
                      : iota(g_, std::get<GisElement>(b));
    return product(g_, sa, sb);
  }

  const DirectedGraph& g_;
  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

}  // namespace detail

inline ExprValue eval_expression(const DirectedGraph& g,
                                 std::string_view text) {
  return detail::Parser(g, text).parse_expression();
}

inline GisElement parse_element(const DirectedGraph& g,
                                std::string_view text) {
  return detail::Parser(g, text).parse_single_element();
}

inline OrthoSet parse_ortho(const DirectedGraph& g, std::string_view text) {
  return detail::Parser(g, text).parse_single_set();
}

inline CkElement parse_ck(const DirectedGraph& g, std::string_view text) {
  std::string s(text);
  auto ltrim = s.find_first_not_of(" \t");
  if (ltrim == std::string::npos || s.compare(ltrim, 2, "ck") != 0)
    throw ParseError(0, "expected ck{...}");
  return CkElement::from(g, parse_ortho(g, s.substr(ltrim + 2)));
}

inline std::string to_string(const ExprValue& v) {
  if (std::holds_alternative<GisElement>(v))
    return to_string(std::get<GisElement>(v));
  return to_string(std::get<OrthoSet>(v));
}

}  // namespace grism
