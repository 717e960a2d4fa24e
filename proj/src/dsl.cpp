#include "hkit/dsl.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace hkit {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("[](){},;=+-*^/").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ParsedInput parse() {
    ParsedInput in;
    parse_ring(in);
    const Token& kw = peek();
    if (kw.kind != Tok::Ident) fail(kw, "expected 'ideal', 'complex' or 'module'");
    if (kw.text == "ideal") {
      next();
      parse_ideal(in);
    } else if (kw.text == "complex") {
      next();
      parse_complex(in);
    } else if (kw.text == "module") {
      next();
      parse_module(in);
    } else {
      fail(kw, "expected 'ideal', 'complex' or 'module', found '" + kw.text + "'");
    }
    if (peek().kind != Tok::End) fail(peek(), "unexpected input after the declaration");
    return in;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool accept(const char* s) {
    if (is_sym(s)) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect_sym(const char* s) {
    if (!is_sym(s)) fail(peek(), std::string("expected '") + s + "'" + found());
    return next();
  }
  const Token& expect_kind(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what + found());
    return next();
  }
  std::string found() const {
    if (peek().kind == Tok::End) return ", found end of input";
    return ", found '" + peek().text + "'";
  }
  long to_long(const Token& t) {
    try {
      std::size_t used = 0;
      long v = std::stol(t.text, &used);
      if (used != t.text.size()) throw std::out_of_range("");
      return v;
    } catch (const std::exception&) {
      fail(t, "integer out of range");
    }
  }

  void parse_ring(ParsedInput& in) {
    const Token& kw = expect_kind(Tok::Ident, "'ring'");
    if (kw.text != "ring") fail(kw, "expected 'ring', found '" + kw.text + "'");
    const Token& f = expect_kind(Tok::Ident, "a field (QQ or GF(p))");
    Field field = Field::rationals();
    if (f.text == "GF") {
      expect_sym("(");
      const Token& p = expect_kind(Tok::Int, "a prime");
      long v = to_long(p);
      if (v < 2 || v > 2147483647 || !is_prime(static_cast<std::uint64_t>(v)))
        fail(p, "modulus " + p.text + " is not prime");
      field = Field::prime(static_cast<std::uint32_t>(v));
      expect_sym(")");
    } else if (f.text != "QQ") {
      fail(f, "unknown field '" + f.text + "'");
    }
    expect_sym("[");
    std::vector<std::string> names;
    std::set<std::string> seen;
    do {
      const Token& v = expect_kind(Tok::Ident, "a variable name");
      if (!seen.insert(v.text).second) fail(v, "duplicate variable '" + v.text + "'");
      names.push_back(v.text);
    } while (accept(","));
    const Token& close = expect_sym("]");
    if (names.size() > kMaxVariables) fail(close, "too many variables");
    MonomialOrder order = MonomialOrder::DegRevLex;
    if (peek().kind == Tok::Ident) {
      const Token& o = next();
      if (o.text == "lex") {
        order = MonomialOrder::Lex;
      } else if (o.text != "degrevlex") {
        fail(o, "unknown monomial order '" + o.text + "'");
      }
    }
    expect_sym(";");
    in.ring = make_ring(field, names, order);
    for (std::size_t k = 0; k < names.size(); ++k) var_index_[names[k]] = k;
  }

  std::string parse_name_eq(ParsedInput& in) {
    const Token& n = expect_kind(Tok::Ident, "a name");
    expect_sym("=");
    in.name = n.text;
    return n.text;
  }

  Scalar parse_number(const Field& field) {
    const Token& a = next();
    mpz_class num(a.text);
    if (is_sym("/") && toks_[pos_ + 1].kind == Tok::Int) {
      next();
      const Token& b = next();
      mpz_class den(b.text);
      if (den == 0) fail(b, "zero denominator");
      try {
        return field.from_rational(mpq_class(num, den));
      } catch (const std::exception& e) {
        fail(b, e.what());
      }
    }
    return field.from_rational(mpq_class(num));
  }

  Polynomial parse_atom(const Ring& ring) {
    const Token& t = peek();
    if (t.kind == Tok::Int) return Polynomial(ring, {{Monomial(ring->nvars()), parse_number(ring->field)}});
    if (t.kind == Tok::Ident) {
      next();
      auto it = var_index_.find(t.text);
      if (it == var_index_.end()) fail(t, "unknown variable '" + t.text + "'");
      return Polynomial::variable(ring, it->second);
    }
    if (accept("(")) {
      Polynomial p = parse_poly(ring);
      expect_sym(")");
      return p;
    }
    fail(t, "expected a number, variable or '('" + found());
  }

  Polynomial parse_factor(const Ring& ring) {
    Polynomial base = parse_atom(ring);
    if (accept("^")) {
      const Token& e = expect_kind(Tok::Int, "an exponent");
      long v = to_long(e);
      if (v > 1000) fail(e, "exponent too large");
      base = base.pow(static_cast<unsigned>(v));
    }
    return base;
  }

  Polynomial parse_term(const Ring& ring) {
    Polynomial p = parse_factor(ring);
    while (accept("*")) p = p * parse_factor(ring);
    return p;
  }

  Polynomial parse_poly(const Ring& ring) {
    bool negate = false;
    if (accept("-")) {
      negate = true;
    } else {
      accept("+");
    }
    Polynomial p = parse_term(ring);
    if (negate) p = -p;
    for (;;) {
      if (accept("+")) {
        p = p + parse_term(ring);
      } else if (accept("-")) {
        p = p - parse_term(ring);
      } else {
        return p;
      }
    }
  }

  void parse_ideal(ParsedInput& in) {
    in.kind = InputKind::Ideal;
    parse_name_eq(in);
    std::vector<Polynomial> gens;
    if (!is_sym(";")) {
      do {
        const Token& start = peek();
        Polynomial g = parse_poly(in.ring);
        if (!g.is_homogeneous()) fail(start, "generator is not homogeneous: " + g.to_string());
        gens.push_back(std::move(g));
      } while (accept(","));
    }
    expect_sym(";");
    in.ideal.emplace(in.ring, std::move(gens));
  }

  void parse_complex(ParsedInput& in) {
    in.kind = InputKind::Complex;
    parse_name_eq(in);
    const int v = static_cast<int>(in.ring->nvars());
    std::vector<std::vector<int>> facets;
    const Token& start = peek();
    do {
      expect_sym("{");
      std::vector<int> f;
      while (peek().kind == Tok::Int) {
        const Token& t = next();
        long k = to_long(t);
        if (k < 1 || k > v) fail(t, "vertex " + t.text + " outside 1.." + std::to_string(v));
        f.push_back(static_cast<int>(k));
      }
      expect_sym("}");
      facets.push_back(std::move(f));
    } while (accept(","));
    expect_sym(";");
    try {
      in.complex.emplace(v, std::move(facets));
    } catch (const std::invalid_argument& e) {
      fail(start, e.what());
    }
  }

  void parse_module(ParsedInput& in) {
    in.kind = InputKind::Module;
    parse_name_eq(in);
    const Token& kw = expect_kind(Tok::Ident, "'free'");
    if (kw.text != "free") fail(kw, "expected 'free', found '" + kw.text + "'");
    expect_sym("(");
    std::vector<int> twists;
    if (!is_sym(")")) {
      do {
        bool neg = accept("-");
        const Token& t = expect_kind(Tok::Int, "a twist");
        long v = to_long(t);
        twists.push_back(static_cast<int>(neg ? -v : v));
      } while (accept(","));
    }
    expect_sym(")");
    FreeModule f{in.ring, twists};
    std::vector<ModuleElement> rels;
    if (accept("/")) {
      do {
        const Token& start = expect_sym("[");
        std::vector<Polynomial> entries;
        do {
          entries.push_back(parse_poly(in.ring));
        } while (accept(","));
        expect_sym("]");
        if (entries.size() != f.rank())
          fail(start, "relation has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(f.rank()));
        ModuleElement e = f.from_polys(entries);
        if (!f.is_homogeneous(e)) fail(start, "relation is not homogeneous for the given twists");
        rels.push_back(std::move(e));
      } while (accept(","));
    }
    expect_sym(";");
    in.module = GradedModulePresentation{f, std::move(rels), in.name};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> var_index_;
};

}  // namespace

GradedModulePresentation ParsedInput::presentation() const {
  switch (kind) {
    case InputKind::Ideal:
      return GradedModulePresentation::quotient_ring(*ideal, "S/" + name);
    case InputKind::Complex:
      return GradedModulePresentation::quotient_ring(stanley_reisner_ideal(*complex, ring), "k[" + name + "]");
    case InputKind::Module:
      return *module;
  }
  return *module;
}

std::optional<IdealData> ParsedInput::defining_ideal() const {
  if (kind == InputKind::Ideal) return ideal;
  if (kind == InputKind::Complex) return stanley_reisner_ideal(*complex, ring);
  return std::nullopt;
}

ParsedInput parse_input(std::string_view text) { return Parser(text).parse(); }

std::string print_input(const ParsedInput& in) {
  std::ostringstream os;
  os << "ring " << in.ring->field.name() << '[';
  for (std::size_t k = 0; k < in.ring->var_names.size(); ++k) os << (k ? "," : "") << in.ring->var_names[k];
  os << ']';
  if (in.ring->order == MonomialOrder::Lex) os << " lex";
  os << ";\n";
  switch (in.kind) {
    case InputKind::Ideal: {
      os << "ideal " << in.name << " =";
      const auto& g = in.ideal->generators();
      for (std::size_t k = 0; k < g.size(); ++k) os << (k ? ", " : " ") << g[k].to_string();
      os << ";\n";
      break;
    }
    case InputKind::Complex: {
      os << "complex " << in.name << " =";
      auto facets = in.complex->facets();
      for (std::size_t k = 0; k < facets.size(); ++k) {
        os << (k ? ", {" : " {");
        for (std::size_t j = 0; j < facets[k].size(); ++j) os << (j ? " " : "") << facets[k][j];
        os << '}';
      }
      os << ";\n";
      break;
    }
    case InputKind::Module: {
      const auto& m = *in.module;
      os << "module " << in.name << " = free(";
      for (std::size_t k = 0; k < m.ambient.twists.size(); ++k) os << (k ? ", " : "") << m.ambient.twists[k];
      os << ')';
      for (std::size_t r = 0; r < m.relations.size(); ++r) {
        os << (r ? ",\n  [" : " /\n  [");
        for (std::size_t c = 0; c < m.ambient.rank(); ++c)
          os << (c ? ", " : "") << m.ambient.component(m.relations[r], c).to_string();
        os << ']';
      }
      os << ";\n";
      break;
    }
  }
  return os.str();
}

bool same_input(const ParsedInput& a, const ParsedInput& b) {
  if (!same_ring(*a.ring, *b.ring) || a.kind != b.kind || a.name != b.name) return false;
  switch (a.kind) {
    case InputKind::Ideal:
      return a.ideal->generators() == b.ideal->generators();
    case InputKind::Complex:
      return a.complex->vertices() == b.complex->vertices() && a.complex->facets() == b.complex->facets();
    case InputKind::Module:
      return a.module->ambient.twists == b.module->ambient.twists && a.module->relations == b.module->relations;
  }
  return false;
}

}  // namespace hkit
