#include "bigindec/workspace.hpp"

#include <cctype>
#include <sstream>

namespace bigindec {

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

[[noreturn]] void error_at(const Token& t, const std::string& msg) {
  std::string near = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  fail(ErrorKind::Input,
       "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg + " near " + near);
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::Sym, "", line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (std::string_view("{}();,+-*^").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
      advance(1);
    } else {
      t.text = std::string(1, c);
      error_at(t, "unexpected character");
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Value of an expression: scalar polynomial, or a vector sum_k p_k e_k.
struct Value {
  bool is_vector = false;
  std::map<std::uint32_t, Polynomial> comps;  // scalar stored at key 0 when !is_vector
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool is_word(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }

  void expect_sym(const char* s) {
    if (!is_sym(s)) error_at(peek(), std::string("expected '") + s + "'");
    take();
  }
  void expect_word(const char* s) {
    if (!is_word(s)) error_at(peek(), std::string("expected '") + s + "'");
    take();
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) error_at(peek(), "expected a name");
    return take().text;
  }
  long integer(bool allow_sign) {
    bool neg = false;
    if (allow_sign && is_sym("-")) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::Int) error_at(peek(), "expected an integer");
    const Token& t = take();
    if (t.text.size() > 12) error_at(t, "integer too large");
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  // Expression over a ring; `vectors` enables generator symbols eK.
  // Returns the value and the top-level summands with their start tokens.
  struct Summand {
    Token start;
    Value value;
  };

  std::vector<Summand> summands(const GradedRing& ring, bool vectors, std::size_t ngens) {
    std::vector<Summand> out;
    bool neg = false;
    if (is_sym("-")) {
      take();
      neg = true;
    } else if (is_sym("+")) {
      take();
    }
    for (;;) {
      Token start = peek();
      Value v = term(ring, vectors, ngens);
      if (neg) v = negate(v, ring);
      out.push_back({start, std::move(v)});
      if (is_sym("+")) {
        take();
        neg = false;
      } else if (is_sym("-")) {
        take();
        neg = true;
      } else {
        break;
      }
    }
    return out;
  }

  Value expression(const GradedRing& ring, bool vectors, std::size_t ngens) {
    Value acc;
    bool first = true;
    for (auto& s : summands(ring, vectors, ngens)) {
      if (first) {
        acc = std::move(s.value);
        first = false;
      } else {
        acc = add_values(acc, s.value, ring, s.start);
      }
    }
    return acc;
  }

 private:
  Value negate(Value v, const GradedRing& ring) {
    for (auto& [k, p] : v.comps) p = ring.scale(p, ring.field().neg(1));
    return v;
  }

  Value add_values(const Value& a, const Value& b, const GradedRing& ring, const Token& where) {
    if (a.is_vector != b.is_vector) error_at(where, "cannot add a scalar to a module element");
    Value r = a;
    for (const auto& [k, p] : b.comps) r.comps[k] = ring.add(r.comps[k], p);
    return r;
  }

  Value multiply_values(const Value& a, const Value& b, const GradedRing& ring, const Token& where) {
    if (a.is_vector && b.is_vector) error_at(where, "product of two module elements");
    const Value& s = a.is_vector ? b : a;
    const Value& v = a.is_vector ? a : b;
    Value r;
    r.is_vector = v.is_vector;
    const Polynomial& c = s.comps.count(0) ? s.comps.at(0) : Polynomial();
    for (const auto& [k, p] : v.comps) r.comps[k] = mul(c, p, ring.field());
    return r;
  }

  Value term(const GradedRing& ring, bool vectors, std::size_t ngens) {
    Value acc = power(ring, vectors, ngens);
    while (is_sym("*")) {
      Token star = take();
      Value rhs = power(ring, vectors, ngens);
      acc = multiply_values(acc, rhs, ring, star);
    }
    return acc;
  }

  Value power(const GradedRing& ring, bool vectors, std::size_t ngens) {
    Value base = atom(ring, vectors, ngens);
    if (is_sym("^")) {
      Token caret = take();
      if (base.is_vector) error_at(caret, "power of a module element");
      long e = integer(false);
      if (e > kMaxExponent) error_at(caret, "exponent too large");
      Polynomial r = Polynomial::constant(1);
      Polynomial b = base.comps[0];
      for (long i = 0; i < e; ++i) r = mul(r, b, ring.field());
      base.comps[0] = r;
    }
    return base;
  }

  Value atom(const GradedRing& ring, bool vectors, std::size_t ngens) {
    Value v;
    if (is_sym("(")) {
      take();
      v = expression(ring, vectors, ngens);
      expect_sym(")");
      return v;
    }
    if (is_sym("-")) {
      take();
      return negate(atom(ring, vectors, ngens), ring);
    }
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      take();
      std::int64_t val = 0;
      for (char ch : t.text) val = (val * 10 + (ch - '0')) % ring.field().characteristic();
      v.comps[0] = ring.constant(val);
      return v;
    }
    if (t.kind == Tok::Ident) {
      for (int i = 0; i < ring.num_vars(); ++i)
        if (ring.variables()[i] == t.text) {
          take();
          v.comps[0] = ring.var(i);
          return v;
        }
      if (vectors && t.text.size() >= 2 && t.text[0] == 'e' &&
          t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
        unsigned long k = std::stoul(t.text.substr(1));
        if (k < 1 || k > ngens) error_at(t, "generator index out of range");
        take();
        v.is_vector = true;
        v.comps[static_cast<std::uint32_t>(k - 1)] = Polynomial::constant(1);
        return v;
      }
      error_at(t, "unknown identifier");
    }
    error_at(t, "expected a polynomial expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Degree of a value: each component p_k e_k has degree deg(p_k) + degrees[k].
// Returns nullopt for zero; throws via `bad` when not homogeneous.
std::optional<std::int32_t> value_degree(const Value& v, const std::vector<std::int32_t>& degrees, bool& ok) {
  std::optional<std::int32_t> d;
  ok = true;
  for (const auto& [k, p] : v.comps) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) {
      ok = false;
      return d;
    }
    std::int32_t e = p.degree() + (v.is_vector ? degrees[k] : 0);
    if (d && *d != e) {
      ok = false;
      return d;
    }
    d = e;
  }
  return d;
}

struct Checked {
  Value value;
  std::optional<std::int32_t> degree;
};

Checked checked_expression(Parser& p, const GradedRing& ring, bool vectors, const std::vector<std::int32_t>& degrees) {
  auto parts = p.summands(ring, vectors, degrees.size());
  Checked out;
  bool first = true;
  for (auto& s : parts) {
    bool ok = true;
    auto d = value_degree(s.value, degrees, ok);
    if (!ok) error_at(s.start, "term is not homogeneous");
    if (d && out.degree && *d != *out.degree)
      error_at(s.start, "homogeneity violation: term of degree " + std::to_string(*d) + " in an expression of degree " +
                            std::to_string(*out.degree));
    if (d && !out.degree) out.degree = d;
    if (first) {
      out.value = std::move(s.value);
      first = false;
    } else {
      if (out.value.is_vector != s.value.is_vector) error_at(s.start, "cannot add a scalar to a module element");
      for (const auto& [k, q] : s.value.comps) out.value.comps[k] = ring.add(out.value.comps[k], q);
    }
  }
  if (vectors && !out.value.is_vector) {
    bool zero = true;
    for (const auto& [k, q] : out.value.comps) zero = zero && q.is_zero();
    if (!zero) error_at(parts.front().start, "relation must be a combination of generators eK");
  }
  return out;
}

Polynomial checked_polynomial(Parser& p, const GradedRing& ring) {
  Checked c = checked_expression(p, ring, false, {});
  return c.value.comps.count(0) ? c.value.comps[0] : Polynomial();
}

// Builds a throwaway ring to parse the ideal of a ring under construction.
RingPtr bare_ring(const std::string& name, std::uint32_t p, const std::vector<std::string>& vars,
                  const std::vector<int>& weights) {
  return GradedRing::create(name, p, vars, weights, {});
}

}  // namespace

RingPtr WorkspaceSpec::ring(std::string_view name) const {
  for (const auto& r : rings)
    if (r->name() == name) return r;
  fail(ErrorKind::Input, "unknown ring '" + std::string(name) + "'");
}

const ModuleDecl& WorkspaceSpec::module(std::string_view name) const {
  for (const auto& m : modules)
    if (m.name == name) return m;
  fail(ErrorKind::Input, "unknown module '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, IdealHandle>> WorkspaceSpec::primes_over(const RingPtr& r) const {
  std::vector<std::pair<std::string, IdealHandle>> out;
  for (const auto& p : primes)
    if (p.ring == r->name()) out.emplace_back(p.name, IdealHandle(r, p.generators));
  return out;
}

WorkspaceSpec parse_spec(std::string_view text, std::optional<std::uint32_t> prime_override) {
  Parser p(tokenize(text));
  WorkspaceSpec spec;
  auto find_ring = [&](const Token& t) -> RingPtr {
    for (const auto& r : spec.rings)
      if (r->name() == t.text) return r;
    error_at(t, "unknown ring");
  };
  auto name_taken = [&](const std::string& n) {
    for (const auto& r : spec.rings)
      if (r->name() == n) return true;
    for (const auto& m : spec.modules)
      if (m.name == n) return true;
    for (const auto& q : spec.primes)
      if (q.name == n) return true;
    return false;
  };
  while (!p.at_end()) {
    Token head = p.peek();
    if (p.is_word("ring")) {
      p.take();
      Token nt = p.peek();
      std::string name = p.ident();
      if (name_taken(name)) error_at(nt, "duplicate name");
      p.expect_sym("{");
      p.expect_word("char");
      Token ct = p.peek();
      long ch = p.integer(false);
      if (ch < 2 || ch >= (1L << 31) || !is_prime(static_cast<std::uint64_t>(ch)))
        error_at(ct, "characteristic is not a prime below 2^31");
      p.expect_sym(";");
      p.expect_word("vars");
      std::vector<std::string> vars;
      while (p.peek().kind == Tok::Ident) {
        Token vt = p.peek();
        std::string v = p.ident();
        if (v.size() >= 2 && v[0] == 'e' && v.find_first_not_of("0123456789", 1) == std::string::npos)
          error_at(vt, "variable names of the form eK are reserved for generators");
        for (const auto& w : vars)
          if (w == v) error_at(vt, "duplicate variable");
        vars.push_back(v);
        if (p.is_sym(",")) p.take();
      }
      if (vars.empty()) error_at(p.peek(), "expected at least one variable");
      if (vars.size() > static_cast<std::size_t>(kMaxVars)) error_at(head, "too many variables");
      p.expect_sym(";");
      std::vector<int> weights;
      if (p.is_word("weights")) {
        p.take();
        while (p.peek().kind == Tok::Int) {
          Token wt = p.peek();
          long w = p.integer(false);
          if (w < 1 || w > 64) error_at(wt, "weights must be between 1 and 64");
          weights.push_back(static_cast<int>(w));
          if (p.is_sym(",")) p.take();
        }
        if (weights.size() != vars.size()) error_at(p.peek(), "one weight per variable expected");
        p.expect_sym(";");
      }
      auto chr = prime_override ? *prime_override : static_cast<std::uint32_t>(ch);
      RingPtr bare = bare_ring(name, chr, vars, weights);
      std::vector<Polynomial> ideal;
      if (p.is_word("ideal")) {
        p.take();
        for (;;) {
          Polynomial g = checked_polynomial(p, *bare);
          if (!g.is_zero()) ideal.push_back(g);
          if (!p.is_sym(",")) break;
          p.take();
        }
        p.expect_sym(";");
      }
      p.expect_sym("}");
      spec.rings.push_back(GradedRing::create(name, chr, vars, weights, ideal));
    } else if (p.is_word("module")) {
      p.take();
      Token nt = p.peek();
      std::string name = p.ident();
      if (name_taken(name)) error_at(nt, "duplicate name");
      p.expect_word("over");
      Token rt = p.peek();
      p.ident();
      RingPtr ring = find_ring(rt);
      p.expect_sym("{");
      p.expect_word("degrees");
      std::vector<std::int32_t> degs;
      while (p.peek().kind == Tok::Int || p.is_sym("-")) {
        degs.push_back(static_cast<std::int32_t>(p.integer(true)));
        if (p.is_sym(",")) p.take();
      }
      if (degs.empty()) error_at(p.peek(), "expected generator degrees");
      p.expect_sym(";");
      p.expect_word("relations");
      p.expect_sym("{");
      std::vector<std::vector<Polynomial>> cols;
      std::vector<std::int32_t> cdeg;
      while (!p.is_sym("}")) {
        Checked c = checked_expression(p, *ring, true, degs);
        if (c.degree) {
          std::vector<Polynomial> col(degs.size());
          for (const auto& [k, q] : c.value.comps) col[k] = q;
          cols.push_back(std::move(col));
          cdeg.push_back(*c.degree);
        }
        if (p.is_sym(";")) {
          p.take();
        } else if (!p.is_sym("}")) {
          error_at(p.peek(), "expected ';' or '}'");
        }
      }
      p.expect_sym("}");
      if (p.is_sym(";")) p.take();
      p.expect_sym("}");
      PolyMatrix rel(degs, cdeg);
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < degs.size(); ++i) rel.at(i, j) = ring->reduce(cols[j][i]);
      spec.modules.push_back({name, ring->name(), GradedModule(ring, degs, rel)});
    } else if (p.is_word("prime")) {
      p.take();
      Token nt = p.peek();
      std::string name = p.ident();
      if (name_taken(name)) error_at(nt, "duplicate name");
      p.expect_word("in");
      Token rt = p.peek();
      p.ident();
      RingPtr ring = find_ring(rt);
      p.expect_sym("{");
      PrimeDecl decl{name, ring->name(), {}};
      for (;;) {
        Polynomial g = checked_polynomial(p, *ring);
        decl.generators.push_back(ring->reduce(g));
        if (!p.is_sym(",")) break;
        p.take();
      }
      p.expect_sym("}");
      spec.primes.push_back(std::move(decl));
    } else if (p.is_word("config")) {
      p.take();
      p.expect_sym("{");
      while (!p.is_sym("}")) {
        Token kt = p.peek();
        std::string key = p.ident();
        if (key == "nmax") {
          Token vt = p.peek();
          long v = p.integer(false);
          if (v < 1 || v > 64) error_at(vt, "nmax must be between 1 and 64");
          spec.config.n_max = static_cast<int>(v);
          spec.config.n_max_set = true;
        } else if (key == "seed") {
          spec.config.seed = static_cast<std::uint64_t>(p.integer(false));
          spec.config.seed_set = true;
        } else {
          error_at(kt, "unknown configuration key");
        }
        p.expect_sym(";");
      }
      p.expect_sym("}");
    } else {
      error_at(head, "expected 'ring', 'module', 'prime' or 'config'");
    }
  }
  return spec;
}

std::string format_column(const GradedRing& ring, const PolyMatrix& m, std::size_t j) {
  std::string out;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Polynomial& q = m.at(k, j);
    if (q.is_zero()) continue;
    std::string gen = "e" + std::to_string(k + 1);
    std::string piece;
    bool negative = false;
    if (q.size() == 1) {
      std::string s = ring.to_string(q);
      if (s[0] == '-') {
        negative = true;
        s = s.substr(1);
      }
      piece = (s == "1") ? gen : s + "*" + gen;
    } else {
      piece = "(" + ring.to_string(q) + ")*" + gen;
    }
    if (out.empty())
      out = negative ? "-" + piece : piece;
    else
      out += (negative ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

std::string print_spec(const WorkspaceSpec& spec) {
  std::ostringstream os;
  for (const auto& r : spec.rings) {
    os << "ring " << r->name() << " {\n  char " << r->field().characteristic() << ";\n  vars";
    for (const auto& v : r->variables()) os << ' ' << v;
    os << ";\n  weights";
    for (int w : r->weights()) os << ' ' << w;
    os << ";\n";
    if (!r->defining_ideal().empty()) {
      os << "  ideal ";
      for (std::size_t i = 0; i < r->defining_ideal().size(); ++i)
        os << (i ? ", " : "") << r->to_string(r->defining_ideal()[i]);
      os << ";\n";
    }
    os << "}\n\n";
  }
  for (const auto& m : spec.modules) {
    os << "module " << m.name << " over " << m.ring << " {\n  degrees";
    for (auto d : m.module.degrees()) os << ' ' << d;
    os << ";\n  relations {";
    const auto& rel = m.module.relations();
    for (std::size_t j = 0; j < rel.cols(); ++j)
      os << (j ? ";\n    " : "\n    ") << format_column(m.module.r(), rel, j);
    os << (rel.cols() ? "\n  }\n}\n\n" : " }\n}\n\n");
  }
  for (const auto& q : spec.primes) {
    const auto& r = *spec.ring(q.ring);
    os << "prime " << q.name << " in " << q.ring << " { ";
    for (std::size_t i = 0; i < q.generators.size(); ++i) os << (i ? ", " : "") << r.to_string(q.generators[i]);
    os << " }\n\n";
  }
  if (spec.config.n_max_set || spec.config.seed_set) {
    os << "config {";
    if (spec.config.n_max_set) os << " nmax " << spec.config.n_max << ";";
    if (spec.config.seed_set) os << " seed " << spec.config.seed << ";";
    os << " }\n";
  }
  return os.str();
}

Polynomial parse_polynomial(const GradedRing& ring, std::string_view text) {
  Parser p(tokenize(text));
  Polynomial f = p.expression(ring, false, 0).comps[0];
  if (!p.at_end()) error_at(p.peek(), "unexpected trailing input");
  return ring.reduce(f);
}

PolyMatrix parse_relations(const GradedRing& ring, const std::vector<std::int32_t>& degrees,
                           const std::vector<std::string>& columns) {
  std::vector<std::vector<Polynomial>> cols;
  std::vector<std::int32_t> cdeg;
  for (const auto& text : columns) {
    Parser p(tokenize(text));
    Checked c = checked_expression(p, ring, true, degrees);
    if (!p.at_end()) error_at(p.peek(), "unexpected trailing input");
    if (!c.degree) continue;
    std::vector<Polynomial> col(degrees.size());
    for (const auto& [k, q] : c.value.comps) col[k] = ring.reduce(q);
    cols.push_back(std::move(col));
    cdeg.push_back(*c.degree);
  }
  PolyMatrix m(degrees, cdeg);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < degrees.size(); ++i) m.at(i, j) = cols[j][i];
  return m;
}

GradedModule parse_module(const RingPtr& ring, const std::vector<std::int32_t>& degrees,
                          const std::vector<std::string>& columns) {
  return GradedModule(ring, degrees, parse_relations(*ring, degrees, columns));
}

}  // namespace bigindec
