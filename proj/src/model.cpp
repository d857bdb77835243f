#include "fixcheck/model.hpp"

#include <sstream>

namespace fixcheck {

namespace {

struct Token {
  enum Kind { Ident, Number, Sym, End } kind = End;
  std::string text;
  int line = 0;
};

struct Lexer {
  std::string src, file;
  size_t pos = 0;
  int line = 1;
  std::vector<Token> toks;

  explicit Lexer(std::string s, std::string f) : src(std::move(s)), file(std::move(f)) { run(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(file + ":" + std::to_string(line) + ": " + msg);
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '\n') { ++line; ++pos; continue; }
      if (isspace((unsigned char)c)) { ++pos; continue; }
      if (c == '#') {
        while (pos < src.size() && src[pos] != '\n') ++pos;
        continue;
      }
      if (isalpha((unsigned char)c) || c == '_') {
        size_t s = pos;
        while (pos < src.size() && (isalnum((unsigned char)src[pos]) || src[pos] == '_')) ++pos;
        toks.push_back({Token::Ident, src.substr(s, pos - s), line});
        continue;
      }
      if (isdigit((unsigned char)c)) {
        size_t s = pos;
        while (pos < src.size() && (isdigit((unsigned char)src[pos]) || src[pos] == '/' ||
                                    src[pos] == '.'))
          ++pos;
        toks.push_back({Token::Number, src.substr(s, pos - s), line});
        continue;
      }
      if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
        toks.push_back({Token::Sym, "->", line});
        pos += 2;
        continue;
      }
      if (c == '<' && pos + 2 < src.size() && src[pos + 1] == '-' && src[pos + 2] == '>') {
        toks.push_back({Token::Sym, "<->", line});
        pos += 3;
        continue;
      }
      if (std::string("{}(),:;|=\\*+").find(c) != std::string::npos) {
        toks.push_back({Token::Sym, std::string(1, c), line});
        ++pos;
        continue;
      }
      fail(std::string("unexpected character '") + c + "'");
    }
    toks.push_back({Token::End, "", line});
  }
};

struct Parser {
  std::string file;
  std::vector<Token> toks;
  size_t at = 0;
  Model m;
  bool have_algebra = false;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(file + ":" + std::to_string(toks[std::min(at, toks.size() - 1)].line) + ": " + msg);
  }

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }
  bool is_sym(const std::string& s) const {
    return peek().kind == Token::Sym && peek().text == s;
  }
  void expect_sym(const std::string& s) {
    if (!is_sym(s)) fail("expected '" + s + "', got '" + peek().text + "'");
    ++at;
  }
  std::string expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident) fail("expected " + what + ", got '" + peek().text + "'");
    return take().text;
  }

  void note_name(const std::string& kind, const std::string& name) {
    for (const auto& [k, n] : m.decl_order)
      if (n == name) fail("name '" + name + "' is already declared");
    m.decl_order.push_back({kind, name});
  }

  Element parse_element() {
    if (is_sym("(")) {
      ++at;
      Element l = parse_element();
      expect_sym(",");
      Element r = parse_element();
      expect_sym(")");
      return pair_element(l, r);
    }
    if (peek().kind != Token::Ident && peek().kind != Token::Number)
      fail("expected an element, got '" + peek().text + "'");
    return take().text;
  }

  Rational parse_value() {
    if (peek().kind != Token::Number) fail("expected a number, got '" + peek().text + "'");
    return parse_rational(take().text);
  }

  const FiniteSet& get_set(const std::string& name) {
    auto it = m.sets.find(name);
    if (it == m.sets.end()) fail("unknown set '" + name + "'");
    return it->second.set;
  }

  void require_member(const FiniteSet& s, const Element& e, const std::string& ctx) {
    if (!s.contains(e)) fail("element '" + e + "' is not in " + ctx);
  }

  void parse_set() {
    std::string name = expect_ident("a set name");
    expect_sym("=");
    Model::SetDecl decl;
    if (is_sym("{")) {
      ++at;
      std::vector<Element> es;
      while (!is_sym("}")) {
        es.push_back(parse_element());
        if (is_sym(",")) ++at;
      }
      ++at;
      try {
        decl.set = FiniteSet(es);
      } catch (const Error& err) {
        fail(err.what());
      }
    } else if (peek().kind == Token::Ident && peek().text == "dists") {
      ++at;
      expect_sym("{");
      std::vector<Element> names;
      std::string base;
      while (!is_sym("}")) {
        std::string dn = expect_ident("a distribution name");
        auto it = m.dists.find(dn);
        if (it == m.dists.end()) fail("unknown distribution '" + dn + "'");
        if (base.empty())
          base = it->second.base;
        else if (base != it->second.base)
          fail("distributions in one set must share a base set");
        names.push_back(dn);
        if (is_sym(",")) ++at;
      }
      ++at;
      if (names.empty()) fail("a distribution set needs at least one distribution");
      decl.set = FiniteSet(names);
      decl.is_dists = true;
    } else {
      std::string a = expect_ident("a set name");
      const FiniteSet& sa = get_set(a);
      if (is_sym("*")) {
        ++at;
        decl.set = set_product(sa, get_set(expect_ident("a set name")));
      } else if (is_sym("\\")) {
        ++at;
        decl.set = set_difference(sa, get_set(expect_ident("a set name")));
      } else if (is_sym("+")) {
        ++at;
        decl.set = set_union_disjoint(sa, get_set(expect_ident("a set name")));
      } else {
        fail("expected '*', '\\' or '+' in a set expression");
      }
    }
    note_name("set", name);
    m.sets[name] = std::move(decl);
  }

  void parse_map() {
    std::string name = expect_ident("a map name");
    expect_sym(":");
    Model::MapDecl decl;
    decl.domain = expect_ident("a set name");
    const FiniteSet& dom = get_set(decl.domain);
    expect_sym("->");
    decl.codomain = expect_ident("a set name or M");
    decl.into_algebra = decl.codomain == "M";
    expect_sym("{");
    std::map<Element, Rational> vals;
    while (!is_sym("}")) {
      Element e = parse_element();
      require_member(dom, e, "set " + decl.domain);
      expect_sym(":");
      if (decl.into_algebra) {
        if (vals.count(e)) fail("duplicate entry for '" + e + "'");
        vals[e] = parse_value();
      } else {
        Element img = parse_element();
        require_member(get_set(decl.codomain), img, "set " + decl.codomain);
        if (decl.elem_map.count(e)) fail("duplicate entry for '" + e + "'");
        decl.elem_map[e] = img;
      }
      if (is_sym(",")) ++at;
    }
    ++at;
    if (decl.into_algebra) {
      std::vector<MVValue> vv;
      for (const auto& e : dom.elems) {
        auto it = vals.find(e);
        try {
          vv.push_back(it == vals.end() ? mv_bottom(m.algebra) : mv(m.algebra, it->second));
        } catch (const Error& err) {
          fail(err.what());
        }
      }
      decl.valuation = Valuation(dom, std::move(vv));
    } else {
      for (const auto& e : dom.elems)
        if (!decl.elem_map.count(e)) fail("map '" + name + "' is not total: missing '" + e + "'");
    }
    note_name("map", name);
    m.maps[name] = std::move(decl);
  }

  void parse_rel() {
    std::string name = expect_ident("a relation name");
    expect_sym(":");
    Model::RelDecl decl;
    decl.domain = expect_ident("a set name");
    expect_sym("<->");
    decl.codomain = expect_ident("a set name");
    const FiniteSet& dom = get_set(decl.domain);
    const FiniteSet& cod = get_set(decl.codomain);
    expect_sym("{");
    while (!is_sym("}")) {
      expect_sym("(");
      Element l = parse_element();
      expect_sym(",");
      Element r = parse_element();
      expect_sym(")");
      require_member(dom, l, "set " + decl.domain);
      require_member(cod, r, "set " + decl.codomain);
      decl.pairs.insert({l, r});
      if (is_sym(",")) ++at;
    }
    ++at;
    note_name("rel", name);
    m.rels[name] = std::move(decl);
  }

  void parse_dist() {
    std::string name = expect_ident("a distribution name");
    if (expect_ident("'on'") != "on") fail("expected 'on'");
    Model::DistDecl decl;
    decl.base = expect_ident("a set name");
    const FiniteSet& base = get_set(decl.base);
    expect_sym("{");
    Rational total = 0;
    while (!is_sym("}")) {
      Element e = parse_element();
      require_member(base, e, "set " + decl.base);
      expect_sym(":");
      Rational v = parse_value();
      if (decl.weights.count(e)) fail("duplicate weight for '" + e + "'");
      if (v < 0) fail("negative weight");
      if (v != 0) decl.weights[e] = v;
      total += v;
      if (is_sym(",")) ++at;
    }
    ++at;
    if (total != 1) fail("distribution weights sum to " + rational_str(total) + ", expected 1");
    note_name("dist", name);
    m.dists[name] = std::move(decl);
  }

  const Model::MapDecl& get_map(const std::string& name, bool into_algebra) {
    auto it = m.maps.find(name);
    if (it == m.maps.end()) fail("unknown map '" + name + "'");
    if (it->second.into_algebra != into_algebra)
      fail(into_algebra ? "map '" + name + "' must target M"
                        : "map '" + name + "' must target a set");
    return it->second;
  }

  void parse_block() {
    std::string name = expect_ident("a block name");
    expect_sym("=");
    Model::BlockDecl decl;
    decl.kind = expect_ident("a block kind");
    decl.param = expect_ident("a parameter name");
    if (decl.kind == "const") {
      decl.block = make_const(get_map(decl.param, true).valuation, m.algebra);
    } else if (decl.kind == "reindex") {
      const auto& mp = get_map(decl.param, false);
      decl.block = make_reindex(get_set(mp.codomain), get_set(mp.domain), mp.elem_map, m.algebra);
    } else if (decl.kind == "minrel" || decl.kind == "maxrel") {
      auto it = m.rels.find(decl.param);
      if (it == m.rels.end()) fail("unknown relation '" + decl.param + "'");
      const auto& rl = it->second;
      decl.block = decl.kind == "minrel"
                       ? make_minrel(get_set(rl.domain), get_set(rl.codomain), rl.pairs, m.algebra)
                       : make_maxrel(get_set(rl.domain), get_set(rl.codomain), rl.pairs, m.algebra);
    } else if (decl.kind == "expect") {
      auto it = m.sets.find(decl.param);
      if (it == m.sets.end() || !it->second.is_dists)
        fail("expect needs a set declared via dists { ... }");
      std::map<Element, Weights> dd;
      std::string base = m.dists.at(it->second.set.elems[0]).base;
      for (const auto& dn : it->second.set.elems) dd[dn] = m.dists.at(dn).weights;
      decl.block = make_expect(get_set(base), it->second.set, dd, m.algebra);
    } else if (decl.kind == "add" || decl.kind == "sub") {
      const Valuation& w = get_map(decl.param, true).valuation;
      decl.block = decl.kind == "add" ? make_add(w) : make_sub(w);
    } else {
      fail("unknown block kind '" + decl.kind + "'");
    }
    note_name("block", name);
    m.blocks[name] = std::move(decl);
  }

  DiagramPtr parse_diagram_atom() {
    if (is_sym("(")) {
      ++at;
      DiagramPtr d = parse_diagram_expr();
      expect_sym(")");
      return d;
    }
    std::string t = expect_ident("a diagram atom");
    if (t == "id") return d_id(get_set(expect_ident("a set name")), m.algebra);
    if (t == "sym") {
      const FiniteSet& s = get_set(expect_ident("a set name"));
      return d_sym(s, get_set(expect_ident("a set name")), m.algebra);
    }
    if (t == "dup") return d_dup(get_set(expect_ident("a set name")), m.algebra);
    if (t == "end") return d_disch(get_set(expect_ident("a set name")), m.algebra);
    if (auto it = m.blocks.find(t); it != m.blocks.end()) return d_block(it->second.block);
    if (auto it = m.diagrams.find(t); it != m.diagrams.end()) return it->second.diagram;
    fail("unknown block or diagram '" + t + "'");
  }

  DiagramPtr parse_diagram_tensor() {
    DiagramPtr d = parse_diagram_atom();
    while (is_sym("|")) {
      ++at;
      d = d_tensor(d, parse_diagram_atom());
    }
    return d;
  }

  DiagramPtr parse_diagram_expr() {
    DiagramPtr d = parse_diagram_tensor();
    while (is_sym(";")) {
      ++at;
      d = d_seq(d, parse_diagram_tensor());
    }
    return d;
  }

  void parse_diagram() {
    std::string name = expect_ident("a diagram name");
    expect_sym("=");
    size_t start = at;
    Model::DiagramDecl decl;
    decl.diagram = parse_diagram_expr();
    std::string expr;
    for (size_t i = start; i < at; ++i) expr += (i == start ? "" : " ") + toks[i].text;
    decl.expr = expr;
    note_name("diagram", name);
    m.diagrams[name] = std::move(decl);
  }

  void parse_valuation() {
    std::string name = expect_ident("a valuation name");
    expect_sym(":");
    Model::ValDecl decl;
    decl.set = expect_ident("a set name");
    const FiniteSet& dom = get_set(decl.set);
    expect_sym("{");
    std::map<Element, Rational> vals;
    while (!is_sym("}")) {
      Element e = parse_element();
      require_member(dom, e, "set " + decl.set);
      expect_sym(":");
      if (vals.count(e)) fail("duplicate entry for '" + e + "'");
      vals[e] = parse_value();
      if (is_sym(",")) ++at;
    }
    ++at;
    std::vector<MVValue> vv;
    for (const auto& e : dom.elems) {
      auto it = vals.find(e);
      try {
        vv.push_back(it == vals.end() ? mv_bottom(m.algebra) : mv(m.algebra, it->second));
      } catch (const Error& err) {
        fail(err.what());
      }
    }
    decl.valuation = Valuation(dom, std::move(vv));
    note_name("valuation", name);
    m.valuations[name] = std::move(decl);
  }

  Model run() {
    while (peek().kind != Token::End) {
      std::string kw = expect_ident("a declaration keyword");
      if (kw == "algebra") {
        if (have_algebra) fail("duplicate algebra declaration");
        std::string kind = expect_ident("'real' or 'chain'");
        if (peek().kind != Token::Number) fail("expected the top element bound");
        long k = std::stol(take().text);
        if (kind == "real")
          m.algebra = real_interval(k);
        else if (kind == "chain")
          m.algebra = finite_chain(k);
        else
          fail("algebra kind must be 'real' or 'chain'");
        have_algebra = true;
        continue;
      }
      if (!have_algebra) fail("the algebra must be declared first");
      if (kw == "set")
        parse_set();
      else if (kw == "map")
        parse_map();
      else if (kw == "rel")
        parse_rel();
      else if (kw == "dist")
        parse_dist();
      else if (kw == "block")
        parse_block();
      else if (kw == "diagram")
        parse_diagram();
      else if (kw == "valuation")
        parse_valuation();
      else
        fail("unknown declaration '" + kw + "'");
    }
    if (!have_algebra) fail("empty model: missing algebra declaration");
    return std::move(m);
  }
};

}  // namespace

Model parse_model(const std::string& text, const std::string& filename) {
  Lexer lex(text, filename);
  Parser p;
  p.file = filename;
  p.toks = std::move(lex.toks);
  return p.run();
}

std::string print_model(const Model& m) {
  std::ostringstream out;
  out << "algebra " << (m.algebra.kind == AlgebraKind::RealInterval ? "real " : "chain ")
      << m.algebra.k << "\n";
  auto list = [&](const std::vector<Element>& es) {
    std::string s = "{ ";
    for (size_t i = 0; i < es.size(); ++i) s += (i ? ", " : "") + es[i];
    return s + " }";
  };
  for (const auto& [kind, name] : m.decl_order) {
    if (kind == "set") {
      const auto& d = m.sets.at(name);
      out << "set " << name << " = " << (d.is_dists ? "dists " : "") << list(d.set.elems) << "\n";
    } else if (kind == "map") {
      const auto& d = m.maps.at(name);
      out << "map " << name << " : " << d.domain << " -> " << d.codomain << " { ";
      bool first = true;
      if (d.into_algebra) {
        for (const auto& e : d.valuation.domain.elems) {
          const Rational& v = d.valuation.at(e).value;
          if (v == 0) continue;
          out << (first ? "" : ", ") << e << ": " << rational_str(v);
          first = false;
        }
      } else {
        for (const auto& e : m.sets.at(d.domain).set.elems) {
          out << (first ? "" : ", ") << e << ": " << d.elem_map.at(e);
          first = false;
        }
      }
      out << (first ? "}" : " }") << "\n";
    } else if (kind == "rel") {
      const auto& d = m.rels.at(name);
      out << "rel " << name << " : " << d.domain << " <-> " << d.codomain << " { ";
      bool first = true;
      for (const auto& [l, r] : d.pairs) {
        out << (first ? "" : ", ") << "(" << l << "," << r << ")";
        first = false;
      }
      out << (first ? "}" : " }") << "\n";
    } else if (kind == "dist") {
      const auto& d = m.dists.at(name);
      out << "dist " << name << " on " << d.base << " { ";
      bool first = true;
      for (const auto& [e, w] : d.weights) {
        out << (first ? "" : ", ") << e << ": " << rational_str(w);
        first = false;
      }
      out << " }\n";
    } else if (kind == "block") {
      const auto& d = m.blocks.at(name);
      out << "block " << name << " = " << d.kind << " " << d.param << "\n";
    } else if (kind == "diagram") {
      out << "diagram " << name << " = " << m.diagrams.at(name).expr << "\n";
    } else if (kind == "valuation") {
      const auto& d = m.valuations.at(name);
      out << "valuation " << name << " : " << d.set << " { ";
      bool first = true;
      for (const auto& e : d.valuation.domain.elems) {
        const Rational& v = d.valuation.at(e).value;
        if (v == 0) continue;
        out << (first ? "" : ", ") << e << ": " << rational_str(v);
        first = false;
      }
      out << (first ? "}" : " }") << "\n";
    }
  }
  return out.str();
}

}  // namespace fixcheck
