#include <cstring>
#include <map>

#include "hw/surface.hpp"

namespace hw::surface {

namespace {

enum class Tok {
  Ident,
  KwDef,
  KwAxiom,
  KwImport,
  KwFun,
  KwPi,
  KwSig,
  KwW,
  KwUniv,
  KwZero,
  KwOne,
  KwTwo,
  KwStar,
  KwBit0,
  KwBit1,
  Prim,  // keyword for a primitive term former; prim field says which
  LParen,
  RParen,
  Colon,
  Assign,
  Comma,
  FatArrow,
  Arrow,
  StarOp,
  Eof,
};

struct Token {
  Tok kind;
  std::string text;
  Span span;
  Tag prim = Tag::Univ;
};

const std::map<std::string, Tag>& prim_table() {
  static const std::map<std::string, Tag> t = {
      {"Id", Tag::IdT},        {"refl", Tag::Refl},     {"idrec", Tag::IdRec},
      {"pair", Tag::Pair},     {"fst", Tag::Proj1},     {"snd", Tag::Proj2},
      {"srec", Tag::SigRec},   {"sup", Tag::Sup},       {"wrec", Tag::WRec},
      {"wcomp", Tag::WComp},   {"funext", Tag::AxFunExt}, {"etapi", Tag::AxEtaPi},
      {"0-elim", Tag::ZeroRec}, {"1-elim", Tag::OneRec}, {"1comp", Tag::OneComp},
      {"2rec", Tag::TwoRec},   {"2comp0", Tag::TwoComp0}, {"2comp1", Tag::TwoComp1},
  };
  return t;
}

size_t prim_arity(Tag t) {
  switch (t) {
    case Tag::IdT: return 3;
    case Tag::Refl: return 1;
    case Tag::IdRec: return 5;
    case Tag::Pair: return 2;
    case Tag::Proj1: return 1;
    case Tag::Proj2: return 1;
    case Tag::SigRec: return 3;
    case Tag::Sup: return 2;
    case Tag::WRec: return 3;
    case Tag::WComp: return 4;
    case Tag::AxFunExt: return 2;
    case Tag::AxEtaPi: return 2;
    case Tag::ZeroRec: return 2;
    case Tag::OneRec: return 3;
    case Tag::OneComp: return 2;
    case Tag::TwoRec: return 4;
    case Tag::TwoComp0: return 3;
    case Tag::TwoComp1: return 3;
    default: return 0;
  }
}

struct Lexer {
  const std::string& src;
  std::string file;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s, std::string f) : src(s), file(std::move(f)) {}

  [[noreturn]] void err(const std::string& msg, Span sp) {
    Diagnostic d;
    d.code = Code::Parse;
    d.message = msg;
    d.span = sp;
    throw CheckError(std::move(d));
  }

  Span here() const {
    Span s;
    s.file = file;
    s.line = s.end_line = line;
    s.col = s.end_col = col;
    return s;
  }

  char peek(size_t k = 0) const { return pos + k < src.size() ? src[pos + k] : '\0'; }

  void advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos < src.size(); ++i) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  bool starts(const char* s) const {
    return src.compare(pos, std::strlen(s), s) == 0;
  }

  static bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (pos < src.size()) {
        if (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n') {
          advance();
        } else if (peek() == '-' && peek(1) == '-') {
          while (pos < src.size() && peek() != '\n') advance();
        } else {
          break;
        }
      }
      Span sp = here();
      if (pos >= src.size()) {
        out.push_back({Tok::Eof, "", sp});
        return out;
      }
      char c = peek();
      auto push = [&](Tok k, std::string text, Tag prim = Tag::Univ) {
        Token t{k, std::move(text), sp, prim};
        t.span.end_line = line;
        t.span.end_col = col > 1 ? col - 1 : col;
        out.push_back(std::move(t));
      };
      if (c >= '0' && c <= '2') {
        // digit-initiated tokens: exact keyword forms only
        static const std::pair<const char*, int> forms[] = {
            {"0-elim", 0}, {"0b", 1}, {"0\xE2\x82\x82", 1}, {"0", 2},
            {"1-elim", 0}, {"1comp", 0}, {"1b", 3}, {"1\xE2\x82\x82", 3}, {"1", 4},
            {"2rec", 0},   {"2comp0", 0}, {"2comp1", 0}, {"2", 5},
        };
        bool done = false;
        for (auto& [text, cls] : forms) {
          size_t n = std::strlen(text);
          if (!starts(text)) continue;
          if (pos + n < src.size() && ident_char(src[pos + n])) continue;
          std::string s(text);
          advance(n);
          switch (cls) {
            case 0: push(Tok::Prim, s, prim_table().at(s)); break;
            case 1: push(Tok::KwBit0, s); break;
            case 2: push(Tok::KwZero, s); break;
            case 3: push(Tok::KwBit1, s); break;
            case 4: push(Tok::KwOne, s); break;
            case 5: push(Tok::KwTwo, s); break;
          }
          done = true;
          break;
        }
        if (!done) err("unrecognized numeric token", sp);
        continue;
      }
      if (ident_start(c)) {
        std::string s;
        while (pos < src.size() && ident_char(peek())) {
          s += peek();
          advance();
        }
        if (s == "def") push(Tok::KwDef, s);
        else if (s == "axiom") push(Tok::KwAxiom, s);
        else if (s == "import") push(Tok::KwImport, s);
        else if (s == "fun") push(Tok::KwFun, s);
        else if (s == "Pi") push(Tok::KwPi, s);
        else if (s == "Sig") push(Tok::KwSig, s);
        else if (s == "W") push(Tok::KwW, s);
        else if (s == "U") push(Tok::KwUniv, s);
        else if (s == "star") push(Tok::KwStar, s);
        else if (prim_table().count(s)) push(Tok::Prim, s, prim_table().at(s));
        else push(Tok::Ident, s);
        continue;
      }
      if (starts("\xE2\x8B\x86")) {  // unicode star
        advance(3);
        push(Tok::KwStar, "star");
        continue;
      }
      if (starts(":=")) { advance(2); push(Tok::Assign, ":="); continue; }
      if (starts("=>")) { advance(2); push(Tok::FatArrow, "=>"); continue; }
      if (starts("->")) { advance(2); push(Tok::Arrow, "->"); continue; }
      switch (c) {
        case '(': advance(); push(Tok::LParen, "("); continue;
        case ')': advance(); push(Tok::RParen, ")"); continue;
        case ':': advance(); push(Tok::Colon, ":"); continue;
        case ',': advance(); push(Tok::Comma, ","); continue;
        case '*': advance(); push(Tok::StarOp, "*"); continue;
        default:
          err(std::string("unexpected character '") + c + "'", sp);
      }
    }
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;
  std::string file;

  const Token& cur() const { return toks[at]; }
  const Token& next() { return toks[at++]; }
  bool is(Tok k) const { return cur().kind == k; }

  [[noreturn]] void err(const std::string& msg, const std::string& expected = "") {
    Diagnostic d;
    d.code = Code::Parse;
    d.message = msg + (cur().kind == Tok::Eof ? " at end of input"
                                              : " at '" + cur().text + "'");
    if (!expected.empty()) d.expected = expected;
    d.span = cur().span;
    throw CheckError(std::move(d));
  }

  Token expect(Tok k, const char* what) {
    if (!is(k)) err(std::string("expected ") + what, what);
    return next();
  }

  static ExprPtr mk(Expr e) { return std::make_shared<Expr>(std::move(e)); }

  ExprPtr atom_node(Expr::Kind k, Span sp, std::string ident = "") {
    Expr e;
    e.kind = k;
    e.span = sp;
    e.ident = std::move(ident);
    return mk(std::move(e));
  }

  // (x y : T) or a bare ident
  void binder_group(std::vector<Binder>& out, bool allow_bare) {
    if (is(Tok::Ident) && allow_bare) {
      Binder b;
      b.name = cur().text;
      b.span = cur().span;
      next();
      out.push_back(std::move(b));
      return;
    }
    Span open = expect(Tok::LParen, "'('").span;
    std::vector<std::pair<std::string, Span>> names;
    while (is(Tok::Ident)) {
      names.emplace_back(cur().text, cur().span);
      next();
    }
    if (names.empty()) err("expected a binder name");
    expect(Tok::Colon, "':'");
    ExprPtr ty = term();
    expect(Tok::RParen, "')'");
    for (auto& [n, sp] : names) {
      Binder b;
      b.name = n;
      b.ty = ty;
      b.span = sp;
      (void)open;
      out.push_back(std::move(b));
    }
  }

  ExprPtr binder_form(Expr::Kind kind, Tok closer, const char* closer_text) {
    Span sp = next().span;  // the keyword
    std::vector<Binder> binders;
    bool bare_ok = kind == Expr::Kind::Fun;
    binder_group(binders, bare_ok);
    while (is(Tok::LParen) || (bare_ok && is(Tok::Ident))) binder_group(binders, bare_ok);
    expect(closer, closer_text);
    ExprPtr body = term();
    Expr e;
    e.kind = kind;
    e.span = sp;
    e.binders = std::move(binders);
    e.body = std::move(body);
    return mk(std::move(e));
  }

  ExprPtr term() {
    switch (cur().kind) {
      case Tok::KwFun:
        return binder_form(Expr::Kind::Fun, Tok::FatArrow, "'=>'");
      case Tok::KwPi:
        return binder_form(Expr::Kind::Pi, Tok::Comma, "','");
      case Tok::KwSig:
        return binder_form(Expr::Kind::Sig, Tok::Comma, "','");
      case Tok::KwW:
        return binder_form(Expr::Kind::W, Tok::Comma, "','");
      default:
        return arrow_term();
    }
  }

  ExprPtr arrow_term() {
    ExprPtr l = prod_term();
    if (is(Tok::Arrow)) {
      Span sp = next().span;
      ExprPtr r = term();
      Expr e;
      e.kind = Expr::Kind::Arrow;
      e.span = sp;
      e.lhs = std::move(l);
      e.rhs = std::move(r);
      return mk(std::move(e));
    }
    return l;
  }

  ExprPtr prod_term() {
    ExprPtr l = app_term();
    if (is(Tok::StarOp)) {
      Span sp = next().span;
      ExprPtr r = prod_term();
      Expr e;
      e.kind = Expr::Kind::Product;
      e.span = sp;
      e.lhs = std::move(l);
      e.rhs = std::move(r);
      return mk(std::move(e));
    }
    return l;
  }

  bool primary_starts() const {
    switch (cur().kind) {
      case Tok::LParen:
      case Tok::Ident:
      case Tok::KwUniv:
      case Tok::KwZero:
      case Tok::KwOne:
      case Tok::KwTwo:
      case Tok::KwStar:
      case Tok::KwBit0:
      case Tok::KwBit1:
      case Tok::Prim:
      case Tok::KwFun:
        return true;
      default:
        return false;
    }
  }

  ExprPtr app_term() {
    ExprPtr l = primary();
    while (primary_starts()) {
      ExprPtr r = primary();
      Expr e;
      e.kind = Expr::Kind::App;
      e.span = l->span;
      e.lhs = std::move(l);
      e.rhs = std::move(r);
      l = mk(std::move(e));
    }
    return l;
  }

  ExprPtr primary() {
    Span sp = cur().span;
    switch (cur().kind) {
      case Tok::LParen: {
        next();
        ExprPtr e = term();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        return atom_node(Expr::Kind::Ident, sp, next().text);
      case Tok::KwUniv: next(); return atom_node(Expr::Kind::Univ, sp);
      case Tok::KwZero: next(); return atom_node(Expr::Kind::ZeroT, sp);
      case Tok::KwOne: next(); return atom_node(Expr::Kind::OneT, sp);
      case Tok::KwTwo: next(); return atom_node(Expr::Kind::TwoT, sp);
      case Tok::KwStar: next(); return atom_node(Expr::Kind::Star, sp);
      case Tok::KwBit0: next(); return atom_node(Expr::Kind::Bit0, sp);
      case Tok::KwBit1: next(); return atom_node(Expr::Kind::Bit1, sp);
      case Tok::KwFun:
        // function literal as an argument; only valid in eliminator slots,
        // where elaboration unwraps it
        return binder_form(Expr::Kind::Fun, Tok::FatArrow, "'=>'");
      case Tok::Prim: {
        Token kw = next();
        Expr e;
        e.kind = Expr::Kind::Prim;
        e.span = sp;
        e.prim = kw.prim;
        size_t n = prim_arity(kw.prim);
        for (size_t i = 0; i < n; ++i) {
          if (!primary_starts())
            err("'" + kw.text + "' expects " + std::to_string(n) + " arguments");
          e.args.push_back(primary());
        }
        return mk(std::move(e));
      }
      default:
        err("expected a term");
    }
  }

  SourceModule module(const std::string& path) {
    SourceModule m;
    m.path = path;
    while (!is(Tok::Eof)) {
      if (is(Tok::KwImport)) {
        next();
        Token name = expect(Tok::Ident, "module name");
        m.imports.emplace_back(name.text, name.span);
        continue;
      }
      SurfaceDecl d;
      d.span = cur().span;
      if (is(Tok::KwAxiom)) {
        next();
        d.is_axiom = true;
        Token name = expect(Tok::Ident, "declaration name");
        d.name = name.text;
        d.name_span = name.span;
        expect(Tok::Colon, "':'");
        d.ty = term();
      } else if (is(Tok::KwDef)) {
        next();
        Token name = expect(Tok::Ident, "declaration name");
        d.name = name.text;
        d.name_span = name.span;
        if (is(Tok::Colon)) {
          next();
          d.ty = term();
        }
        expect(Tok::Assign, "':='");
        d.body = term();
      } else {
        err("expected 'def', 'axiom' or 'import'");
      }
      m.decls.push_back(std::move(d));
    }
    return m;
  }
};

}  // namespace

SourceModule parse(const std::string& text, const std::string& file) {
  Lexer lex(text, file);
  Parser p;
  p.toks = lex.run();
  p.file = file;
  return p.module(file);
}

}  // namespace hw::surface
