#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hw/diagnostics.hpp"
#include "hw/env.hpp"
#include "hw/term.hpp"

namespace hw::surface {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Binder {
  std::string name;
  ExprPtr ty;  // null only for eliminator-argument lambdas
  Span span;
};

struct Expr {
  enum class Kind {
    Ident,
    Univ,
    ZeroT,
    OneT,
    TwoT,
    Star,
    Bit0,
    Bit1,
    Fun,      // binders, body
    Pi,       // binders, body
    Sig,      // binders, body
    W,        // binders, body
    Arrow,    // lhs -> rhs
    Product,  // lhs * rhs
    App,      // lhs rhs
    Prim,     // primitive keyword call: prim tag + args
  };
  Kind kind;
  Span span;
  std::string ident;
  std::vector<Binder> binders;
  ExprPtr lhs, rhs, body;
  Tag prim = Tag::Univ;
  std::vector<ExprPtr> args;
};

struct SurfaceDecl {
  std::string name;
  Span span;       // whole declaration
  Span name_span;
  ExprPtr ty;      // optional for def, required for axiom
  ExprPtr body;    // null for axiom
  bool is_axiom = false;
};

struct SourceModule {
  std::string path;
  std::vector<std::pair<std::string, Span>> imports;
  std::vector<SurfaceDecl> decls;
};

// Throws CheckError with Code::Parse on lexical/syntax errors.
SourceModule parse(const std::string& text, const std::string& file);

// Name resolution and de Bruijn conversion; no type inference. `globals`
// holds every name visible from imports and earlier declarations.
struct ElabDecl {
  std::string name;
  Span span;
  TermPtr ty;    // may be null (inferred later)
  TermPtr body;  // null for axiom
};
TermPtr elaborate_term(const ExprPtr& e, const CheckedEnv& globals,
                       std::vector<std::string>& locals);
std::vector<ElabDecl> elaborate(const SourceModule& m, const CheckedEnv& globals);

}  // namespace hw::surface
