#include <algorithm>

#include "hw/surface.hpp"

namespace hw::surface {

namespace {

[[noreturn]] void err(Code code, const std::string& msg, const Span& sp) {
  Diagnostic d;
  d.code = code;
  d.message = msg;
  d.span = sp;
  throw CheckError(std::move(d));
}

struct Elab {
  const CheckedEnv& globals;
  std::vector<std::string>& locals;

  TermPtr go(const ExprPtr& e) {
    switch (e->kind) {
      case Expr::Kind::Ident: {
        for (size_t i = locals.size(); i-- > 0;) {
          if (locals[i] == e->ident && e->ident != "_")
            return var(static_cast<uint32_t>(locals.size() - 1 - i));
        }
        if (globals.contains(e->ident)) return def(e->ident);
        err(Code::Unbound, "unbound identifier '" + e->ident + "'", e->span);
      }
      case Expr::Kind::Univ: return univ();
      case Expr::Kind::ZeroT: return zero_ty();
      case Expr::Kind::OneT: return one_ty();
      case Expr::Kind::TwoT: return two_ty();
      case Expr::Kind::Star: return star();
      case Expr::Kind::Bit0: return bit0();
      case Expr::Kind::Bit1: return bit1();

      case Expr::Kind::Fun:
      case Expr::Kind::Pi:
      case Expr::Kind::Sig:
      case Expr::Kind::W:
        return binder_form(e, 0);

      case Expr::Kind::Arrow: {
        TermPtr l = go(e->lhs);
        TermPtr r = go(e->rhs);
        return arrow(std::move(l), std::move(r));
      }
      case Expr::Kind::Product: {
        TermPtr l = go(e->lhs);
        TermPtr r = go(e->rhs);
        return product(std::move(l), std::move(r));
      }
      case Expr::Kind::App: {
        TermPtr l = go(e->lhs);
        TermPtr r = go(e->rhs);
        return app(std::move(l), std::move(r));
      }
      case Expr::Kind::Prim:
        return prim(e);
    }
    err(Code::Internal, "unreachable surface node", e->span);
  }

  TermPtr binder_form(const ExprPtr& e, size_t from) {
    const Binder& b = e->binders[from];
    if (!b.ty)
      err(Code::CannotInfer,
          "binder '" + b.name + "' needs a type annotation here (only eliminator "
          "arguments may omit them)",
          b.span);
    TermPtr dom = go(b.ty);
    locals.push_back(b.name);
    TermPtr body = from + 1 < e->binders.size() ? binder_form(e, from + 1) : go(e->body);
    locals.pop_back();
    switch (e->kind) {
      case Expr::Kind::Fun: return lam(std::move(dom), std::move(body), b.name);
      case Expr::Kind::Pi: return pi(std::move(dom), std::move(body), b.name);
      case Expr::Kind::Sig: return sigma(std::move(dom), std::move(body), b.name);
      case Expr::Kind::W: return w_ty(std::move(dom), std::move(body), b.name);
      default: err(Code::Internal, "unreachable binder form", e->span);
    }
  }

  // An eliminator argument in a binding position must be a literal `fun`
  // with at least `depth` binders; the first `depth` are stripped (their
  // annotations, if any, are not part of the kernel term).
  TermPtr binding_arg(const ExprPtr& a, int depth) {
    if (depth == 0) return go(a);
    if (a->kind != Expr::Kind::Fun || a->binders.size() < static_cast<size_t>(depth))
      err(Code::Parse,
          "this argument must be a 'fun' with " + std::to_string(depth) + " binders",
          a->span);
    for (int i = 0; i < depth; ++i) locals.push_back(a->binders[i].name);
    TermPtr body;
    if (a->binders.size() == static_cast<size_t>(depth)) {
      body = go(a->body);
    } else {
      // remaining binders stay as ordinary lambdas
      Expr rest = *a;
      rest.binders.erase(rest.binders.begin(), rest.binders.begin() + depth);
      body = binder_form(std::make_shared<Expr>(std::move(rest)), 0);
    }
    for (int i = 0; i < depth; ++i) locals.pop_back();
    return body;
  }

  TermPtr prim(const ExprPtr& e) {
    std::vector<TermPtr> kids;
    kids.reserve(e->args.size());
    for (size_t i = 0; i < e->args.size(); ++i)
      kids.push_back(binding_arg(e->args[i], binder_depth(e->prim, i)));
    switch (e->prim) {
      case Tag::IdT: return id_ty(kids[0], kids[1], kids[2]);
      case Tag::Refl: return refl(kids[0]);
      case Tag::IdRec: return id_rec(kids[0], kids[1], kids[2], kids[3], kids[4]);
      case Tag::Pair: return pair(kids[0], kids[1]);
      case Tag::Proj1: return proj1(kids[0]);
      case Tag::Proj2: return proj2(kids[0]);
      case Tag::SigRec: return sig_rec(kids[0], kids[1], kids[2]);
      case Tag::Sup: return sup(kids[0], kids[1]);
      case Tag::WRec: return w_rec(kids[0], kids[1], kids[2]);
      case Tag::WComp: return w_comp(kids[0], kids[1], kids[2], kids[3]);
      case Tag::AxFunExt: return ax_funext(kids[0], kids[1]);
      case Tag::AxEtaPi: return ax_etapi(kids[0], kids[1]);
      case Tag::ZeroRec: return zero_rec(kids[0], kids[1]);
      case Tag::OneRec: return one_rec(kids[0], kids[1], kids[2]);
      case Tag::OneComp: return one_comp(kids[0], kids[1]);
      case Tag::TwoRec: return two_rec(kids[0], kids[1], kids[2], kids[3]);
      case Tag::TwoComp0: return two_comp0(kids[0], kids[1], kids[2]);
      case Tag::TwoComp1: return two_comp1(kids[0], kids[1], kids[2]);
      default: err(Code::Internal, "unreachable primitive", e->span);
    }
  }
};

}  // namespace

TermPtr elaborate_term(const ExprPtr& e, const CheckedEnv& globals,
                       std::vector<std::string>& locals) {
  return Elab{globals, locals}.go(e);
}

std::vector<ElabDecl> elaborate(const SourceModule& m, const CheckedEnv& globals) {
  std::vector<ElabDecl> out;
  CheckedEnv scope = globals;  // shallow growth for name visibility only
  for (const auto& d : m.decls) {
    if (scope.contains(d.name))
      err(Code::Duplicate, "duplicate definition of '" + d.name + "'", d.name_span);
    std::vector<std::string> locals;
    ElabDecl ed;
    ed.name = d.name;
    ed.span = d.span;
    if (d.ty) ed.ty = elaborate_term(d.ty, scope, locals);
    if (d.body) ed.body = elaborate_term(d.body, scope, locals);
    Declaration marker;
    marker.name = d.name;
    marker.ty = univ();
    scope.add(std::move(marker));
    out.push_back(std::move(ed));
  }
  return out;
}

}  // namespace hw::surface
