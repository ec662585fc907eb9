#include "hw/rules.hpp"

#include "hw/diagnostics.hpp"
#include "hw/pretty.hpp"

// Bidirectional discipline: introduction forms (Lam, Pair, Sup, Refl) check
// against a given type, eliminations and annotated forms infer. The single
// universe is Russell-style and is only a checking target: terms check
// against Univ, but Univ itself has no type, and formers with large
// components (mentioning Univ) are classifiers that cannot be inferred as
// elements. Declaration types may be such classifiers.

namespace hw {

namespace {

struct Checker {
  const CheckedEnv& env;

  TermPtr whnf_q(const Context& ctx, const TermPtr& t) const {
    Fuel f(env.fuel_budget);
    return whnf(env, ctx, t, f, true);
  }
  bool conv_q(const Context& ctx, const TermPtr& a, const TermPtr& b) const {
    Fuel f(env.fuel_budget);
    return conv(env, ctx, a, b, f);
  }
  void require_conv(const Context& ctx, const TermPtr& expected, const TermPtr& actual,
                    const char* what) const {
    if (!conv_q(ctx, expected, actual))
      fail(Code::Mismatch, std::string("type mismatch: ") + what,
           pretty(whnf_q(ctx, expected)), pretty(whnf_q(ctx, actual)));
  }

  // Classifier well-formedness: Univ and formers over classifiers are
  // accepted; everything else must check against Univ.
  void is_type(const Context& ctx, const TermPtr& t) const {
    switch (t->tag) {
      case Tag::Univ:
        return;
      case Tag::Pi:
      case Tag::Sigma:
      case Tag::WT:
        is_type(ctx, t->kids[0]);
        is_type(ctx.extended(t->kids[0]), t->kids[1]);
        return;
      case Tag::IdT:
        is_type(ctx, t->kids[0]);
        check(ctx, t->kids[1], t->kids[0]);
        check(ctx, t->kids[2], t->kids[0]);
        return;
      default:
        check(ctx, t, univ());
        return;
    }
  }

  TermPtr infer(const Context& ctx, const TermPtr& t) const {
    switch (t->tag) {
      case Tag::Var: {
        if (t->index >= ctx.size())
          fail(Code::Internal, "de Bruijn index escapes the context");
        return ctx.type_of_var(t->index);
      }
      case Tag::Univ:
        fail(Code::CannotInfer, "U is a type former, not an element; it has no type");
      case Tag::Def: {
        const Declaration* d = env.find(t->name);
        if (!d) fail(Code::Unbound, "unbound declaration '" + t->name + "'");
        return d->ty;
      }

      case Tag::Pi:
      case Tag::Sigma:
      case Tag::WT:
        check(ctx, t->kids[0], univ());
        check(ctx.extended(t->kids[0]), t->kids[1], univ());
        return univ();
      case Tag::IdT:
        check(ctx, t->kids[0], univ());
        check(ctx, t->kids[1], t->kids[0]);
        check(ctx, t->kids[2], t->kids[0]);
        return univ();
      case Tag::ZeroT:
      case Tag::OneT:
      case Tag::TwoT:
        return univ();

      case Tag::Lam: {
        is_type(ctx, t->kids[0]);
        TermPtr bt = infer(ctx.extended(t->kids[0]), t->kids[1]);
        return pi(t->kids[0], bt, t->name);
      }
      case Tag::App: {
        TermPtr ft = whnf_q(ctx, infer(ctx, t->kids[0]));
        if (ft->tag != Tag::Pi)
          fail(Code::Mismatch, "applied term is not a function", "a function type",
               pretty(ft));
        check(ctx, t->kids[1], ft->kids[0]);
        return subst(ft->kids[1], 0, t->kids[1]);
      }

      case Tag::Pair:
        fail(Code::CannotInfer, "a pair needs an ascribed pair type");
      case Tag::Proj1:
      case Tag::Proj2: {
        TermPtr pt = whnf_q(ctx, infer(ctx, t->kids[0]));
        if (pt->tag != Tag::Sigma)
          fail(Code::Mismatch, "projection from a non-pair", "a pair type", pretty(pt));
        if (t->tag == Tag::Proj1) return pt->kids[0];
        return subst(pt->kids[1], 0, proj1(t->kids[0]));
      }
      case Tag::SigRec: {
        TermPtr st = whnf_q(ctx, infer(ctx, t->kids[2]));
        if (st->tag != Tag::Sigma)
          fail(Code::Mismatch, "srec scrutinee is not a pair", "a pair type", pretty(st));
        const TermPtr& a_ty = st->kids[0];
        const TermPtr& b_fam = st->kids[1];
        is_type(ctx.extended(st), t->kids[0]);
        // step : C(pair(x, y)) under x : A, y : B(x)
        TermPtr target = subst(shift(t->kids[0], 1, 2), 0, pair(var(1), var(0)));
        check(ctx.extended(a_ty).extended(b_fam), t->kids[1], target);
        return subst(t->kids[0], 0, t->kids[2]);
      }

      case Tag::Refl: {
        TermPtr a_ty = infer(ctx, t->kids[0]);
        return id_ty(a_ty, t->kids[0], t->kids[0]);
      }
      case Tag::IdRec: {
        const TermPtr& motive = t->kids[0];
        const TermPtr& base = t->kids[1];
        const TermPtr& lhs = t->kids[2];
        const TermPtr& rhs = t->kids[3];
        const TermPtr& prf = t->kids[4];
        TermPtr a_ty = infer(ctx, lhs);
        check(ctx, rhs, a_ty);
        check(ctx, prf, id_ty(a_ty, lhs, rhs));
        Context mctx = ctx.extended(a_ty)
                           .extended(shift(a_ty, 0, 1))
                           .extended(id_ty(shift(a_ty, 0, 2), var(1), var(0)));
        is_type(mctx, motive);
        // base : C(x, x, refl x) under x : A
        TermPtr btarget = instantiate(shift(motive, 3, 1), {var(0), var(0), refl(var(0))});
        check(ctx.extended(a_ty), base, btarget);
        return instantiate(motive, {lhs, rhs, prf});
      }

      case Tag::ZeroRec: {
        check(ctx, t->kids[1], zero_ty());
        is_type(ctx.extended(zero_ty()), t->kids[0]);
        return subst(t->kids[0], 0, t->kids[1]);
      }
      case Tag::OneRec:
      case Tag::OneComp: {
        const TermPtr& motive = t->kids[0];
        const TermPtr& base = t->kids[1];
        is_type(ctx.extended(one_ty()), motive);
        TermPtr at_star = subst(motive, 0, star());
        check(ctx, base, at_star);
        if (t->tag == Tag::OneRec) {
          check(ctx, t->kids[2], one_ty());
          return subst(motive, 0, t->kids[2]);
        }
        return id_ty(at_star, one_rec(motive, base, star()), base);
      }
      case Tag::TwoRec:
      case Tag::TwoComp0:
      case Tag::TwoComp1: {
        const TermPtr& motive = t->kids[0];
        is_type(ctx.extended(two_ty()), motive);
        TermPtr at0 = subst(motive, 0, bit0());
        TermPtr at1 = subst(motive, 0, bit1());
        check(ctx, t->kids[1], at0);
        check(ctx, t->kids[2], at1);
        if (t->tag == Tag::TwoRec) {
          check(ctx, t->kids[3], two_ty());
          return subst(motive, 0, t->kids[3]);
        }
        if (t->tag == Tag::TwoComp0)
          return id_ty(at0, two_rec(motive, t->kids[1], t->kids[2], bit0()), t->kids[1]);
        return id_ty(at1, two_rec(motive, t->kids[1], t->kids[2], bit1()), t->kids[2]);
      }

      case Tag::Sup: {
        // Inference recovers the tree type from the subtree function.
        TermPtr w = w_from_subtrees(ctx, t->kids[1], t->kids[0]);
        return w;
      }
      case Tag::WRec: {
        TermPtr w = whnf_q(ctx, infer(ctx, t->kids[2]));
        if (w->tag != Tag::WT)
          fail(Code::Mismatch, "wrec scrutinee is not a tree", "a W-type", pretty(w));
        check_w_eliminator(ctx, w, t->kids[0], t->kids[1]);
        return subst(t->kids[0], 0, t->kids[2]);
      }
      case Tag::WComp: {
        const TermPtr& motive = t->kids[0];
        const TermPtr& step = t->kids[1];
        const TermPtr& label = t->kids[2];
        const TermPtr& sub = t->kids[3];
        TermPtr w = w_from_subtrees(ctx, sub, label);
        check_w_eliminator(ctx, w, motive, step);
        TermPtr scrut = sup(label, sub);
        TermPtr dom = subst(w->kids[1], 0, label);
        TermPtr recur = lam(dom, w_rec(shift(motive, 1, 1), shift(step, 3, 1),
                                       app(shift(sub, 0, 1), var(0))));
        TermPtr rhs = instantiate(step, {label, sub, recur});
        return id_ty(subst(motive, 0, scrut), w_rec(motive, step, scrut), rhs);
      }

      case Tag::AxFunExt: {
        const TermPtr& a = t->kids[0];
        const TermPtr& b = t->kids[1];
        check(ctx, a, univ());
        check(ctx, b, univ());
        TermPtr ab = arrow(a, b);
        TermPtr pointwise = pi(shift(a, 0, 2), id_ty(shift(b, 0, 3), app(var(2), var(0)),
                                                     app(var(1), var(0))), "x");
        TermPtr concl = id_ty(shift(ab, 0, 2), var(1), var(0));
        return pi(ab, pi(shift(ab, 0, 1), arrow(pointwise, concl), "g"), "f");
      }
      case Tag::AxEtaPi: {
        const TermPtr& a = t->kids[0];
        const TermPtr& b_fam = t->kids[1];
        check(ctx, a, univ());
        check(ctx.extended(a), b_fam, univ());
        TermPtr piab = pi(a, b_fam, "x");
        TermPtr eta = lam(shift(a, 0, 1), app(var(1), var(0)), "x");
        return pi(piab, id_ty(shift(piab, 0, 1), var(0), eta), "f");
      }

      default:
        fail(Code::CannotInfer,
             std::string("no inference rule for ") + tag_name(t->tag));
    }
  }

  // Shared W-eliminator premise checking: motive under w : W and
  // step under x : A, u : B(x) -> W, v : (Pi y : B(x)) C(u y).
  void check_w_eliminator(const Context& ctx, const TermPtr& w, const TermPtr& motive,
                          const TermPtr& step) const {
    const TermPtr& a_ty = w->kids[0];
    const TermPtr& b_fam = w->kids[1];
    is_type(ctx.extended(w), motive);
    Context sctx = ctx.extended(a_ty).extended(pi(b_fam, shift(w, 0, 2)));
    TermPtr by = subst(shift(b_fam, 1, 2), 0, var(1));
    TermPtr cuy = subst(shift(motive, 1, 3), 0, app(var(1), var(0)));
    sctx = sctx.extended(pi(by, cuy, "y"));
    TermPtr target = subst(shift(motive, 1, 3), 0, sup(var(2), var(1)));
    check(sctx, step, target);
  }

  // Recover W = (W x : A) B from a subtree function u : B(a) -> W, then check
  // the label against A and the domain against B(a).
  TermPtr w_from_subtrees(const Context& ctx, const TermPtr& sub, const TermPtr& label) const {
    TermPtr ft = whnf_q(ctx, infer(ctx, sub));
    if (ft->tag != Tag::Pi)
      fail(Code::Mismatch, "sup subtree component is not a function", "a function into a W-type",
           pretty(ft));
    if (!ignores_var0(ft->kids[1]))
      fail(Code::Mismatch, "sup subtree codomain depends on its argument",
           "a non-dependent function into a W-type", pretty(ft));
    TermPtr w = whnf_q(ctx, shift(ft->kids[1], 0, -1));
    if (w->tag != Tag::WT)
      fail(Code::Mismatch, "sup subtree codomain is not a W-type", "a W-type", pretty(w));
    check(ctx, label, w->kids[0]);
    require_conv(ctx, subst(w->kids[1], 0, label), ft->kids[0],
                 "sup subtree domain must be the branching type at the label");
    return w;
  }

  void check(const Context& ctx, const TermPtr& t, const TermPtr& ty) const {
    switch (t->tag) {
      case Tag::Lam: {
        TermPtr tw = whnf_q(ctx, ty);
        if (tw->tag != Tag::Pi)
          fail(Code::Mismatch, "function literal against a non-function type", pretty(tw),
               "fun (...) => ...");
        is_type(ctx, t->kids[0]);
        require_conv(ctx, tw->kids[0], t->kids[0], "function binder annotation");
        check(ctx.extended(t->kids[0]), t->kids[1], tw->kids[1]);
        return;
      }
      case Tag::Pair: {
        TermPtr tw = whnf_q(ctx, ty);
        if (tw->tag != Tag::Sigma)
          fail(Code::Mismatch, "pair against a non-pair type", pretty(tw), "pair ...");
        check(ctx, t->kids[0], tw->kids[0]);
        check(ctx, t->kids[1], subst(tw->kids[1], 0, t->kids[0]));
        return;
      }
      case Tag::Sup: {
        TermPtr tw = whnf_q(ctx, ty);
        if (tw->tag != Tag::WT) {
          infer_and_convert(ctx, t, ty);
          return;
        }
        check(ctx, t->kids[0], tw->kids[0]);
        check(ctx, t->kids[1], arrow(subst(tw->kids[1], 0, t->kids[0]), tw));
        return;
      }
      case Tag::Refl: {
        TermPtr tw = whnf_q(ctx, ty);
        if (tw->tag != Tag::IdT) {
          infer_and_convert(ctx, t, ty);
          return;
        }
        check(ctx, t->kids[0], tw->kids[0]);
        require_conv(ctx, tw->kids[1], t->kids[0], "refl left endpoint");
        require_conv(ctx, tw->kids[2], t->kids[0], "refl right endpoint");
        return;
      }
      default:
        infer_and_convert(ctx, t, ty);
        return;
    }
  }

  void infer_and_convert(const Context& ctx, const TermPtr& t, const TermPtr& ty) const {
    TermPtr at = infer(ctx, t);
    if (!conv_q(ctx, at, ty))
      fail(Code::Mismatch, "type mismatch", pretty(whnf_q(ctx, ty)), pretty(whnf_q(ctx, at)));
  }
};

}  // namespace

TermPtr infer(const CheckedEnv& env, const Context& ctx, const TermPtr& t) {
  return Checker{env}.infer(ctx, t);
}

void check(const CheckedEnv& env, const Context& ctx, const TermPtr& t, const TermPtr& ty) {
  Checker{env}.check(ctx, t, ty);
}

void check_is_type(const CheckedEnv& env, const Context& ctx, const TermPtr& t) {
  Checker{env}.is_type(ctx, t);
}

Declaration check_declaration(const CheckedEnv& env, const std::string& name, TermPtr ty,
                              TermPtr body) {
  if (env.contains(name)) fail(Code::Duplicate, "duplicate definition of '" + name + "'");
  Checker c{env};
  c.is_type(Context{}, ty);
  if (body) c.check(Context{}, body, ty);
  Declaration d;
  d.name = name;
  d.ty = std::move(ty);
  d.body = std::move(body);
  d.mode = env.mode;
  return d;
}

}  // namespace hw
