#include "hw/reduction.hpp"

#include "hw/diagnostics.hpp"
#include "hw/rules.hpp"

namespace hw {

namespace {

void burn(Fuel& fuel) {
  if (--fuel.remaining < 0) fail(Code::Fuel, "reduction budget exceeded");
}

// t = Def name applied to args (possibly none)?
bool def_spine(const TermPtr& t, std::string& name, std::vector<TermPtr>& args) {
  const Term* cur = t.get();
  size_t n = 0;
  while (cur->tag == Tag::App) {
    cur = cur->kids[0].get();
    ++n;
  }
  if (cur->tag != Tag::Def) return false;
  name = cur->name;
  args.resize(n);
  const Term* walk = t.get();
  for (size_t i = n; i-- > 0;) {
    args[i] = walk->kids[1];
    walk = walk->kids[0].get();
  }
  return true;
}

// fam is a family body under one binder, stored at ambient level; produce
// fam(arg) as a term `depth` binders below ambient.
TermPtr fam_at(const TermPtr& fam, const TermPtr& arg, uint32_t depth) {
  return subst(shift(fam, 1, depth), 0, arg);
}

}  // namespace

TermPtr whnf(const CheckedEnv& env, const Context& ctx, TermPtr t, Fuel& fuel, bool delta) {
  const bool strict = env.mode == ModeTag::Strict;
  for (;;) {
    switch (t->tag) {
      case Tag::Def: {
        if (!delta) return t;
        const Declaration* d = env.find(t->name);
        if (!d) fail(Code::Internal, "reference to unknown declaration '" + t->name + "'");
        if (d->is_axiom()) return t;
        burn(fuel);
        t = d->body;
        continue;
      }
      case Tag::App: {
        TermPtr f = whnf(env, ctx, t->kids[0], fuel, delta);
        if (f->tag == Tag::Lam) {
          burn(fuel);
          t = subst(f->kids[1], 0, t->kids[1]);
          continue;
        }
        return with_kid(t, 0, f);
      }
      case Tag::Proj1:
      case Tag::Proj2: {
        TermPtr p = whnf(env, ctx, t->kids[0], fuel, delta);
        if (p->tag == Tag::Pair) {
          burn(fuel);
          t = p->kids[t->tag == Tag::Proj1 ? 0 : 1];
          continue;
        }
        return with_kid(t, 0, p);
      }
      case Tag::SigRec: {
        TermPtr s = whnf(env, ctx, t->kids[2], fuel, delta);
        if (s->tag == Tag::Pair) {
          burn(fuel);
          t = instantiate(t->kids[1], {s->kids[0], s->kids[1]});
          continue;
        }
        return with_kid(t, 2, s);
      }
      case Tag::IdRec: {
        TermPtr p = whnf(env, ctx, t->kids[4], fuel, delta);
        if (p->tag == Tag::Refl) {
          burn(fuel);
          t = instantiate(t->kids[1], {p->kids[0]});
          continue;
        }
        return with_kid(t, 4, p);
      }
      case Tag::OneRec: {
        if (!strict) return t;
        TermPtr s = whnf(env, ctx, t->kids[2], fuel, delta);
        if (s->tag == Tag::Star) {
          burn(fuel);
          t = t->kids[1];
          continue;
        }
        return with_kid(t, 2, s);
      }
      case Tag::TwoRec: {
        if (!strict) return t;
        TermPtr s = whnf(env, ctx, t->kids[3], fuel, delta);
        if (s->tag == Tag::Bit0 || s->tag == Tag::Bit1) {
          burn(fuel);
          t = t->kids[s->tag == Tag::Bit0 ? 1 : 2];
          continue;
        }
        return with_kid(t, 3, s);
      }
      case Tag::WRec: {
        if (!strict) return t;
        TermPtr s = whnf(env, ctx, t->kids[2], fuel, delta);
        if (s->tag == Tag::Sup) {
          burn(fuel);
          const TermPtr& label = s->kids[0];
          const TermPtr& sub = s->kids[1];
          // Domain of the recursive-call lambda is the branching type B(a),
          // recovered from the type of the subtree function.
          TermPtr sub_ty;
          try {
            sub_ty = whnf(env, ctx, infer(env, ctx, sub), fuel, true);
          } catch (CheckError& e) {
            if (e.diag.code == Code::Fuel) throw;
            fail(Code::Internal,
                 "wrec reduction: cannot determine branching domain: " + e.diag.message);
          }
          if (sub_ty->tag != Tag::Pi)
            fail(Code::Internal, "wrec reduction: subtree component is not a function");
          const TermPtr& dom = sub_ty->kids[0];
          TermPtr rec = lam(dom, w_rec(shift(t->kids[0], 1, 1), shift(t->kids[1], 3, 1),
                                       app(shift(sub, 0, 1), var(0))));
          t = instantiate(t->kids[1], {label, sub, rec});
          continue;
        }
        return with_kid(t, 2, s);
      }
      case Tag::WComp: {
        if (!strict) return t;
        burn(fuel);
        t = refl(w_rec(t->kids[0], t->kids[1], sup(t->kids[2], t->kids[3])));
        continue;
      }
      case Tag::TwoComp0:
      case Tag::TwoComp1: {
        if (!strict) return t;
        burn(fuel);
        t = refl(t->kids[t->tag == Tag::TwoComp0 ? 1 : 2]);
        continue;
      }
      case Tag::OneComp: {
        if (!strict) return t;
        burn(fuel);
        t = refl(t->kids[1]);
        continue;
      }
      default:
        return t;
    }
  }
}

Context child_context(const CheckedEnv& env, const Context& ctx, const TermPtr& t, size_t i,
                      Fuel& fuel) {
  int d = binder_depth(t->tag, i);
  if (d == 0) return ctx;
  switch (t->tag) {
    case Tag::Pi:
    case Tag::Lam:
    case Tag::Sigma:
    case Tag::WT:
    case Tag::AxEtaPi:
      return ctx.extended(t->kids[0]);
    case Tag::ZeroRec:
      return ctx.extended(zero_ty());
    case Tag::OneRec:
    case Tag::OneComp:
      return ctx.extended(one_ty());
    case Tag::TwoRec:
    case Tag::TwoComp0:
    case Tag::TwoComp1:
      return ctx.extended(two_ty());
    default:
      break;
  }
  // Sig/Id/W eliminators: the binder types come from inferred subterm types.
  // Propositional reduction never consults context entries, so placeholders
  // suffice there; strict reduction may, so compute them.
  if (env.mode == ModeTag::Propositional) {
    Context c = ctx;
    for (int k = 0; k < d; ++k) c.entries.push_back(univ());
    return c;
  }
  auto infer_whnf = [&](const TermPtr& s) {
    try {
      return whnf(env, ctx, infer(env, ctx, s), fuel, true);
    } catch (CheckError& e) {
      if (e.diag.code == Code::Fuel) throw;
      fail(Code::Internal, "cannot type binder for structural descent: " + e.diag.message);
    }
  };
  switch (t->tag) {
    case Tag::SigRec: {
      TermPtr sig = infer_whnf(t->kids[2]);
      if (sig->tag != Tag::Sigma) fail(Code::Internal, "sigrec scrutinee not a pair type");
      if (i == 0) return ctx.extended(sig);
      return ctx.extended(sig->kids[0]).extended(sig->kids[1]);
    }
    case Tag::IdRec: {
      TermPtr a = infer_whnf(t->kids[2]);
      if (i == 1) return ctx.extended(a);
      return ctx.extended(a)
          .extended(shift(a, 0, 1))
          .extended(id_ty(shift(a, 0, 2), var(1), var(0)));
    }
    case Tag::WRec:
    case Tag::WComp: {
      TermPtr w;
      if (t->tag == Tag::WRec) {
        w = infer_whnf(t->kids[2]);
      } else {
        TermPtr sub_ty = infer_whnf(t->kids[3]);
        if (sub_ty->tag != Tag::Pi || !ignores_var0(sub_ty->kids[1]))
          fail(Code::Internal, "wcomp subtree component is not a simple function");
        Fuel f2(fuel.remaining);
        w = whnf(env, ctx, shift(sub_ty->kids[1], 0, -1), f2, true);
      }
      if (w->tag != Tag::WT) fail(Code::Internal, "w-eliminator scrutinee not a tree type");
      if (i == 0) return ctx.extended(w);
      const TermPtr& a_ty = w->kids[0];
      const TermPtr& b_fam = w->kids[1];
      // x : A, u : B(x) -> W, v : (Pi y : B(x)) C(u y)
      Context c = ctx.extended(a_ty);
      c = c.extended(pi(b_fam, shift(w, 0, 2)));
      TermPtr by = fam_at(b_fam, var(1), 2);
      TermPtr cuy = subst(shift(t->kids[0], 1, 3), 0, app(var(1), var(0)));
      return c.extended(pi(by, cuy));
    }
    default:
      fail(Code::Internal, "no binder context rule for this node");
  }
}

namespace {

bool conv_whnf(const CheckedEnv& env, const Context& ctx, const TermPtr& a, const TermPtr& b,
               Fuel& fuel);

bool conv_at(const CheckedEnv& env, const Context& ctx, const TermPtr& t, const TermPtr& u,
             Fuel& fuel) {
  if (syntactic_eq(t, u)) return true;
  TermPtr t1 = whnf(env, ctx, t, fuel, /*delta=*/false);
  TermPtr u1 = whnf(env, ctx, u, fuel, /*delta=*/false);
  // Same-head constant spines: try argument-wise comparison before unfolding.
  std::string fn, gn;
  std::vector<TermPtr> fa, ga;
  if (def_spine(t1, fn, fa) && def_spine(u1, gn, ga) && fn == gn && fa.size() == ga.size()) {
    bool ok = true;
    for (size_t i = 0; ok && i < fa.size(); ++i) ok = conv_at(env, ctx, fa[i], ga[i], fuel);
    if (ok) return true;
  }
  TermPtr t2 = whnf(env, ctx, t1, fuel, /*delta=*/true);
  TermPtr u2 = whnf(env, ctx, u1, fuel, /*delta=*/true);
  return conv_whnf(env, ctx, t2, u2, fuel);
}

bool conv_whnf(const CheckedEnv& env, const Context& ctx, const TermPtr& a, const TermPtr& b,
               Fuel& fuel) {
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case Tag::Var:
      return a->index == b->index;
    case Tag::Def:
      return a->name == b->name;  // only axiom heads survive delta whnf
    case Tag::Univ:
    case Tag::ZeroT:
    case Tag::OneT:
    case Tag::TwoT:
    case Tag::Star:
    case Tag::Bit0:
    case Tag::Bit1:
      return true;
    default: {
      if (a->kids.size() != b->kids.size()) return false;
      for (size_t i = 0; i < a->kids.size(); ++i) {
        Context ci = child_context(env, ctx, a, i, fuel);
        if (!conv_at(env, ci, a->kids[i], b->kids[i], fuel)) return false;
      }
      return true;
    }
  }
}

}  // namespace

bool conv(const CheckedEnv& env, const Context& ctx, const TermPtr& t, const TermPtr& u,
          Fuel& fuel) {
  return conv_at(env, ctx, t, u, fuel);
}

TermPtr normalize(const CheckedEnv& env, const Context& ctx, const TermPtr& t, Fuel& fuel) {
  TermPtr h = whnf(env, ctx, t, fuel, true);
  if (h->kids.empty()) return h;
  std::vector<TermPtr> kids;
  kids.reserve(h->kids.size());
  for (size_t i = 0; i < h->kids.size(); ++i) {
    Context ci = child_context(env, ctx, h, i, fuel);
    kids.push_back(normalize(env, ci, h->kids[i], fuel));
  }
  return with_kids(h, std::move(kids));
}

}  // namespace hw
