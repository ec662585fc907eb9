#include "hw/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace hw {

int binder_depth(Tag tag, size_t child) {
  switch (tag) {
    case Tag::Pi:
    case Tag::Lam:
    case Tag::Sigma:
    case Tag::WT:
      return child == 1 ? 1 : 0;
    case Tag::SigRec:
      return child == 0 ? 1 : child == 1 ? 2 : 0;
    case Tag::IdRec:
      return child == 0 ? 3 : child == 1 ? 1 : 0;
    case Tag::ZeroRec:
    case Tag::OneRec:
    case Tag::OneComp:
    case Tag::TwoRec:
    case Tag::TwoComp0:
    case Tag::TwoComp1:
      return child == 0 ? 1 : 0;
    case Tag::WRec:
    case Tag::WComp:
      return child == 0 ? 1 : child == 1 ? 3 : 0;
    case Tag::AxEtaPi:
      return child == 1 ? 1 : 0;
    default:
      return 0;
  }
}

const char* tag_name(Tag tag) {
  switch (tag) {
    case Tag::Var: return "Var";
    case Tag::Univ: return "Univ";
    case Tag::Def: return "Def";
    case Tag::Pi: return "Pi";
    case Tag::Lam: return "Lam";
    case Tag::App: return "App";
    case Tag::Sigma: return "Sigma";
    case Tag::Pair: return "Pair";
    case Tag::Proj1: return "Proj1";
    case Tag::Proj2: return "Proj2";
    case Tag::SigRec: return "SigRec";
    case Tag::IdT: return "IdT";
    case Tag::Refl: return "Refl";
    case Tag::IdRec: return "IdRec";
    case Tag::ZeroT: return "ZeroT";
    case Tag::ZeroRec: return "ZeroRec";
    case Tag::OneT: return "OneT";
    case Tag::Star: return "Star";
    case Tag::OneRec: return "OneRec";
    case Tag::OneComp: return "OneComp";
    case Tag::TwoT: return "TwoT";
    case Tag::Bit0: return "Bit0";
    case Tag::Bit1: return "Bit1";
    case Tag::TwoRec: return "TwoRec";
    case Tag::TwoComp0: return "TwoComp0";
    case Tag::TwoComp1: return "TwoComp1";
    case Tag::WT: return "WT";
    case Tag::Sup: return "Sup";
    case Tag::WRec: return "WRec";
    case Tag::WComp: return "WComp";
    case Tag::AxFunExt: return "AxFunExt";
    case Tag::AxEtaPi: return "AxEtaPi";
  }
  return "?";
}

namespace {

uint32_t bound_of(Tag tag, const std::vector<TermPtr>& kids) {
  uint32_t b = 0;
  for (size_t i = 0; i < kids.size(); ++i) {
    int d = binder_depth(tag, i);
    uint32_t kb = kids[i]->free_bound;
    uint32_t contrib = kb > static_cast<uint32_t>(d) ? kb - d : 0;
    b = std::max(b, contrib);
  }
  return b;
}

TermPtr make(Tag tag, std::vector<TermPtr> kids, std::string name = "") {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->name = std::move(name);
  t->kids = std::move(kids);
  t->free_bound = bound_of(tag, t->kids);
  return t;
}

}  // namespace

TermPtr var(uint32_t index) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Var;
  t->index = index;
  t->free_bound = index + 1;
  return t;
}

TermPtr univ() { return make(Tag::Univ, {}); }
TermPtr def(std::string name) { return make(Tag::Def, {}, std::move(name)); }
TermPtr pi(TermPtr dom, TermPtr cod, std::string hint) {
  return make(Tag::Pi, {std::move(dom), std::move(cod)}, std::move(hint));
}
TermPtr lam(TermPtr dom, TermPtr body, std::string hint) {
  return make(Tag::Lam, {std::move(dom), std::move(body)}, std::move(hint));
}
TermPtr app(TermPtr fn, TermPtr arg) { return make(Tag::App, {std::move(fn), std::move(arg)}); }
TermPtr sigma(TermPtr dom, TermPtr cod, std::string hint) {
  return make(Tag::Sigma, {std::move(dom), std::move(cod)}, std::move(hint));
}
TermPtr pair(TermPtr fst, TermPtr snd) { return make(Tag::Pair, {std::move(fst), std::move(snd)}); }
TermPtr proj1(TermPtr p) { return make(Tag::Proj1, {std::move(p)}); }
TermPtr proj2(TermPtr p) { return make(Tag::Proj2, {std::move(p)}); }
TermPtr sig_rec(TermPtr motive, TermPtr step, TermPtr scrut) {
  return make(Tag::SigRec, {std::move(motive), std::move(step), std::move(scrut)});
}
TermPtr id_ty(TermPtr ty, TermPtr lhs, TermPtr rhs) {
  return make(Tag::IdT, {std::move(ty), std::move(lhs), std::move(rhs)});
}
TermPtr refl(TermPtr a) { return make(Tag::Refl, {std::move(a)}); }
TermPtr id_rec(TermPtr motive, TermPtr base, TermPtr lhs, TermPtr rhs, TermPtr prf) {
  return make(Tag::IdRec,
              {std::move(motive), std::move(base), std::move(lhs), std::move(rhs), std::move(prf)});
}
TermPtr zero_ty() { return make(Tag::ZeroT, {}); }
TermPtr zero_rec(TermPtr motive, TermPtr scrut) {
  return make(Tag::ZeroRec, {std::move(motive), std::move(scrut)});
}
TermPtr one_ty() { return make(Tag::OneT, {}); }
TermPtr star() { return make(Tag::Star, {}); }
TermPtr one_rec(TermPtr motive, TermPtr base, TermPtr scrut) {
  return make(Tag::OneRec, {std::move(motive), std::move(base), std::move(scrut)});
}
TermPtr one_comp(TermPtr motive, TermPtr base) {
  return make(Tag::OneComp, {std::move(motive), std::move(base)});
}
TermPtr two_ty() { return make(Tag::TwoT, {}); }
TermPtr bit0() { return make(Tag::Bit0, {}); }
TermPtr bit1() { return make(Tag::Bit1, {}); }
TermPtr two_rec(TermPtr motive, TermPtr c0, TermPtr c1, TermPtr scrut) {
  return make(Tag::TwoRec, {std::move(motive), std::move(c0), std::move(c1), std::move(scrut)});
}
TermPtr two_comp0(TermPtr motive, TermPtr c0, TermPtr c1) {
  return make(Tag::TwoComp0, {std::move(motive), std::move(c0), std::move(c1)});
}
TermPtr two_comp1(TermPtr motive, TermPtr c0, TermPtr c1) {
  return make(Tag::TwoComp1, {std::move(motive), std::move(c0), std::move(c1)});
}
TermPtr w_ty(TermPtr dom, TermPtr cod, std::string hint) {
  return make(Tag::WT, {std::move(dom), std::move(cod)}, std::move(hint));
}
TermPtr sup(TermPtr label, TermPtr subtrees) {
  return make(Tag::Sup, {std::move(label), std::move(subtrees)});
}
TermPtr w_rec(TermPtr motive, TermPtr step, TermPtr scrut) {
  return make(Tag::WRec, {std::move(motive), std::move(step), std::move(scrut)});
}
TermPtr w_comp(TermPtr motive, TermPtr step, TermPtr label, TermPtr subtrees) {
  return make(Tag::WComp,
              {std::move(motive), std::move(step), std::move(label), std::move(subtrees)});
}
TermPtr ax_funext(TermPtr dom, TermPtr cod) {
  return make(Tag::AxFunExt, {std::move(dom), std::move(cod)});
}
TermPtr ax_etapi(TermPtr dom, TermPtr cod_fam) {
  return make(Tag::AxEtaPi, {std::move(dom), std::move(cod_fam)});
}

TermPtr arrow(TermPtr dom, TermPtr cod) { return pi(std::move(dom), shift(cod, 0, 1)); }
TermPtr product(TermPtr a, TermPtr b) { return sigma(std::move(a), shift(b, 0, 1)); }

TermPtr shift(const TermPtr& t, uint32_t cutoff, int64_t amount) {
  if (amount == 0 || t->free_bound <= cutoff) return t;
  if (t->tag == Tag::Var) {
    if (t->index < cutoff) return t;
    int64_t moved = static_cast<int64_t>(t->index) + amount;
    if (moved < 0) throw std::logic_error("shift: free index moved below zero");
    return var(static_cast<uint32_t>(moved));
  }
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  for (size_t i = 0; i < t->kids.size(); ++i)
    kids.push_back(shift(t->kids[i], cutoff + binder_depth(t->tag, i), amount));
  auto r = std::make_shared<Term>();
  r->tag = t->tag;
  r->index = t->index;
  r->name = t->name;
  r->kids = std::move(kids);
  r->free_bound = bound_of(r->tag, r->kids);
  return r;
}

namespace {

TermPtr subst_rec(const TermPtr& t, uint32_t j, const TermPtr& v, uint32_t depth) {
  // No free index reaches j+depth: nothing to replace or renumber.
  if (t->free_bound <= j + depth) return t;
  if (t->tag == Tag::Var) {
    if (t->index == j + depth) return shift(v, 0, depth);
    if (t->index > j + depth) return var(t->index - 1);
    return t;
  }
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  bool changed = false;
  for (size_t i = 0; i < t->kids.size(); ++i) {
    auto k = subst_rec(t->kids[i], j, v, depth + binder_depth(t->tag, i));
    changed = changed || k != t->kids[i];
    kids.push_back(std::move(k));
  }
  if (!changed) return t;
  auto r = std::make_shared<Term>();
  r->tag = t->tag;
  r->index = t->index;
  r->name = t->name;
  r->kids = std::move(kids);
  r->free_bound = bound_of(r->tag, r->kids);
  return r;
}

}  // namespace

TermPtr subst(const TermPtr& t, uint32_t j, const TermPtr& v) { return subst_rec(t, j, v, 0); }

TermPtr instantiate(const TermPtr& body, const std::vector<TermPtr>& args) {
  TermPtr t = body;
  for (size_t i = args.size(); i-- > 0;)
    t = subst(t, 0, shift(args[i], 0, static_cast<int64_t>(i)));
  return t;
}

TermPtr with_kid(const TermPtr& t, size_t i, TermPtr kid) {
  if (kid == t->kids[i]) return t;
  auto r = std::make_shared<Term>(*t);
  r->kids[i] = std::move(kid);
  r->free_bound = bound_of(r->tag, r->kids);
  return r;
}

TermPtr with_kids(const TermPtr& t, std::vector<TermPtr> kids) {
  auto r = std::make_shared<Term>(*t);
  r->kids = std::move(kids);
  r->free_bound = bound_of(r->tag, r->kids);
  return r;
}

std::string raw_string(const TermPtr& t, int max_depth) {
  std::string out = tag_name(t->tag);
  if (t->tag == Tag::Var) return out + std::to_string(t->index);
  if (t->tag == Tag::Def) return t->name;
  if (t->kids.empty()) return out;
  if (max_depth <= 0) return out + "(..)";
  out += "(";
  for (size_t i = 0; i < t->kids.size(); ++i) {
    if (i) out += ", ";
    out += raw_string(t->kids[i], max_depth - 1);
  }
  return out + ")";
}

bool syntactic_eq(const TermPtr& t, const TermPtr& u) {
  if (t == u) return true;
  if (t->tag != u->tag) return false;
  if (t->tag == Tag::Var) return t->index == u->index;
  if (t->tag == Tag::Def) return t->name == u->name;
  if (t->kids.size() != u->kids.size()) return false;
  for (size_t i = 0; i < t->kids.size(); ++i)
    if (!syntactic_eq(t->kids[i], u->kids[i])) return false;
  return true;
}

bool ignores_var0(const TermPtr& t) {
  struct Walk {
    static bool at(const TermPtr& t, uint32_t depth) {
      if (t->free_bound <= depth) return true;
      if (t->tag == Tag::Var) return t->index != depth;
      for (size_t i = 0; i < t->kids.size(); ++i)
        if (!at(t->kids[i], depth + binder_depth(t->tag, i))) return false;
      return true;
    }
  };
  return Walk::at(t, 0);
}

TermPtr Context::type_of_var(uint32_t i) const {
  return shift(entries.at(entries.size() - 1 - i), 0, static_cast<int64_t>(i) + 1);
}

}  // namespace hw
