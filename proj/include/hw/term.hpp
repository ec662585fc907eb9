#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

// Kernel term language. Terms are immutable trees shared through
// shared_ptr; every operation returns fresh nodes and never mutates
// its inputs, so terms and contexts are safe to share across threads.
//
// Variables are de Bruijn indices. Children that live under binders are
// stored as bare subterms (no lambda wrapper); the "^n" comments below
// say how many binders each child sits under.

namespace hw {

enum class Tag : uint8_t {
  Var,    // de Bruijn index (no children)
  Univ,   // the single Russell-style universe; a checking target only
  Def,    // reference to a checked global declaration, by name

  Pi,     // (dom, cod^1)
  Lam,    // (dom, body^1)
  App,    // (fn, arg)

  Sigma,  // (dom, cod^1)
  Pair,   // (fst, snd) -- checked against a Sigma type, never inferred
  Proj1,  // (pair)
  Proj2,  // (pair)
  SigRec, // (motive^1, step^2, scrut); step under x:A, y:B(x)

  IdT,    // (ty, lhs, rhs)
  Refl,   // (a)
  IdRec,  // (motive^3, base^1, lhs, rhs, prf)

  ZeroT,  // empty type
  ZeroRec,// (motive^1, scrut)

  OneT,   // unit type
  Star,   // its element
  OneRec, // (motive^1, base, scrut)
  OneComp,// (motive^1, base) : Id(C(star), 1-elim(C,base,star), base)

  TwoT,   // booleans
  Bit0,
  Bit1,
  TwoRec, // (motive^1, c0, c1, scrut)
  TwoComp0, // (motive^1, c0, c1)
  TwoComp1, // (motive^1, c0, c1)

  WT,     // (dom, cod^1)
  Sup,    // (label, subtrees)
  WRec,   // (motive^1, step^3, scrut); step under x:A, u:B(x)->W, v:(Pi y)C(u y)
  WComp,  // (motive^1, step^3, label, subtrees)

  AxFunExt, // (domTy, codTy)
  AxEtaPi,  // (domTy, codFam^1)
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  Tag tag;
  uint32_t index = 0;          // Var only
  std::string name;            // Def: declaration name; binders: printing hint
  std::vector<TermPtr> kids;
  // 1 + largest free de Bruijn index in this term (0 when closed).
  // Lets shift/subst return the original node untouched for closed subtrees.
  uint32_t free_bound = 0;
};

// Number of binders each child of a node lives under.
int binder_depth(Tag tag, size_t child);
const char* tag_name(Tag tag);

// -- constructors ----------------------------------------------------------

TermPtr var(uint32_t index);
TermPtr univ();
TermPtr def(std::string name);
TermPtr pi(TermPtr dom, TermPtr cod, std::string hint = "");
TermPtr lam(TermPtr dom, TermPtr body, std::string hint = "");
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr sigma(TermPtr dom, TermPtr cod, std::string hint = "");
TermPtr pair(TermPtr fst, TermPtr snd);
TermPtr proj1(TermPtr p);
TermPtr proj2(TermPtr p);
TermPtr sig_rec(TermPtr motive, TermPtr step, TermPtr scrut);
TermPtr id_ty(TermPtr ty, TermPtr lhs, TermPtr rhs);
TermPtr refl(TermPtr a);
TermPtr id_rec(TermPtr motive, TermPtr base, TermPtr lhs, TermPtr rhs, TermPtr prf);
TermPtr zero_ty();
TermPtr zero_rec(TermPtr motive, TermPtr scrut);
TermPtr one_ty();
TermPtr star();
TermPtr one_rec(TermPtr motive, TermPtr base, TermPtr scrut);
TermPtr one_comp(TermPtr motive, TermPtr base);
TermPtr two_ty();
TermPtr bit0();
TermPtr bit1();
TermPtr two_rec(TermPtr motive, TermPtr c0, TermPtr c1, TermPtr scrut);
TermPtr two_comp0(TermPtr motive, TermPtr c0, TermPtr c1);
TermPtr two_comp1(TermPtr motive, TermPtr c0, TermPtr c1);
TermPtr w_ty(TermPtr dom, TermPtr cod, std::string hint = "");
TermPtr sup(TermPtr label, TermPtr subtrees);
TermPtr w_rec(TermPtr motive, TermPtr step, TermPtr scrut);
TermPtr w_comp(TermPtr motive, TermPtr step, TermPtr label, TermPtr subtrees);
TermPtr ax_funext(TermPtr dom, TermPtr cod);
TermPtr ax_etapi(TermPtr dom, TermPtr cod_fam);

// Non-dependent arrow and product sugar.
TermPtr arrow(TermPtr dom, TermPtr cod);
TermPtr product(TermPtr a, TermPtr b);

// -- operations ------------------------------------------------------------

// Free Var indices >= cutoff move by `amount` (bound occurrences fixed).
// Shifting a free index below zero is a kernel invariant violation.
TermPtr shift(const TermPtr& t, uint32_t cutoff, int64_t amount);

// Capture-avoiding substitution of v for Var j; indices above j renumber down.
TermPtr subst(const TermPtr& t, uint32_t j, const TermPtr& v);

// Instantiate a body under n binders with n arguments, outermost binder first.
// All arguments are expressed at the ambient level of the result.
TermPtr instantiate(const TermPtr& body, const std::vector<TermPtr>& args);

// Copy of t with child i replaced (free-variable bound recomputed).
TermPtr with_kid(const TermPtr& t, size_t i, TermPtr kid);
TermPtr with_kids(const TermPtr& t, std::vector<TermPtr> kids);

// Structural identity (alpha-equivalence; name hints ignored).
bool syntactic_eq(const TermPtr& t, const TermPtr& u);

// Bounded raw rendering for internal diagnostics.
std::string raw_string(const TermPtr& t, int max_depth = 6);

// True when Var 0 does not occur (term under a binder it ignores).
bool ignores_var0(const TermPtr& t);

// Ordered telescope of variable types; entry i is stated relative to the
// preceding prefix. Back of the vector is the innermost binder (Var 0).
struct Context {
  std::vector<TermPtr> entries;

  size_t size() const { return entries.size(); }
  Context extended(TermPtr ty) const {
    Context c = *this;
    c.entries.push_back(std::move(ty));
    return c;
  }
  // Type of Var i, shifted to the full context.
  TermPtr type_of_var(uint32_t i) const;
};

enum class ModeTag { Strict, Propositional };

struct Declaration {
  std::string name;
  TermPtr ty;       // closed
  TermPtr body;     // null for axioms
  ModeTag mode = ModeTag::Strict;
  bool is_axiom() const { return body == nullptr; }
};

}  // namespace hw
