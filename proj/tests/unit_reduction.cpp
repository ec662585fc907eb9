#include <doctest.h>

#include "hw/reduction.hpp"
#include "hw/rules.hpp"

using namespace hw;

namespace {

CheckedEnv make_env(ModeTag mode) {
  CheckedEnv env;
  env.mode = mode;
  return env;
}

TermPtr wh(const CheckedEnv& env, TermPtr t) {
  Fuel f(env.fuel_budget);
  return whnf(env, Context{}, std::move(t), f);
}

bool cv(const CheckedEnv& env, const TermPtr& a, const TermPtr& b) {
  Fuel f(env.fuel_budget);
  return conv(env, Context{}, a, b, f);
}

// identity on 2
TermPtr id2() { return lam(two_ty(), var(0)); }

}  // namespace

TEST_CASE("beta and projections reduce in both modes") {
  for (auto mode : {ModeTag::Strict, ModeTag::Propositional}) {
    CheckedEnv env = make_env(mode);
    CHECK(syntactic_eq(wh(env, app(id2(), bit0())), bit0()));
    CHECK(syntactic_eq(wh(env, proj1(pair(bit0(), star()))), bit0()));
    CHECK(syntactic_eq(wh(env, proj2(pair(bit0(), star()))), star()));
    CHECK(syntactic_eq(wh(env, sig_rec(two_ty(), var(1), pair(bit0(), star()))), bit0()));
  }
}

TEST_CASE("idrec computes on refl in both modes") {
  // idrec with constant motive 2, base x |-> x, on refl(0b)
  for (auto mode : {ModeTag::Strict, ModeTag::Propositional}) {
    CheckedEnv env = make_env(mode);
    TermPtr t = id_rec(two_ty(), var(0), bit0(), bit0(), refl(bit0()));
    CHECK(syntactic_eq(wh(env, t), bit0()));
  }
}

TEST_CASE("2rec is strict-mode only") {
  TermPtr t = two_rec(two_ty(), bit1(), bit0(), bit0());
  CheckedEnv strict = make_env(ModeTag::Strict);
  CheckedEnv prop = make_env(ModeTag::Propositional);
  CHECK(syntactic_eq(wh(strict, t), bit1()));
  CHECK(wh(prop, t)->tag == Tag::TwoRec);  // neutral
  CHECK(cv(strict, t, bit1()));
  CHECK_FALSE(cv(prop, t, bit1()));
}

TEST_CASE("1-elim on star is strict-mode only") {
  TermPtr t = one_rec(two_ty(), bit0(), star());
  CHECK(syntactic_eq(wh(make_env(ModeTag::Strict), t), bit0()));
  CHECK(wh(make_env(ModeTag::Propositional), t)->tag == Tag::OneRec);
}

TEST_CASE("0-elim never reduces") {
  for (auto mode : {ModeTag::Strict, ModeTag::Propositional}) {
    CheckedEnv env = make_env(mode);
    Context ctx = Context{}.extended(zero_ty());
    TermPtr t = zero_rec(two_ty(), var(0));
    Fuel f(env.fuel_budget);
    CHECK(whnf(env, ctx, t, f)->tag == Tag::ZeroRec);
  }
}

TEST_CASE("wrec on sup computes in strict mode with the recursive lambda") {
  // W over 2 with empty branching: B(x) := 0, trees are leaves.
  TermPtr wt = w_ty(two_ty(), zero_ty());
  // leaf 0b needs t : 0 -> W: fun (z : 0) => 0-elim W z
  TermPtr empty_branch = lam(zero_ty(), zero_rec(shift(wt, 0, 1), var(0)));
  TermPtr tree = sup(bit0(), empty_branch);
  // step x u v |-> x  (returns the label)
  TermPtr t = w_rec(two_ty(), var(2), tree);
  CheckedEnv strict = make_env(ModeTag::Strict);
  CHECK(syntactic_eq(wh(strict, t), bit0()));
  CheckedEnv prop = make_env(ModeTag::Propositional);
  CHECK(wh(prop, t)->tag == Tag::WRec);
}

TEST_CASE("computation witnesses unfold to refl in strict mode only") {
  CheckedEnv strict = make_env(ModeTag::Strict);
  CheckedEnv prop = make_env(ModeTag::Propositional);
  TermPtr c0 = two_comp0(two_ty(), bit1(), bit0());
  CHECK(wh(strict, c0)->tag == Tag::Refl);
  CHECK(syntactic_eq(wh(strict, c0), refl(bit1())));
  CHECK(wh(prop, c0)->tag == Tag::TwoComp0);
  TermPtr oc = one_comp(two_ty(), bit1());
  CHECK(syntactic_eq(wh(strict, oc), refl(bit1())));
  CHECK(wh(prop, oc)->tag == Tag::OneComp);
}

TEST_CASE("conversion: beta, no eta") {
  for (auto mode : {ModeTag::Strict, ModeTag::Propositional}) {
    CheckedEnv env = make_env(mode);
    CHECK(cv(env, app(id2(), bit1()), bit1()));
    // no eta: f neutral vs fun x => f x
    Context ctx = Context{}.extended(arrow(two_ty(), two_ty()));
    TermPtr f = var(0);
    TermPtr eta = lam(two_ty(), app(var(1), var(0)));
    Fuel fuel(env.fuel_budget);
    CHECK_FALSE(conv(env, ctx, f, eta, fuel));
  }
}

TEST_CASE("conversion descends under binders") {
  for (auto mode : {ModeTag::Strict, ModeTag::Propositional}) {
    CheckedEnv env = make_env(mode);
    TermPtr a = lam(two_ty(), app(id2(), var(0)));
    TermPtr b = lam(two_ty(), var(0));
    CHECK(cv(env, a, b));
    CHECK(cv(env, pi(two_ty(), app(lam(univ(), var(0)), two_ty())), pi(two_ty(), two_ty())));
  }
}

TEST_CASE("conversion uses def unfolding with same-head shortcut") {
  CheckedEnv env = make_env(ModeTag::Strict);
  Declaration d;
  d.name = "not";
  d.ty = arrow(two_ty(), two_ty());
  d.body = lam(two_ty(), two_rec(two_ty(), bit1(), bit0(), var(0)));
  env.add(d);
  Declaration ax;
  ax.name = "oracle";
  ax.ty = arrow(two_ty(), two_ty());
  env.add(ax);  // axiom: no body
  CHECK(cv(env, app(def("not"), bit0()), bit1()));
  CHECK(cv(env, app(def("oracle"), bit0()), app(def("oracle"), app(def("not"), bit1()))));
  CHECK_FALSE(cv(env, app(def("oracle"), bit0()), app(def("oracle"), bit1())));
}

TEST_CASE("fuel exhaustion raises E004") {
  CheckedEnv env = make_env(ModeTag::Strict);
  env.fuel_budget = 10;
  Declaration d;
  d.name = "loop";
  d.ty = two_ty();
  d.body = def("loop");  // ill-founded on purpose; only reachable via whnf
  env.add(d);
  try {
    Fuel g(env.fuel_budget);
    whnf(env, Context{}, def("loop"), g);
    FAIL("expected fuel exhaustion");
  } catch (const CheckError& e) {
    CHECK(e.diag.code == Code::Fuel);
  }
}

TEST_CASE("whnf determinism and idempotence on samples") {
  CheckedEnv env = make_env(ModeTag::Strict);
  std::vector<TermPtr> samples = {
      app(id2(), bit0()),
      proj2(pair(bit0(), pair(star(), bit1()))),
      two_rec(two_ty(), bit1(), bit0(), app(id2(), bit0())),
      id_rec(two_ty(), var(0), bit0(), bit0(), refl(bit0())),
  };
  for (const auto& s : samples) {
    Fuel f1(1000), f2(1000), f3(1000);
    TermPtr a = whnf(env, Context{}, s, f1);
    TermPtr b = whnf(env, Context{}, s, f2);
    CHECK(syntactic_eq(a, b));
    CHECK(syntactic_eq(whnf(env, Context{}, a, f3), a));
  }
}

TEST_CASE("normalize reaches full normal forms") {
  CheckedEnv env = make_env(ModeTag::Strict);
  TermPtr t = pair(app(id2(), bit0()), lam(two_ty(), app(id2(), var(0))));
  Fuel f(1000);
  CHECK(syntactic_eq(normalize(env, Context{}, t, f), pair(bit0(), lam(two_ty(), var(0)))));
}
