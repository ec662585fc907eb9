#include <doctest.h>

#include "hw/term.hpp"

using namespace hw;

TEST_CASE("shift moves free indices only") {
  // single free variable
  CHECK(syntactic_eq(shift(var(0), 0, 1), var(1)));
  // bound occurrence fixed
  CHECK(syntactic_eq(shift(lam(two_ty(), var(0)), 0, 5), lam(two_ty(), var(0))));
  // free-under-binder shifts past cutoff
  CHECK(syntactic_eq(shift(lam(two_ty(), var(1)), 0, 2), lam(two_ty(), var(3))));
  // cutoff respected
  CHECK(syntactic_eq(shift(app(var(0), var(3)), 2, 10), app(var(0), var(13))));
}

TEST_CASE("shift underflow is an invariant violation") {
  CHECK_THROWS(shift(var(0), 0, -1));
  CHECK_NOTHROW(shift(var(3), 0, -1));
}

TEST_CASE("subst basics") {
  CHECK(syntactic_eq(subst(var(0), 0, bit0()), bit0()));
  CHECK(syntactic_eq(subst(app(var(0), var(1)), 1, star()), app(var(0), star())));
  // renumbering above the substituted index
  CHECK(syntactic_eq(subst(var(4), 1, star()), var(3)));
  // under a binder, the replacement shifts
  TermPtr t = lam(two_ty(), app(var(1), var(0)));
  TermPtr v = lam(two_ty(), var(0));
  CHECK(syntactic_eq(subst(t, 0, v), lam(two_ty(), app(lam(two_ty(), var(0)), var(0)))));
  // capture avoidance: v's free var shifts under the binder
  CHECK(syntactic_eq(subst(lam(two_ty(), var(1)), 0, var(2)),
                     lam(two_ty(), var(3))));
}

TEST_CASE("instantiate outermost-first") {
  // body under [x, u]; x = Var 1, u = Var 0
  TermPtr body = app(var(1), var(0));
  CHECK(syntactic_eq(instantiate(body, {bit0(), bit1()}), app(bit0(), bit1())));
  // arguments with free vars stay at ambient level
  TermPtr b2 = pair(var(1), var(0));
  CHECK(syntactic_eq(instantiate(b2, {var(0), var(1)}), pair(var(0), var(1))));
}

TEST_CASE("syntactic_eq ignores hints, sees structure") {
  CHECK(syntactic_eq(lam(two_ty(), var(0), "x"), lam(two_ty(), var(0), "y")));
  CHECK_FALSE(syntactic_eq(bit0(), bit1()));
  CHECK_FALSE(syntactic_eq(refl(bit0()), bit0()));
  CHECK_FALSE(syntactic_eq(lam(two_ty(), var(0)), lam(one_ty(), var(0))));
}

TEST_CASE("free_bound tracks the largest free index") {
  CHECK(var(3)->free_bound == 4);
  CHECK(lam(two_ty(), var(0))->free_bound == 0);
  CHECK(lam(two_ty(), var(2))->free_bound == 2);
  CHECK(id_rec(var(3), var(1), bit0(), bit0(), refl(bit0()))->free_bound == 1);
}

TEST_CASE("shift/subst cancellation") {
  TermPtr t = app(lam(two_ty(), app(var(0), var(1))), var(2));
  TermPtr v = pair(var(0), bit1());
  CHECK(syntactic_eq(subst(shift(t, 0, 1), 0, v), t));
}

TEST_CASE("context variable typing shifts into scope") {
  Context ctx;
  ctx = ctx.extended(two_ty());            // x : 2
  ctx = ctx.extended(id_ty(two_ty(), var(0), var(0)));  // p : Id 2 x x
  CHECK(syntactic_eq(ctx.type_of_var(0), id_ty(two_ty(), var(1), var(1))));
  CHECK(syntactic_eq(ctx.type_of_var(1), two_ty()));
}
