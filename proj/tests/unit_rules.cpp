#include <doctest.h>

#include "test_util.hpp"

using namespace hw;
using namespace hwt;

namespace {

bool conv0(const CheckedEnv& env, const TermPtr& a, const TermPtr& b) {
  Fuel f(env.fuel_budget);
  return conv(env, Context{}, a, b, f);
}

}  // namespace

TEST_CASE("infer on introduction and elimination samples") {
  CheckedEnv env = env_of(ModeTag::Strict);
  // refl(0b) : Id 2 0b 0b
  CHECK(syntactic_eq(infer(env, Context{}, refl(bit0())), id_ty(two_ty(), bit0(), bit0())));
  // identity function on 2
  CHECK(syntactic_eq(infer(env, Context{}, lam(two_ty(), var(0))), pi(two_ty(), two_ty())));
  // check(nil, fun (x:2)=>x, 2 -> 2)
  CHECK_NOTHROW(check(env, Context{}, lam(two_ty(), var(0)), arrow(two_ty(), two_ty())));
  // Star and bits
  CHECK(syntactic_eq(infer(env, Context{}, star()), one_ty()));
  CHECK(syntactic_eq(infer(env, Context{}, bit1()), two_ty()));
}

TEST_CASE("funext constant gets the paper's statement type") {
  CheckedEnv env = env_of(ModeTag::Propositional);
  TermPtr got = infer(env, Context{}, ax_funext(two_ty(), one_ty()));
  TermPtr want = term_of(
      "Pi (f : 2 -> 1) (g : 2 -> 1), ((Pi (x : 2), Id 1 (f x) (g x)) -> Id (2 -> 1) f g)",
      env);
  CHECK(syntactic_eq(got, want));
}

TEST_CASE("etapi constant states the propositional eta rule") {
  CheckedEnv env = env_of(ModeTag::Propositional);
  TermPtr got = infer(env, Context{}, ax_etapi(two_ty(), two_ty()));
  TermPtr want = term_of(
      "Pi (f : 2 -> 2), Id (2 -> 2) f (fun (x : 2) => f x)", env);
  CHECK(syntactic_eq(got, want));
}

TEST_CASE("sup infers its tree type from the subtree function") {
  CheckedEnv env2 = check_module("def T : U := W (x : 2), 0\n", ModeTag::Strict);
  TermPtr t = term_of("sup 0b (fun (z : 0) => 0-elim (fun (q : 0) => T) z)", env2);
  TermPtr got = infer(env2, Context{}, t);
  Fuel f(1000);
  CHECK(conv(env2, Context{}, got, def("T"), f));
}

TEST_CASE("universe discipline") {
  CheckedEnv env = env_of(ModeTag::Strict);
  // U is never an element: no type for it
  CHECK_THROWS_AS((void)infer(env, Context{}, univ()), CheckError);
  // U : U rejected as an element judgement
  CHECK_THROWS_AS(check(env, Context{}, univ(), univ()), CheckError);
  // but U classifies: declarations may use it
  CHECK(check_module_code("def B : 2 -> U := fun (x : 2) => 2rec (fun y => U) 0 1 x\n",
                          ModeTag::Strict) == 0);
  // and large statements are legal classifiers
  CHECK(check_module_code("axiom k : Pi (A : U), A -> A\n", ModeTag::Strict) == 0);
  // small formers infer U
  CHECK(syntactic_eq(infer(env, Context{}, pi(two_ty(), one_ty())), univ()));
}

TEST_CASE("type mismatch carries expected and actual") {
  try {
    check_module("def bad : 2 := star\n", ModeTag::Strict);
    FAIL("should not check");
  } catch (const CheckError& e) {
    CHECK(e.diag.code == Code::Mismatch);
    CHECK(e.diag.expected == "2");
    CHECK(e.diag.actual == "1");
  }
}

TEST_CASE("propositional computation witnesses check in both modes") {
  const char* mod =
      "def C : 2 -> U := fun (x : 2) => 2\n"
      "def w0 : Id 2 (2rec (fun x => 2) 0b 1b 0b) 0b := 2comp0 (fun x => 2) 0b 1b\n"
      "def w1 : Id 2 (2rec (fun x => 2) 0b 1b 1b) 1b := 2comp1 (fun x => 2) 0b 1b\n"
      "def wu : Id 2 (1-elim (fun x => 2) 0b star) 0b := 1comp (fun x => 2) 0b\n";
  CHECK(check_module_code(mod, ModeTag::Propositional) == 0);
  CHECK(check_module_code(mod, ModeTag::Strict) == 0);
}

TEST_CASE("wcomp checks in propositional mode with the spec's statement") {
  const char* mod =
      "def T : U := W (x : 2), 0\n"
      "def br : 0 -> T := fun (z : 0) => 0-elim (fun q => T) z\n"
      "def leaf : T := sup 0b br\n"
      "def count : T -> 2 := fun (t : T) => wrec (fun w => 2) (fun x u v => x) t\n"
      "def cw : Id 2 (wrec (fun w => 2) (fun x u v => x) (sup 0b br)) 0b :=\n"
      "  wcomp (fun w => 2) (fun x u v => x) 0b br\n";
  CHECK(check_module_code(mod, ModeTag::Propositional) == 0);
  CHECK(check_module_code(mod, ModeTag::Strict) == 0);
}

TEST_CASE("strict witnesses: comp constants convert to refl in strict mode") {
  CheckedEnv env = env_of(ModeTag::Strict);
  CHECK(conv0(env, two_comp0(two_ty(), bit0(), bit1()), refl(bit0())));
  CHECK(conv0(env, one_comp(two_ty(), bit1()), refl(bit1())));
  CheckedEnv prop = env_of(ModeTag::Propositional);
  CHECK_FALSE(conv0(prop, two_comp0(two_ty(), bit0(), bit1()), refl(bit0())));
}

TEST_CASE("terms relying on definitional wrec reduction fail in propositional mode") {
  // count(leaf) = 0b needs wrec to compute; fine strictly, stuck propositionally
  const char* mod =
      "def T : U := W (x : 2), 0\n"
      "def br : 0 -> T := fun (z : 0) => 0-elim (fun q => T) z\n"
      "def ok : Id 2 (wrec (fun w => 2) (fun x u v => x) (sup 0b br)) 0b :=\n"
      "  refl 0b\n";
  CHECK(check_module_code(mod, ModeTag::Strict) == 0);
  CHECK(check_module_code(mod, ModeTag::Propositional) ==
        static_cast<int>(Code::Mismatch));
}

TEST_CASE("identity reflection is not admissible") {
  // a coercion along a propositional equality without transport is rejected
  const char* mod =
      "axiom X : U\n"
      "axiom Y : U\n"
      "axiom p : Id U X Y\n"
      "axiom x : X\n"
      "def bad : Y := x\n";
  CHECK(check_module_code(mod, ModeTag::Strict) == static_cast<int>(Code::Mismatch));
  CHECK(check_module_code(mod, ModeTag::Propositional) == static_cast<int>(Code::Mismatch));
}

TEST_CASE("duplicate and unbound names") {
  CHECK(check_module_code("def a : 2 := 0b\ndef a : 2 := 1b\n", ModeTag::Strict) ==
        static_cast<int>(Code::Duplicate));
  CHECK(check_module_code("def a : 2 := foo\n", ModeTag::Strict) ==
        static_cast<int>(Code::Unbound));
  // circular reference inside one module is just an unbound forward reference
  CHECK(check_module_code("def a : 2 := b\ndef b : 2 := a\n", ModeTag::Strict) ==
        static_cast<int>(Code::Unbound));
}

TEST_CASE("subject of a declaration without ascription infers") {
  CheckedEnv env = check_module("def f := fun (x : 2) => refl x\n", ModeTag::Strict);
  const Declaration* d = env.find("f");
  REQUIRE(d != nullptr);
  CHECK(syntactic_eq(d->ty, term_of("Pi (x : 2), Id 2 x x", env)));
}
