#include "hw/derive.hpp"

#include <algorithm>
#include <sstream>

namespace hw {

SignatureSpec parse_signature(const std::string& text, const std::string& file) {
  SignatureSpec spec;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto err = [&](const std::string& msg) {
    Diagnostic d;
    d.code = Code::Parse;
    d.message = msg;
    d.span = {file, lineno, 1, lineno, 1};
    throw CheckError(std::move(d));
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "name") {
      if (!(ls >> spec.name)) err("expected a signature name");
    } else if (head == "constructor") {
      std::string cname, colon;
      if (!(ls >> cname >> colon) || colon != ":")
        err("expected `constructor NAME : ARITY-TYPE`");
      std::string ty;
      std::getline(ls, ty);
      size_t a = ty.find_first_not_of(" \t");
      if (a == std::string::npos) err("constructor needs an arity type");
      size_t b = ty.find_last_not_of(" \t");
      spec.constructors.emplace_back(cname, ty.substr(a, b - a + 1));
    } else {
      err("unknown directive '" + head + "'");
    }
  }
  if (spec.name.empty()) spec.name = "sig";
  return spec;
}

std::string derive_module(const SignatureSpec& spec) {
  std::ostringstream out;
  const std::string p = spec.name + "_";
  const size_t n = spec.constructors.size();
  out << "-- generated scaffold for signature `" << spec.name << "` (" << n
      << " constructors)\n";

  // Label type A: one element per constructor, built from 0/1/2 and the
  // stdlib coproduct (itself a 2-indexed Sig).
  out << "def " << p << "A : U := ";
  if (n == 0) out << "0";
  else if (n == 1) out << "1";
  else if (n == 2) out << "2";
  else {
    for (size_t i = 0; i + 3 < n; ++i) out << "cop 1 (";
    out << "cop 1 2";
    for (size_t i = 0; i + 3 < n; ++i) out << ")";
  }
  out << "\n";

  // Tail label types (for injections into a right-nested coproduct).
  auto tail_ty = [&](size_t from) {
    std::ostringstream t;
    size_t rest = n - from;
    if (rest == 1) t << "1";
    else if (rest == 2) t << "2";
    else {
      for (size_t i = 0; i + 3 < rest; ++i) t << "cop 1 (";
      t << "cop 1 2";
      for (size_t i = 0; i + 3 < rest; ++i) t << ")";
    }
    return t.str();
  };

  // Injections.
  for (size_t i = 0; i < n; ++i) {
    out << "def " << p << "in" << i << " : " << p << "A := ";
    if (n == 1) out << "star";
    else if (n == 2) out << (i == 0 ? "0b" : "1b");
    else {
      // descend i steps into the right-nested coproduct
      size_t steps = std::min(i, n - 2);
      std::string close;
      for (size_t k = 0; k < steps; ++k) {
        out << "cinr 1 (" << tail_ty(k + 1) << ") (";
        close += ")";
      }
      if (i < n - 2) out << "cinl 1 (" << tail_ty(i + 1) << ") star";
      else out << (i == n - 2 ? "0b" : "1b");
      out << close;
    }
    out << "\n";
  }

  // Branching family B : A -> U, by case analysis on the label.
  out << "def " << p << "B : " << p << "A -> U := ";
  if (n == 0) {
    out << "fun (a : 0) => 0-elim (fun x => U) a\n";
  } else if (n == 1) {
    out << "fun (a : 1) => 1-elim (fun x => U) (" << spec.constructors[0].second << ") a\n";
  } else if (n == 2) {
    out << "fun (a : 2) => 2rec (fun x => U) (" << spec.constructors[0].second << ") ("
        << spec.constructors[1].second << ") a\n";
  } else {
    std::string body;
    // innermost: the final 2 chooses between the last two arities
    body = "2rec (fun x => U) (" + spec.constructors[n - 2].second + ") (" +
           spec.constructors[n - 1].second + ") t" + std::to_string(n - 2);
    for (size_t i = n - 2; i-- > 0;) {
      std::string a = i == 0 ? "a" : "t" + std::to_string(i);
      body = "copE 1 (" + tail_ty(i + 1) + ") (fun x => U) (fun (u : 1) => " +
             spec.constructors[i].second + ") (fun (t" + std::to_string(i + 1) + " : " +
             tail_ty(i + 1) + ") => " + body + ") " + a;
    }
    out << "fun (a : " << p << "A) => " << body << "\n";
  }

  // Tree type, polynomial functor, structure map.
  out << "def " << p << "T : U := W (a : " << p << "A), " << p << "B a\n";
  out << "def " << p << "P : U -> U := fun (X : U) => Sig (a : " << p << "A), (" << p
      << "B a -> X)\n";
  out << "def " << p << "str : " << p << "P " << p << "T -> " << p << "T := fun (z : " << p
      << "P " << p << "T) => sup (fst z) (snd z)\n";

  // Propositional equalities between each declared arity and B(in_i), then
  // constructor abbreviations that coerce branches along them.
  for (size_t i = 0; i < n; ++i) {
    const auto& ar = spec.constructors[i].second;
    out << "def " << p << "Bw" << i << " : Id U (" << ar << ") (" << p << "B " << p << "in"
        << i << ") := ";
    if (n == 1) out << "inv U (" << p << "B star) (" << ar << ") (1comp (fun x => U) (" << ar
                    << "))";
    else if (n == 2) out << "inv U (" << p << "B " << (i == 0 ? "0b" : "1b") << ") (" << ar
                         << ") (2comp" << i << " (fun x => U) (" << spec.constructors[0].second
                         << ") (" << spec.constructors[1].second << "))";
    else out << p << "BwX" << i;  // named lemma emitted below for the nested case
    out << "\n";
  }
  for (size_t i = 0; i < n; ++i) {
    const auto& [cname, ar] = spec.constructors[i];
    out << "def " << p << "mk_" << cname << " : ((" << ar << ") -> " << p << "T) -> " << p
        << "T := fun (t : (" << ar << ") -> " << p << "T) => sup " << p << "in" << i
        << " (fun (y : " << p << "B " << p << "in" << i << ") => t (transport U (" << p
        << "B " << p << "in" << i << ") (" << ar << ") (fun (X : U) => X) (inv U (" << ar
        << ") (" << p << "B " << p << "in" << i << ") (" << p << "Bw" << i << ")) y))\n";
  }

  // Algebra, weak homomorphism, h-initiality statement.
  out << "def " << p << "Alg : U := Sig (C : U), (" << p << "P C -> C)\n";
  out << "def " << p << "Hom : " << p << "Alg -> " << p << "Alg -> U := fun (X : " << p
      << "Alg) (Y : " << p << "Alg) => PHom " << p << "A (fun (a : " << p << "A) => " << p
      << "B a) (fst X) (snd X) (fst Y) (snd Y)\n";
  out << "def " << p << "hinit : U := Pi (Y : " << p << "Alg), iscontr (" << p
      << "Hom (pair " << p << "T " << p << "str) Y)\n";
  return out.str();
}

}  // namespace hw
