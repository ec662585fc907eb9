#include "hw/pretty.hpp"

#include <algorithm>
#include <set>

namespace hw {

namespace {

const char* prim_keyword(Tag t) {
  switch (t) {
    case Tag::IdT: return "Id";
    case Tag::Refl: return "refl";
    case Tag::IdRec: return "idrec";
    case Tag::Pair: return "pair";
    case Tag::Proj1: return "fst";
    case Tag::Proj2: return "snd";
    case Tag::SigRec: return "srec";
    case Tag::Sup: return "sup";
    case Tag::WRec: return "wrec";
    case Tag::WComp: return "wcomp";
    case Tag::AxFunExt: return "funext";
    case Tag::AxEtaPi: return "etapi";
    case Tag::ZeroRec: return "0-elim";
    case Tag::OneRec: return "1-elim";
    case Tag::OneComp: return "1comp";
    case Tag::TwoRec: return "2rec";
    case Tag::TwoComp0: return "2comp0";
    case Tag::TwoComp1: return "2comp1";
    default: return nullptr;
  }
}

bool is_reserved_word(const std::string& s) {
  static const std::set<std::string> kw = {
      "def", "axiom", "import", "fun", "Pi", "Sig", "W", "U", "star", "Id",
      "refl", "idrec", "pair", "fst", "snd", "srec", "sup", "wrec", "wcomp",
      "funext", "etapi",
  };
  return kw.count(s) != 0;
}

// Precedence levels: 0 loosest (binders, arrow RHS), 1 product, 2 application,
// 3 atom.
struct Printer {
  std::vector<std::string> names;  // binder stack, innermost at back
  std::set<std::string> avoid;    // globals referenced in the term

  static void collect_defs(const TermPtr& t, std::set<std::string>& out) {
    if (t->tag == Tag::Def) out.insert(t->name);
    for (auto& k : t->kids) collect_defs(k, out);
  }

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    std::string cand = base;
    int n = 0;
    auto taken = [&](const std::string& s) {
      if (is_reserved_word(s) || avoid.count(s)) return true;
      return std::find(names.begin(), names.end(), s) != names.end();
    };
    while (taken(cand)) cand = base + std::to_string(++n);
    return cand;
  }

  static std::string wrap(std::string s, int have, int want) {
    if (have < want) return "(" + std::move(s) + ")";
    return s;
  }

  std::string binder(const char* kw, const char* sep, const TermPtr& dom, const TermPtr& body,
                     const std::string& hint, int want) {
    std::string n = fresh(hint);
    std::string d = at(dom, 0);
    names.push_back(n);
    std::string b = at(body, 0);
    names.pop_back();
    return wrap(std::string(kw) + " (" + n + " : " + d + ")" + sep + b, 0, want);
  }

  std::string prim(const TermPtr& t, int want) {
    std::string out = prim_keyword(t->tag);
    for (size_t i = 0; i < t->kids.size(); ++i) {
      int depth = binder_depth(t->tag, i);
      out += " ";
      if (depth == 0) {
        out += at(t->kids[i], 3);
      } else {
        // re-wrap the stored body as an unannotated fun
        std::vector<std::string> ns;
        std::string head = "(fun";
        for (int k = 0; k < depth; ++k) {
          std::string n = fresh("x");
          head += " " + n;
          names.push_back(n);
          ns.push_back(n);
        }
        head += " => " + at(t->kids[i], 0) + ")";
        for (int k = 0; k < depth; ++k) names.pop_back();
        out += head;
      }
    }
    return wrap(std::move(out), 2, want);
  }

  std::string at(const TermPtr& t, int want) {
    switch (t->tag) {
      case Tag::Var: {
        if (t->index < names.size()) return names[names.size() - 1 - t->index];
        return "!" + std::to_string(t->index);  // out of scope; debugging only
      }
      case Tag::Univ: return "U";
      case Tag::Def: return t->name;
      case Tag::ZeroT: return "0";
      case Tag::OneT: return "1";
      case Tag::TwoT: return "2";
      case Tag::Star: return "star";
      case Tag::Bit0: return "0b";
      case Tag::Bit1: return "1b";
      case Tag::Pi:
        if (ignores_var0(t->kids[1])) {
          std::string l = at(t->kids[0], 1);
          names.push_back("_");
          std::string r = at(t->kids[1], 0);
          names.pop_back();
          return wrap(l + " -> " + r, 0, want);
        }
        return binder("Pi", ", ", t->kids[0], t->kids[1], t->name, want);
      case Tag::Sigma:
        if (ignores_var0(t->kids[1])) {
          std::string l = at(t->kids[0], 2);
          names.push_back("_");
          std::string r = at(t->kids[1], 1);
          names.pop_back();
          return wrap(l + " * " + r, 1, want);
        }
        return binder("Sig", ", ", t->kids[0], t->kids[1], t->name, want);
      case Tag::WT:
        return binder("W", ", ", t->kids[0], t->kids[1], t->name, want);
      case Tag::Lam:
        return binder("fun", " => ", t->kids[0], t->kids[1], t->name, want);
      case Tag::App: {
        std::string l = at(t->kids[0], 2);
        std::string r = at(t->kids[1], 3);
        return wrap(l + " " + r, 2, want);
      }
      default:
        return prim(t, want);
    }
  }
};

}  // namespace

std::string pretty(const TermPtr& t, const std::vector<std::string>& free_names) {
  Printer p;
  Printer::collect_defs(t, p.avoid);
  for (const auto& n : free_names) p.names.push_back(n);
  return p.at(t, 0);
}

}  // namespace hw
