#include "hw/module.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hw/rules.hpp"

namespace fs = std::filesystem;

namespace hw {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Code::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ManifestEntry> parse_manifest(const std::string& text, const std::string& file) {
  std::vector<ManifestEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    ManifestEntry e;
    std::string mode;
    if (!(ls >> e.path)) continue;
    if (ls >> mode) {
      if (mode == "strict") e.strict_only = true;
      else if (mode == "prop") e.prop_only = true;
      else if (mode != "both") {
        Diagnostic d;
        d.code = Code::Parse;
        d.message = "manifest mode must be strict, prop or both, got '" + mode + "'";
        d.span = {file, lineno, 1, lineno, 1};
        throw CheckError(std::move(d));
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

void Loader::load_manifest(const std::string& manifest_path) {
  auto entries = parse_manifest(read_file(manifest_path), manifest_path);
  fs::path base = fs::path(manifest_path).parent_path();
  for (const auto& e : entries) {
    if (e.strict_only && opts_.mode != ModeTag::Strict) continue;
    if (e.prop_only && opts_.mode != ModeTag::Propositional) continue;
    fs::path p = fs::path(e.path);
    if (p.is_relative()) p = base / p;
    load_file(p.string());
  }
}

void Loader::load_file(const std::string& path) {
  std::error_code ec;
  fs::path canon = fs::weakly_canonical(fs::path(path), ec);
  load_module(ec ? path : canon.string());
}

void Loader::load_module(const std::string& path) {
  if (std::find(loaded_.begin(), loaded_.end(), path) != loaded_.end()) return;
  if (std::find(in_progress_.begin(), in_progress_.end(), path) != in_progress_.end()) {
    Diagnostic d;
    d.code = Code::ImportCycle;
    d.message = "cyclic import of '" + path + "'";
    d.span = {path, 1, 1, 1, 1};
    throw CheckError(std::move(d));
  }
  in_progress_.push_back(path);
  surface::SourceModule mod = surface::parse(read_file(path), path);
  for (const auto& [name, span] : mod.imports) {
    fs::path dep = fs::path(path).parent_path() / (name + ".hw");
    std::error_code ec;
    fs::path canon = fs::weakly_canonical(dep, ec);
    load_module(ec ? dep.string() : canon.string());
  }
  auto decls = surface::elaborate(mod, env_);
  for (auto& ed : decls) {
    try {
      TermPtr ty = ed.ty;
      if (!ty) ty = infer(env_, Context{}, ed.body);
      Declaration d = check_declaration(env_, ed.name, ty, ed.body);
      env_.add(d);
      if (opts_.on_declaration) opts_.on_declaration(d);
    } catch (CheckError& e) {
      if (!e.diag.span.valid()) e.diag.span = ed.span;
      e.diag.message = "in declaration '" + ed.name + "': " + e.diag.message;
      throw CheckError(e.diag);
    }
  }
  in_progress_.pop_back();
  loaded_.push_back(path);
}

}  // namespace hw
