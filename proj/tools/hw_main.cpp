#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hw/derive.hpp"
#include "hw/module.hpp"
#include "hw/pretty.hpp"
#include "hw/rules.hpp"

namespace {

int run_check(const std::vector<std::string>& files, const std::string& mode_name,
              int64_t fuel, const std::string& emit) {
  hw::LoadOptions opts;
  opts.mode = mode_name == "strict" ? hw::ModeTag::Strict : hw::ModeTag::Propositional;
  opts.fuel = fuel;
  if (emit == "elaborated") {
    opts.on_declaration = [](const hw::Declaration& d) {
      if (d.is_axiom())
        std::cout << "axiom " << d.name << " : " << hw::pretty(d.ty) << "\n";
      else
        std::cout << "def " << d.name << " : " << hw::pretty(d.ty)
                  << " := " << hw::pretty(d.body) << "\n";
    };
  }
  hw::CheckedEnv env;
  hw::Loader loader(env, opts);
  try {
    for (const auto& f : files) {
      if (f.size() > 4 && f.substr(f.size() - 4) == ".txt")
        loader.load_manifest(f);
      else
        loader.load_file(f);
    }
  } catch (const hw::CheckError& e) {
    if (emit == "json")
      std::cerr << e.diag.render_json() << "\n";
    else
      std::cerr << e.diag.render() << "\n";
    switch (e.diag.code) {
      case hw::Code::Io:
        return 2;
      default:
        return 1;
    }
  }
  return 0;
}

int run_derive(const std::string& spec_file, const std::string& out_file) {
  try {
    hw::SignatureSpec spec = hw::parse_signature(hw::read_file(spec_file), spec_file);
    std::string text = hw::derive_module(spec);
    if (out_file.empty() || out_file == "-") {
      std::cout << text;
    } else {
      std::ofstream out(out_file, std::ios::binary);
      if (!out) {
        std::cerr << "error[E008]: cannot write '" << out_file << "'\n";
        return 2;
      }
      out << text;
    }
  } catch (const hw::CheckError& e) {
    std::cerr << e.diag.render() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hw - a small proof checker for an intensional type theory with "
               "strict and propositional computation rules"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "type-check modules or a manifest");
  std::vector<std::string> files;
  std::string mode = "strict";
  std::string emit;
  int64_t fuel = 1000000;
  check->add_option("files", files, "input .hw files or .txt manifests")->required();
  check->add_option("--mode", mode, "strict | prop | propositional")
      ->check(CLI::IsMember({"strict", "prop", "propositional"}));
  check->add_option("--fuel", fuel, "head-reduction budget per conversion query");
  check->add_option("--emit", emit, "elaborated | json")
      ->check(CLI::IsMember({"elaborated", "json"}));

  auto* derive = app.add_subcommand("derive", "generate algebra scaffolding for a signature");
  std::string spec_file, out_file;
  derive->add_option("specfile", spec_file, "signature spec file")->required();
  derive->add_option("-o,--output", out_file, "output .hw file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (check->parsed())
    return run_check(files, mode == "propositional" ? "prop" : mode, fuel, emit);
  return run_derive(spec_file, out_file);
}
