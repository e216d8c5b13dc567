#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "discloc/error.hpp"

using discloc::cli::Format;
using discloc::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"discloc: exhaustive checks of Bousfield localizations of discrete model structures"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--max-objects", cfg.caps.max_objects, "Object cap")->check(CLI::PositiveNumber);
  app.add_option("--max-morphisms", cfg.caps.max_morphisms, "Morphism cap, identities included")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-ring-size", cfg.max_ring_size, "Ring element cap")->check(CLI::PositiveNumber);
  app.add_option("--max-homs", cfg.max_homs, "Morphism cap for truncated abelian categories")
      ->check(CLI::PositiveNumber);
  app.add_option("--emit-dot", cfg.emit_dot, "Also write the DOT graph to this path");

  auto with_category = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("category", cfg.category, "Category JSON file");
    return sub;
  };
  with_category("validate", "Validate a category file");
  with_category("limits", "Finite (co)limits and well-completeness");
  with_category("enumerate-localizations", "All localizations with axiom checks and their poset");
  app.add_subcommand("verify-model", "Check the model axioms for a structure file")
      ->add_option("--structure", cfg.structure, "Structure JSON file")
      ->required();
  with_category("homotopy-category", "Fibrant replacement and homotopy category certificates")
      ->add_option("--subcat", cfg.subcat, "Only the localization at this subcategory (a,b,...)");
  with_category("monads", "Idempotent monads, or check one monad file")
      ->add_option("--monad", cfg.monad, "Monad JSON file (may embed its category)");
  with_category("bijections", "Refl ≅ Loc ≅ IdemMonads round trips and orders");
  with_category("colocalizations", "Colocalizations via the opposite category and directly");
  auto* ring = app.add_subcommand("ring-check", "Localization criterion for a ring map R → S");
  ring->add_option("--ring", cfg.ring, "Ring spec R")->required();
  ring->add_option("--algebra", cfg.algebra, "Ring spec S")->required();
  ring->add_option("--map", cfg.map, "Element map R → S")->required();
  auto* k0 = with_category("k0", "K0 of the Waldhausen structure of a localization");
  k0->add_option("--subcat", cfg.subcat, "Reflective subcategory (a,b,...)");
  k0->add_option("--truncated-abelian", cfg.truncated, "p=P,bound=B or a JSON spec file");
  k0->add_option("--we", cfg.weak, "Weak equivalences for truncated data: isos or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;

  try {
    const auto out = discloc::cli::run_command(cfg);
    if (!cfg.emit_dot.empty()) {
      if (out.dot.empty()) throw discloc::InputError("this command has no graph output");
      std::ofstream file(cfg.emit_dot);
      if (!file) throw discloc::InputError("cannot write " + cfg.emit_dot);
      file << out.dot;
    }
    switch (cfg.format) {
      case Format::text: std::cout << out.text; break;
      case Format::json: std::cout << out.report.dump(2) << "\n"; break;
      case Format::dot:
        if (out.dot.empty()) throw discloc::InputError("this command has no graph output");
        std::cout << out.dot;
        break;
    }
    return out.status;
  } catch (const discloc::HypothesisError& e) {
    std::cout << "hypothesis fails: " << e.what() << "\n";
    return 1;
  } catch (const discloc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
