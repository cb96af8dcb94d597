#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "hopf/hopf_c.h"

namespace {

int exit_code(hopf_status s) {
  switch (s) {
    case HOPF_OK: return 0;
    case HOPF_CHECK_FAILED:
    case HOPF_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

int finish(hopf_context* ctx, hopf_status s) {
  std::fputs(hopf_output(ctx), stdout);
  if (s != HOPF_OK && s != HOPF_CHECK_FAILED) std::fprintf(stderr, "error: %s\n", hopf_last_error(ctx));
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf algebras of rooted trees and words"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  const std::string algebras = "ck|gl|foissy|planar|shuffle|qshuffle|qsym";
  std::string algebra = "ck", input, left, right, format = "json", suite = "all", orientation = "standard";
  long max_weight = 4;

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of a basis element");
  coproduct->add_option("--algebra", algebra, algebras)->capture_default_str();
  coproduct->add_option("--input", input, "Tree, forest, word or composition")->required();

  auto* antipode = app.add_subcommand("antipode", "Antipode of a basis element");
  antipode->add_option("--algebra", algebra, algebras)->capture_default_str();
  antipode->add_option("--input", input, "Tree, forest, word or composition")->required();

  auto* product = app.add_subcommand("product", "Product of two basis elements");
  product->add_option("--algebra", algebra, algebras)->capture_default_str();
  product->add_option("--left", left, "Left factor")->required();
  product->add_option("--right", right, "Right factor")->required();

  auto* pi = app.add_subcommand("pi", "Linear-extension words of a labeled forest");
  pi->add_option("--input", input, "Labeled forest, e.g. \"f2[f1] f1\"")->required();

  auto* lyndon = app.add_subcommand("lyndon", "Lyndon words by weight");
  lyndon->add_option("--max-weight", max_weight, "Largest weight")->capture_default_str();

  auto* hall = app.add_subcommand("hall", "Hall trees, standard decompositions and Hall polynomials");
  hall->add_option("--max-weight", max_weight, "Largest weight")->capture_default_str();
  hall->add_option("--orientation", orientation, "standard|flipped")->capture_default_str();

  auto* zhao = app.add_subcommand("zhao", "Zhao's homomorphism and its dual");
  std::string k, eps, zword, forest;
  auto* zopts = zhao->add_option_group("input");
  zopts->add_option("--k", k, "k_n for this n");
  zopts->add_option("--eps", eps, "eps_n for this n");
  zopts->add_option("--word", zword, "Z of an NSYM word, e.g. z1z2");
  zopts->add_option("--forest", forest, "Z* of a forest");
  zopts->require_option(1);

  auto* frame = app.add_subcommand("frame", "Truncated universal singular frame");
  frame->add_option("--max-weight", max_weight, "Largest weight")->capture_default_str();
  frame->add_option("--format", format, "json|text")->capture_default_str();

  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("--suite", suite, "hopf-axioms|duality|pi-kernel|diagrams|prop53|all")->capture_default_str();
  check->add_option("--max-weight", max_weight, "Bound for the probes")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::unique_ptr<hopf_context, decltype(&hopf_context_free)> ctx(hopf_context_new(), hopf_context_free);
  if (!ctx) {
    std::fprintf(stderr, "error: out of memory\n");
    return 1;
  }
  hopf_context* c = ctx.get();
  const char* a = algebra.c_str();

  if (*coproduct) return finish(c, hopf_coproduct(c, a, input.c_str()));
  if (*antipode) return finish(c, hopf_antipode(c, a, input.c_str()));
  if (*product) return finish(c, hopf_product(c, a, left.c_str(), right.c_str()));
  if (*pi) return finish(c, hopf_pi(c, input.c_str()));
  if (*lyndon) return finish(c, hopf_lyndon(c, max_weight));
  if (*hall) return finish(c, hopf_hall(c, max_weight, orientation.c_str()));
  if (*zhao) {
    if (!k.empty()) return finish(c, hopf_zhao(c, "k", k.c_str()));
    if (!eps.empty()) return finish(c, hopf_zhao(c, "eps", eps.c_str()));
    if (!zword.empty()) return finish(c, hopf_zhao(c, "Z", zword.c_str()));
    return finish(c, hopf_zhao(c, "Zstar", forest.c_str()));
  }
  if (*frame) return finish(c, hopf_frame(c, max_weight, format.c_str()));
  if (*check) return finish(c, hopf_check(c, suite.c_str(), max_weight));
  return 2;
}
