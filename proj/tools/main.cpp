#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pargeo/verify.hpp"

namespace {

struct Options {
  std::string descriptor_path;
  std::string output;  // empty means "use the descriptor's choice"
  std::uint64_t seed = 12345;
  bool seed_given = false;
};

void emit(const pargeo::Report& rep, const std::string& output, std::uint64_t seed,
          const std::string& echo) {
  if (output == "json")
    std::cout << pargeo::report_json(rep, seed, echo);
  else
    std::cout << pargeo::report_text(rep, seed);
}

int run_descriptor_stage(const Options& opt, pargeo::Stage stage) {
  std::ifstream in(opt.descriptor_path);
  std::stringstream buf;
  buf << in.rdbuf();
  pargeo::RunDescriptor d;
  try {
    d = pargeo::parse_run_descriptor(buf.str());
  } catch (const pargeo::descriptor_error& e) {
    std::cerr << "pargeo: " << e.what() << "\n";
    return 2;
  }
  std::uint64_t seed = opt.seed_given ? opt.seed : d.seed.value_or(opt.seed);
  std::string output = !opt.output.empty() ? opt.output : d.output;
  pargeo::Report rep = pargeo::run_pipeline(d, stage, seed);
  emit(rep, output, seed, d.echo);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for graded parabolic model fibres"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_descriptor) {
    if (needs_descriptor)
      sub->add_option("--descriptor", opt.descriptor_path, "JSON descriptor file")
          ->required()
          ->check(CLI::ExistingFile);
    sub->add_option("--output", opt.output, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opt.seed, "seed for sampled checks (default 12345)")
        ->each([&](const std::string&) { opt.seed_given = true; });
  };

  struct Verb {
    const char* name;
    const char* help;
    pargeo::Stage stage;
  };
  const Verb verbs[] = {
      {"algebra", "construct the algebra and verify its structure", pargeo::Stage::algebra},
      {"grade", "grade the algebra and its module, bound the ranks", pargeo::Stage::grade},
      {"cotrans", "measure the cotransitivity degree of the module action", pargeo::Stage::cotrans},
      {"involution", "build and verify the candidate involution", pargeo::Stage::involution},
      {"einstein", "run the gate and the full extraction clause suite", pargeo::Stage::einstein},
      {"cone", "check a cone decomposition and its connection table", pargeo::Stage::cone},
  };
  for (const Verb& v : verbs) add_common(app.add_subcommand(v.name, v.help), true);
  add_common(app.add_subcommand("verify-paper", "run the anchored batch suite over the catalog"),
             false);

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  if (sub->get_name() == "verify-paper") {
    pargeo::Report rep = pargeo::verify_paper(opt.seed);
    emit(rep, opt.output.empty() ? "text" : opt.output, opt.seed, "");
    return rep.ok() ? 0 : 1;
  }
  for (const Verb& v : verbs)
    if (sub->get_name() == v.name) return run_descriptor_stage(opt, v.stage);
  return 2;  // unreachable: require_subcommand guarantees a match
}
