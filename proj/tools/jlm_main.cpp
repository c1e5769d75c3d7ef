// Command line frontend: expand effective corrections, verify them against
// exact diagonalization, inspect the operator-space matrices, and render
// transition diagrams as text.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "jlm/errors.hpp"
#include "jlm/run.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::optional<int> order;
  std::optional<std::string> format;
  std::optional<std::string> out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_order) {
  cmd->add_option("--config", args.config_path, "key=value config file")->required();
  if (with_order) cmd->add_option("--order", args.order, "expansion order");
  cmd->add_option("--format", args.format, "json, csv, or text");
  cmd->add_option("--out", args.out_path, "write the report to a file");
}

jlm::RunConfig resolve(const CommonArgs& args) {
  jlm::RunConfig config = jlm::load_config(args.config_path);
  if (args.order) config.order = *args.order;
  if (args.format) config.format = *args.format;
  if (args.out_path) config.out_path = *args.out_path;
  jlm::validate(config);
  return config;
}

int run_with_output(const jlm::RunConfig& config, const auto& command) {
  if (config.out_path.empty()) return command(std::cout);
  std::ofstream file(config.out_path);
  if (!file) {
    std::cerr << "cannot open output file '" << config.out_path << "'\n";
    return 1;
  }
  return command(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transition-centric effective Hamiltonians for cavity QED"};
  app.require_subcommand(1);

  CommonArgs expand_args, verify_args, opspace_args, render_args;
  double opspace_delta = 0.0;
  bool opspace_dressed = false;
  int render_order = 0;

  CLI::App* expand = app.add_subcommand("expand", "effective correction at one order");
  add_common(expand, expand_args, true);

  CLI::App* verify = app.add_subcommand("verify", "three-photon resonance vs exact dynamics");
  add_common(verify, verify_args, false);

  CLI::App* opspace = app.add_subcommand("opspace", "operator-space matrices and projector");
  add_common(opspace, opspace_args, false);
  opspace->add_option("--delta", opspace_delta, "one-photon detuning Δ = ω_c − ω_e");
  opspace->add_flag("--dressed", opspace_dressed, "use the dressed basis with π");

  CLI::App* render = app.add_subcommand("render", "text diagrams for one order");
  add_common(render, render_args, false);
  CLI::Option* render_order_opt =
      render->add_option("--order", render_order, "diagram order (0..6)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed()) {
      const jlm::RunConfig config = resolve(expand_args);
      return run_with_output(config, [&](std::ostream& out) {
        return jlm::cmd_expand(config, out, std::cerr);
      });
    }
    if (verify->parsed()) {
      const jlm::RunConfig config = resolve(verify_args);
      return run_with_output(config, [&](std::ostream& out) {
        return jlm::cmd_verify(config, out, std::cerr);
      });
    }
    if (opspace->parsed()) {
      const jlm::RunConfig config = resolve(opspace_args);
      return run_with_output(config, [&](std::ostream& out) {
        return jlm::cmd_opspace(config, opspace_delta, opspace_dressed, out, std::cerr);
      });
    }
    const jlm::RunConfig config = resolve(render_args);
    const int order = render_order_opt->count() > 0 ? render_order : config.order;
    return run_with_output(config, [&](std::ostream& out) {
      return jlm::cmd_render(config, order, out, std::cerr);
    });
  } catch (const jlm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const jlm::DegenerateDetunings& e) {
    std::cerr << "degenerate detunings: " << e.what() << "\n";
    return 2;
  } catch (const jlm::ZeroDetuning& e) {
    std::cerr << "zero detuning: " << e.what() << "\n";
    return 2;
  } catch (const jlm::LeakageExceeded& e) {
    std::cerr << "numerical validity: " << e.what() << "\n";
    return 3;
  } catch (const jlm::NoPeak& e) {
    std::cerr << "numerical validity: " << e.what() << "\n";
    return 3;
  } catch (const jlm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
