#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qfock/fock.hpp"

using namespace qfock::cli;

namespace {

void add_datum_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--type", cfg.type, "Dynkin family: A, D or E")->check(CLI::IsMember({"A", "D", "E", "a", "d", "e"}));
  cmd->add_option("--rank", cfg.rank, "Rank n")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qfock: vertex-operator Fock modules of quantum affine algebras, exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string out_path;
  bool human = false;
  app.add_option("--out", out_path, "Write records to a file instead of stdout");
  auto* json_flag = app.add_flag("--json", "JSON-lines output (default)");
  app.add_flag("--human", human, "Aligned text output")->excludes(json_flag);

  auto* rootdata = app.add_subcommand("rootdata", "Root datum, det[A] and its closed forms; --l adds a nonvanishing scan");
  add_datum_options(rootdata, cfg);
  rootdata->add_option("--l", cfg.l, "Order of the root of unity")->check(CLI::NonNegativeNumber);

  auto* act = app.add_subcommand("act", "Apply operators to a state");
  add_datum_options(act, cfg);
  act->add_option("--op", cfg.ops, "Operator, e.g. \"x+ i=1 n=-1 r=2\"; repeat to compose, first applied first");
  act->add_option("--state", cfg.state, "State, e.g. \"(q+q^-1)*{1:[2]} @ eta=[1]\"; default vacuum");

  auto* character = app.add_subcommand("character", "Weight multiplicities up to --depth");
  add_datum_options(character, cfg);
  character->add_option("--depth", cfg.depth, "Largest energy")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "id | rfact | det | drinfeld | product | lattice | r1 | character")
      ->required()
      ->check(CLI::IsMember({"id", "rfact", "det", "drinfeld", "product", "lattice", "r1", "character"}));
  add_datum_options(verify, cfg);
  verify->add_option("--depth", cfg.depth, "Largest energy of basis vectors")->check(CLI::NonNegativeNumber);
  verify->add_option("--r,--rmax", cfg.rmax, "Largest r (product size, divided power or Heisenberg mode)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--smax", cfg.smax, "Largest |s| for vertex-operator modes")->check(CLI::NonNegativeNumber);
  verify->add_option("--nmax", cfg.nmax, "Largest |n| for modes")->check(CLI::NonNegativeNumber);
  verify->add_option("--range", cfg.range, "Coordinate bound for eta")->check(CLI::NonNegativeNumber);
  verify->add_option("--degree", cfg.degree, "Largest degree of symmetric G")->check(CLI::NonNegativeNumber);
  verify->add_option("--lmax", cfg.lmax, "Largest l in the nonvanishing scan")->check(CLI::PositiveNumber);

  auto* rou = app.add_subcommand("rootofunity", "Specialization at a primitive l-th root of unity");
  rou->add_option("action", cfg.action, "irreducible | kernel | search | dual | scan")
      ->required()
      ->check(CLI::IsMember({"irreducible", "kernel", "search", "dual", "scan"}));
  add_datum_options(rou, cfg);
  rou->add_option("--l", cfg.l, "Order of the root of unity (0: generic q, kernel only)")->check(CLI::NonNegativeNumber);
  rou->add_option("--depth", cfg.depth, "Largest energy")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return 2;
    }
  }
  Emitter out(out_path.empty() ? std::cout : file, human);

  try {
    if (rootdata->parsed()) return cmd_rootdata(cfg, out);
    if (act->parsed()) return cmd_act(cfg, out);
    if (character->parsed()) return cmd_character(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_rootofunity(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const qfock::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const qfock::LatticeViolation& e) {
    std::cerr << "lattice violation: " << e.what() << '\n';
    return 1;
  }
}
