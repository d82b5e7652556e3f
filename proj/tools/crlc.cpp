#include <cstdio>
#include <string>
#include <vector>

#include "crlc/cli.hpp"

namespace {

const char* kUsage = R"usage(crlc - exact verification and classification of CR maps into the
light-cone tube model

usage: crlc <command> [args]

commands:
  catalog [name]          list catalog maps, or print one
  verify <name> [...]     check the mapping equation (exact or series)
  classify <name>         five-way classification of a germ
  ahlfors <name>          Ahlfors tensor value
  compose <f> <g> [...]   compose catalog maps left to right
  jet <name>              weighted Taylor expansion about the center
  replicate <check>       re-run a derivation check:
                          segre1 com1 holfun remeq iota2 nontrans weight3jets

common flags:
  --param k=v   map parameter (e.g. --param beta=1, --param t=1/2)
  --mode exact|series     verification mode
  --order N     weighted truncation order (default 20, env CRLC_ORDER)
  --precision B numeric backend bits (default 128, env CRLC_PRECISION)
  --at z,w      base point for classify/ahlfors
  --map FILE    read the map from a map file instead of the catalog
  --aut "stabX(a=1+1i, t=1/2, s=1/3, lambda=2)"
                verify a parametrized automorphism (stabX, stabH3, tau,
                dilL, dilM, heisT; s is the circle parameter for u)
  --all         verify the whole catalog (worker pool)
  --json        machine-readable output

exit codes: 0 pass, 1 fail, 2 usage error, 3 inconclusive
)usage";

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    std::fputs(kUsage, stdout);
    return args.empty() ? 2 : 0;
  }
  auto result = crlc::cli::run(args);
  std::fputs(result.output.c_str(), stdout);
  return result.exit_code;
}
