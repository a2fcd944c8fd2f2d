// rindler_sweep: entanglement measures of the helicity and number Bell states
// seen by an accelerated observer, swept over q or acceleration grids.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical contract
// violation, 4 I/O failure.

#include <iostream>
#include <string>
#include <vector>

#include "rindler/error.hpp"
#include "rindler/sweep.hpp"

namespace {

constexpr const char* kUsage = R"(usage: rindler_sweep [options]

  --family {helicity|number}   state shared by Alice and Bob (default helicity)
  --q a,b,c                    grid of q = exp(-pi E / a) values in (0, 1)
  --energy E --accel a,b,c     grid of accelerations at fixed detector energy
  --tol T                      truncation tolerance (default 1e-12)
  --n-max N                    fixed Fock cutoff instead of --tol
  --out PATH                   output file (default stdout)
  --format {csv|json}          output format (default csv)
  --config PATH                key=value defaults; flags take precedence
)";

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const auto& a : args) {
    if (a == "--help" || a == "-h") {
      std::cout << kUsage;
      return 0;
    }
  }
  try {
    const auto cfg = rindler::sweep::parse_args(args);
    const auto rows = rindler::sweep::run_sweep(cfg);
    rindler::sweep::write_rows(cfg, rows, std::cout);
  } catch (const rindler::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsage;
    return 2;
  } catch (const rindler::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const rindler::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 4;
  } catch (const rindler::Error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
