// Regenerates the shipped fixture spec files from the catalog builders.
#include <fstream>
#include <iostream>

#include "dirac/catalog.hpp"
#include "dirac/serialize.hpp"

using namespace dirac;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "tests/fixtures";
  auto put = [&](const std::string& name, const SpecFile& s) {
    std::ofstream f(dir + "/" + name, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << dir << "/" << name << "\n";
      std::exit(1);
    }
    f << write_spec(s);
    std::cout << dir << "/" << name << "\n";
  };
  put("E1.dmt.json", triple_to_spec(fixture_E1()));
  put("E2.dmt.json", triple_to_spec(fixture_E2()));
  put("E3_nonexact.dmt.json", triple_to_spec(fixture_E3_nonexact()));
  put("E4_invalid.dmt.json", triple_to_spec(fixture_E4()));
  put("sl2_cartan_dirac.dmt.json", triple_to_spec(fixture_sl2_cartan_dirac()));
  put("sl2_quasi_poisson.dmt.json", triple_to_spec(fixture_sl2_quasi_poisson()));
  put("sl2_doubled.rep.json", rep_to_spec(doubled_rep(sl2_defining_rep())));
  DiracManinTriple e2 = fixture_E2();
  put("E2_robinson.json", robinson_to_spec({e2.g, Subspace::zero(2), {}}, 2));
  return 0;
}
