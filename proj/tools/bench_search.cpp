// Compares the serial and OpenMP subset-search paths on the sl2
// Cartan-Dirac triple and checks that the merged outputs agree.
#include <chrono>
#include <iostream>
#include <random>

#include "dirac/catalog.hpp"
#include "dirac/homogeneous.hpp"

using namespace dirac;

int main(int argc, char** argv) {
  std::size_t n_candidates = argc > 1 ? std::stoul(argv[1]) : 14;
  DiracManinTriple t = fixture_sl2_cartan_dirac();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-2, 2);

  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < t.g.dim(); ++i) candidates.push_back(t.g.basis_vector(i));
  while (candidates.size() < n_candidates) {
    Vec v(6);
    for (auto& x : v) x = coef(rng);
    candidates.push_back(v);
  }

  SearchConstraints cons;
  cons.k = Subspace::zero(6);

  auto time = [&](auto&& fn, const char* name) {
    auto t0 = std::chrono::steady_clock::now();
    auto result = fn();
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << name << ": " << result.size() << " subspaces in " << ms << " ms\n";
    return result;
  };

  auto serial = time([&] { return search_coisotropic_serial(t, candidates, cons); }, "serial");
  auto parallel =
      time([&] { return search_coisotropic_parallel(t, candidates, cons); }, "parallel");
  if (serial != parallel) {
    std::cerr << "MISMATCH between serial and parallel search\n";
    return 1;
  }
  std::cout << "outputs identical\n";
  return 0;
}
