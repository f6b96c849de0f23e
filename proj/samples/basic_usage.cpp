// Builds E8, prints a few invariants and checks the tau-partition sizes.

#include <iostream>

#include <rootposet/grading.hpp>
#include <rootposet/ideals.hpp>
#include <rootposet/root_system.hpp>

int main()
{
  using namespace rootposet;
  RootSystem e8 = build(RootSystemType::parse("E8"));
  std::cout << e8.name() << ": " << e8.size() << " positive roots, h=" << e8.coxeter()
            << ", h*=" << e8.dual_coxeter() << "\n";
  std::cout << "theta = " << format_coeffs(e8.coeffs(e8.theta())) << " (Bourbaki numbering)\n";

  auto abelian = enumerate_abelian(e8);
  std::cout << abelian.size() << " abelian ideals, " << heisenberg(e8).size() << " roots in the Heisenberg ideal\n";

  auto part = tau_partition(e8, abelian);
  for (auto const &[alpha, ideal] : maximal_abelian_ideals(e8, part, abelian))
    std::cout << "  I(alpha_" << alpha + 1 << ")_max has " << ideal.size() << " roots\n";

  for (int a : odd_roots(e8))
    std::cout << "odd simple root alpha_" << a + 1 << "\n";
}
