// Prints alpha at the half-integer masses for both families, in closed form
// where one is found and numerically by root finding on the mass relation.

#include <cstdio>

#include "monopole/algebraic.hpp"
#include "monopole/cohomology.hpp"

using namespace monopole;

int main() {
  for (PlatonicGroup g : {PlatonicGroup::Tetrahedral, PlatonicGroup::Octahedral}) {
    std::printf("%s (k = %d)\n", group_name(g).c_str(), charge(g));
    std::printf("  %-5s %-22s %-18s %s\n", "m", "closed form", "alpha", "from mass relation");
    for (int r = 1; r <= 3; ++r) {
      const HalfIntegerAlpha h = half_integer_alpha(g, r);
      const auto mp = minimal_polynomial(IntegerPolynomial(primitive_integer_coefficients(h.new_factor)), h.alpha);
      const std::string form = mp ? closed_form(*mp, h.alpha).value_or(to_string(*mp)) : "?";
      std::printf("  %-5s %-22s %-18.15f %.15f\n", r % 2 ? (std::to_string(r) + "/2").c_str() : std::to_string(r / 2).c_str(),
                  form.c_str(), h.alpha, h.numeric_alpha);
    }
  }
  return 0;
}
