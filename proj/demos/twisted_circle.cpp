// Walks a family of characters on a triangulated circle and prints the
// twisted Betti numbers: both vanish for every holonomy t != 1 and jump to
// the ordinary circle cohomology exactly at t = 1.

#include <cstdio>
#include <vector>

#include "mnlck/triangulations.hpp"
#include "mnlck/twisted.hpp"

int main() {
  using mnlck::Rational;
  const int m = 12;
  const auto circle = mnlck::circle_complex(m);
  const int closing = circle.index_of({0, m - 1});

  std::printf("twisted cohomology of a %d-vertex circle, holonomy t on one edge\n\n", m);
  std::printf("%10s %6s %6s\n", "t", "b^0", "b^1");
  const std::vector<Rational> values = {Rational(1, 3), Rational(1, 2), Rational(9, 10),
                                        Rational(1),    Rational(11, 10), Rational(2),
                                        Rational(3)};
  for (const Rational& t : values) {
    std::vector<Rational> weights(static_cast<std::size_t>(circle.count(1)), Rational(1));
    weights[static_cast<std::size_t>(closing)] = t;
    const auto result =
        mnlck::twisted_betti(mnlck::assemble_twisted(circle, mnlck::make_lee(circle, weights)));
    std::printf("%10s %6lld %6lld\n", mnlck::to_string(t).c_str(), result.betti[0],
                result.betti[1]);
  }
  std::printf("\nonly the unit character sees the topology; every other fibre is acyclic\n");
  return 0;
}
