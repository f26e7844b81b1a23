// Walks through the field calculus on F_{2^12} and its brute-force twin.

#include <iostream>

#include "steinitz/steinitz.hpp"

using namespace steinitz;

int main() {
  auto e = parse_field("char=2; 2^2,3");
  std::cout << "E = " << render(e) << "\n";
  std::cout << "maximal subrings: " << rgmax_count(e).to_string() << "\n";
  for (const auto& m : rgmax_list(e)) std::cout << "  " << render(m) << "\n";

  auto report = chain_stats(e, true);
  std::cout << "chains of length " << report.length << ": " << report.chain_count << "\n";
  for (const auto& chain : *report.chains) {
    for (std::size_t i = 0; i < chain.size(); ++i) std::cout << (i ? " > " : "  ") << render(chain[i].content);
    std::cout << "\n";
  }

  auto infinite = parse_field("char=2; 2^3; rest=inf");
  std::cout << "\nE' = " << render(infinite) << "\n";
  std::cout << "maximal subrings: " << rgmax_count(infinite).to_string() << "\n";
  std::cout << "L(E') = " << render(largest_nonsubmaximal(infinite)) << "\n";

  auto cmp = predict_and_compare({Family::Gf, 2, 12});
  std::cout << "\ngf(2,12): predicted " << cmp.predicted.size() << ", observed " << cmp.observed.size()
            << (cmp.match() ? ", match\n" : ", MISMATCH\n");
  return cmp.match() ? 0 : 1;
}
