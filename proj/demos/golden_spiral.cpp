// Classifies a few aspect ratios and writes two figures: the Fibonacci
// rectangle 233 x 377 and the first 12 squares of the golden rectangle.
//
//   golden_spiral [output-dir]

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fibrect/fibrect.hpp"

using namespace fibrect;

namespace {

template <ExactScalar S>
void report(const std::string& label, const RectState<S>& r) {
  const Classification c = classify(r);
  std::cout << label << " (l/w = " << to_decimal_string(r.l() / r.w(), 8) << "): ";
  if (c.is_golden())
    std::cout << "squares shrink forever\n";
  else
    std::cout << "breaks at step " << c.step << " (" << to_string(c.mode) << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : ".";

  report("golden", RectState<QuadraticNumber>(1, QuadraticNumber::phi()));
  report("13/8", RectState<Rational>(8, 13));
  report("987/610", RectState<Rational>(610, 987));
  report("sqrt5 - 1/2", RectState<QuadraticNumber>(1, {Rational(-1, 2), Rational(1)}));

  std::ofstream(dir / "fibonacci_233x377.svg") << to_svg(fibonacci_tiling(12), {2, "default", 1});
  const auto prefix = pave_prefix(RectState<QuadraticNumber>(1, QuadraticNumber::phi()), 12);
  std::ofstream(dir / "golden_prefix.svg") << to_svg(prefix, {600, "pastel", 1});
  std::cout << "wrote " << (dir / "fibonacci_233x377.svg").string() << " and "
            << (dir / "golden_prefix.svg").string() << "\n";
}
