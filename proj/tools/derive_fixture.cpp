// Writes derived fixture files to stdout.
//   derive_fixture shared-factor --seed N      unit coefficients with a shared quadratic factor
//   derive_fixture delta1-ideal FILE           the delta1 intersection ideal of a coefficient instance

#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "localmult/families.hpp"
#include "localmult/instance.hpp"
#include "localmult/verify.hpp"

using namespace localmult;

namespace {

void print_coefficients(const SingularityCoefficients& c) {
  for (int i = 1; i <= 10; ++i) std::cout << "a" << i << " = " << c(i).to_string() << ";\n";
  std::cout << "m = " << c.m_index << ";\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived fixture generator"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  auto* shared = app.add_subcommand("shared-factor", "Coefficient instance whose quadratic parts share a factor");
  shared->add_option("--seed", seed);
  std::string file;
  auto* d1 = app.add_subcommand("delta1-ideal", "Ideal file for the delta1 intersection of an instance");
  d1->add_option("file", file)->required();
  CLI11_PARSE(app, argc, argv);

  try {
    if (*shared) {
      std::mt19937_64 rng = record_stream(seed, 0);
      SingularityCoefficients c = shared_factor_coefficients(rng, 1);
      Classification cls = classify(g_system_from_coefficients(c));
      std::cout << "# DERIVED: derive_fixture shared-factor --seed " << seed << "\n"
                << "# Unit coefficients with a8(0) = a10(0) a4(0) and a1(0) = a3(0) a4(0): the quadratic\n"
                << "# parts of g1, g2, g3 share the factor theta0 but the lengths are not (4, 6).\n"
                << "ring P[t, theta0, y] local;\n";
      print_coefficients(c);
      std::cout << "expect_verdict = " << to_string(cls.verdict) << ";\n";
      if (cls.length_r1 && cls.length_r2)
        std::cout << "expect_L = "
                  << static_cast<std::int64_t>(*cls.length_r2) - static_cast<std::int64_t>(*cls.length_r1) << ";\n";
    } else {
      Instance inst = parse_instance(read_text_file(file));
      if (!inst.coefficients) throw std::invalid_argument("delta1-ideal needs a coefficient instance");
      Ideal I = delta1_ideal(*inst.coefficients);
      std::cout << "# DERIVED: derive_fixture delta1-ideal " << file << "\n"
                << "ring P[t, theta0, y] local;\n"
                << "ideal delta1 = ";
      for (std::size_t k = 0; k < I.generators().size(); ++k)
        std::cout << (k ? ",\n  " : "") << I.generators()[k].to_string();
      std::cout << ";\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
