// Wall-clock comparison of the OpenMP kernels against their serial references.
//
//   ice-schur-bench [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include "iceschur/schur.hpp"

namespace {

using namespace iceschur;

double seconds(const std::function<Polynomial()>& fn, int repeats, Polynomial& out) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) out = fn();
  const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  return d.count() / repeats;
}

void row(const std::string& name, const std::function<Polynomial()>& parallel,
         const std::function<Polynomial()>& serial, int repeats) {
  Polynomial a = parallel(), b = serial();  // warm caches and the thread pool
  const double tp = seconds(parallel, repeats, a);
  const double ts = seconds(serial, repeats, b);
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(10) << ts << std::setw(10) << tp << std::setw(8) << std::setprecision(2)
            << (tp > 0 ? ts / tp : 0.0) << "  " << (a == b ? "agree" : "MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::cout << "threads: " << omp_get_max_threads() << ", repeats: " << repeats << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial"
            << std::setw(10) << "omp" << std::setw(8) << "ratio" << "\n";

  const Partition lam({3, 2, 1});
  const LatticeSystem sys = build_system(lam, 3, WeightTable::gamma(std::nullopt));
  row("partition_function (3,2,1) n=3", [&] { return partition_function(sys); },
      [&] { return partition_function_serial(sys); }, repeats);

  const LatticeSystem sys4 = build_system(Partition({2, 1}), 4, WeightTable::gamma(std::nullopt));
  row("partition_function (2,1) n=4", [&] { return partition_function(sys4); },
      [&] { return partition_function_serial(sys4); }, repeats);

  const std::vector<int> mu = {7, 5, 2, 1, 0};
  row("alternant (7,5,2,1,0) n=5", [&] { return alternant(mu, 5); },
      [&] { return alternant_serial(mu, 5); }, repeats);

  const Partition big({3, 3, 2});
  row("tableau sum (3,3,2) n=4", [&] { return schur_tableau(big, 4).value; },
      [&] { return schur_tableau_serial(big, 4).value; }, repeats);
  return 0;
}
