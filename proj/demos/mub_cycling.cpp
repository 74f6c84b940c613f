// Cycling and half-cycling elements of ESL(2, F_d) acting on the d+1 MUB labels.

#include <cstdio>

#include "gcl/gcl.hpp"

int main() {
  for (std::uint32_t d : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const gcl::GaloisField& f = gcl::make_field_of_size(d);
    const gcl::QuadraticExtension& ext = gcl::QuadraticExtension::of(f);
    std::uint64_t cyc[2] = {0, 0}, half[2] = {0, 0}, agree = 0, total = 0;
    for (const auto& F : gcl::all_esl(f)) {
      const int anti = F.det() == -1;
      const bool c = gcl::is_cycling(F), h = gcl::is_half_cycling(F);
      cyc[anti] += c;
      half[anti] += h;
      agree += c == gcl::is_cycling_by_trace(ext, F) && h == gcl::is_half_cycling_by_trace(ext, F);
      ++total;
    }
    const gcl::SympMatrix A = gcl::canonical_A(ext);
    std::printf("d=%-3u cyclers sym/anti %llu/%-4llu half-cyclers sym/anti %llu/%-4llu trace criteria %llu/%llu  A=%s orbits:",
                d, static_cast<unsigned long long>(cyc[0]), static_cast<unsigned long long>(cyc[1]),
                static_cast<unsigned long long>(half[0]), static_cast<unsigned long long>(half[1]),
                static_cast<unsigned long long>(agree), static_cast<unsigned long long>(total), A.str().c_str());
    for (auto len : gcl::mub_orbits(A)) std::printf(" %llu", static_cast<unsigned long long>(len));
    std::printf("\n");
  }
  return 0;
}
