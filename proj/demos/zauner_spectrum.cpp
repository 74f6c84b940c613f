// Eigenspace dimensions of the Zauner unitary and of its cube roots.

#include <cstdio>

#include "gcl/gcl.hpp"

int main() {
  for (std::uint32_t d : {5u, 7u, 9u, 11u, 13u, 25u}) {
    const gcl::GaloisField& f = gcl::make_field_of_size(d);
    const gcl::Context ctx = gcl::Context::make(f, {3});
    const gcl::SympMatrix F = gcl::zauner_matrix(f);
    const auto dims = gcl::eigenspace_dims(ctx, F, 3);
    std::printf("d=%-3u Tr U_F = %-24s dims = (%lld, %lld, %lld)\n", d, gcl::trace_closed_form(ctx, F).str().c_str(),
                static_cast<long long>(dims[0]), static_cast<long long>(dims[1]), static_cast<long long>(dims[2]));
  }

  std::printf("\ncube roots G with G^{2m} = F and ord G = 6m\n");
  for (std::uint32_t d : {5u, 7u, 11u, 13u, 17u, 19u}) {
    const gcl::SicBasisReport rep = d % 6 == 1 ? gcl::type1_sic_basis(d) : gcl::sic_subspace_bases(d);
    std::printf("d=%-3u %s G = %-22s grouped dims = (%lld, %lld, %lld) checks %s\n", d, rep.branch.c_str(), rep.G.str().c_str(),
                static_cast<long long>(rep.subspace_dims[0]), static_cast<long long>(rep.subspace_dims[1]),
                static_cast<long long>(rep.subspace_dims[2]), rep.exact_checks ? "ok" : "FAILED");
  }
  return 0;
}
