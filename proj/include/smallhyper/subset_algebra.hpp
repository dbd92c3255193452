#pragma once

#include <functional>

#include "smallhyper/gamma_table.hpp"
#include "smallhyper/hyper_table.hpp"
#include "smallhyper/subset.hpp"

namespace smallhyper {

/// Abstract view the ideal machinery is written against: a carrier size
/// plus a product on nonempty subsets that is the union of its pointwise
/// singleton products. Both table kinds induce such a product, so left,
/// right and bi-ideals, simplicity and regularity are implemented once.
///
/// The associativity flag is supplied by the instantiating module (it is
/// what the table deciders compute); operations whose meaning needs an
/// unambiguous triple product require it.
struct SubsetAlgebra {
  int carrier_n = 1;
  bool associative = false;
  std::function<Subset(const Subset&, const Subset&)> product;

  Carrier carrier() const { return Carrier(carrier_n); }
  Subset full() const { return Subset::full(carrier()); }
};

/// Views a hyper table as a subset algebra; decides associativity unless a
/// known flag is passed in.
SubsetAlgebra subset_algebra(const HyperTable& t);
SubsetAlgebra subset_algebra(const HyperTable& t, bool associative);

/// Views a Γ table as a subset algebra (the product is AΓB).
SubsetAlgebra subset_algebra(const GammaTable& t);
SubsetAlgebra subset_algebra(const GammaTable& t, bool associative);

}  // namespace smallhyper
