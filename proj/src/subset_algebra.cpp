#include "smallhyper/subset_algebra.hpp"

namespace smallhyper {

SubsetAlgebra subset_algebra(const HyperTable& t, bool associative) {
  SubsetAlgebra s;
  s.carrier_n = t.size();
  s.associative = associative;
  s.product = [t](const Subset& a, const Subset& b) { return star(t, a, b); };
  return s;
}

SubsetAlgebra subset_algebra(const HyperTable& t) {
  return subset_algebra(t, is_hypersemigroup(t).ok);
}

SubsetAlgebra subset_algebra(const GammaTable& t, bool associative) {
  SubsetAlgebra s;
  s.carrier_n = t.size();
  s.associative = associative;
  s.product = [t](const Subset& a, const Subset& b) {
    return gamma_product(t, a, b);
  };
  return s;
}

SubsetAlgebra subset_algebra(const GammaTable& t) {
  return subset_algebra(t, is_gamma_semigroup(t).ok);
}

}  // namespace smallhyper
