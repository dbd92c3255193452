#pragma once

#include <string>
#include <vector>

#include "smallhyper/hyper_table.hpp"
#include "smallhyper/subset.hpp"
#include "smallhyper/subset_algebra.hpp"

namespace smallhyper {

enum class IdealKind {
  LeftIdeal,
  RightIdeal,
  TwoSidedIdeal,
  BiIdeal,
  Subsemigroup,
  SubidempotentBiIdeal,
};

/// "left", "bi", "subidempotent-bi", ... as used by the CLI.
std::string ideal_kind_name(IdealKind kind);

/// A·A ⊆ A.
bool is_subsemigroup(const SubsetAlgebra& s, const Subset& a);

/// Full·A ⊆ A.
bool is_left_ideal(const SubsetAlgebra& s, const Subset& a);

/// A·Full ⊆ A.
bool is_right_ideal(const SubsetAlgebra& s, const Subset& a);

/// Left and right ideal at once.
bool is_two_sided_ideal(const SubsetAlgebra& s, const Subset& a);

/// B·Full·B ⊆ B. Requires an associative algebra (the triple product must
/// be unambiguous).
bool is_bi_ideal(const SubsetAlgebra& s, const Subset& b);

/// Bi-ideal that is also a subsemigroup.
bool is_subidempotent_bi_ideal(const SubsetAlgebra& s, const Subset& b);

/// {b} ∪ Full·{b}; on associative algebras this is the least left ideal
/// containing b. Requires the associativity flag.
Subset principal_left_ideal(const SubsetAlgebra& s, int b);

/// {b} ∪ {b}·Full, mirror of principal_left_ideal.
Subset principal_right_ideal(const SubsetAlgebra& s, int b);

/// All nonempty subsets satisfying the kind's predicate, in ascending
/// bit-vector order. Bi-ideal kinds require associativity.
std::vector<Subset> enumerate_ideals(const SubsetAlgebra& s, IdealKind kind);

/// No proper left ideal exists (decided by exhaustive enumeration; this is
/// the ground truth the criterion forms are checked against).
bool is_left_simple(const SubsetAlgebra& s);
bool is_right_simple(const SubsetAlgebra& s);

/// Full·{a} = Full for every a. A sufficient condition for left
/// simplicity on any algebra; equivalent to it on associative ones.
bool left_simple_criterion(const SubsetAlgebra& s);
bool right_simple_criterion(const SubsetAlgebra& s);

/// a ∈ {a}·Full·{a} for every a. Requires associativity.
bool is_regular(const SubsetAlgebra& s);

/// A ⊆ A·Full·A for every nonempty A, by exhaustive scan. Requires
/// associativity; agrees with is_regular there.
bool is_regular_subset_form(const SubsetAlgebra& s);

/// Hypergroupoid-level regularity: for every a some x satisfies
/// a ∈ (a∘x)*{a} or a ∈ {a}*(x∘a). Needs no associativity; on
/// hypersemigroups both disjuncts coincide and this agrees with
/// is_regular.
bool is_regular_hypergroupoid_form(const HyperTable& t);

}  // namespace smallhyper
