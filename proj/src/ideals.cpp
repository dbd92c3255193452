#include "smallhyper/ideals.hpp"

#include <stdexcept>

namespace smallhyper {

namespace {

void require_nonempty(const Subset& a, const char* what) {
  if (a.is_empty()) {
    throw std::domain_error(std::string(what) +
                            " is defined on nonempty subsets only");
  }
}

void require_associative(const SubsetAlgebra& s, const char* what) {
  if (!s.associative) {
    throw std::invalid_argument(std::string(what) +
                                " requires an associative algebra");
  }
}

}  // namespace

std::string ideal_kind_name(IdealKind kind) {
  switch (kind) {
    case IdealKind::LeftIdeal: return "left";
    case IdealKind::RightIdeal: return "right";
    case IdealKind::TwoSidedIdeal: return "two-sided";
    case IdealKind::BiIdeal: return "bi";
    case IdealKind::Subsemigroup: return "subsemigroup";
    case IdealKind::SubidempotentBiIdeal: return "subidempotent-bi";
  }
  return "?";
}

bool is_subsemigroup(const SubsetAlgebra& s, const Subset& a) {
  require_nonempty(a, "is_subsemigroup");
  return s.product(a, a).is_subset_of(a);
}

bool is_left_ideal(const SubsetAlgebra& s, const Subset& a) {
  require_nonempty(a, "is_left_ideal");
  return s.product(s.full(), a).is_subset_of(a);
}

bool is_right_ideal(const SubsetAlgebra& s, const Subset& a) {
  require_nonempty(a, "is_right_ideal");
  return s.product(a, s.full()).is_subset_of(a);
}

bool is_two_sided_ideal(const SubsetAlgebra& s, const Subset& a) {
  return is_left_ideal(s, a) && is_right_ideal(s, a);
}

bool is_bi_ideal(const SubsetAlgebra& s, const Subset& b) {
  require_nonempty(b, "is_bi_ideal");
  require_associative(s, "is_bi_ideal");
  return s.product(s.product(b, s.full()), b).is_subset_of(b);
}

bool is_subidempotent_bi_ideal(const SubsetAlgebra& s, const Subset& b) {
  return is_bi_ideal(s, b) && is_subsemigroup(s, b);
}

Subset principal_left_ideal(const SubsetAlgebra& s, int b) {
  require_associative(s, "principal_left_ideal");
  const Subset single = Subset::singleton(s.carrier(), b);
  return single | s.product(s.full(), single);
}

Subset principal_right_ideal(const SubsetAlgebra& s, int b) {
  require_associative(s, "principal_right_ideal");
  const Subset single = Subset::singleton(s.carrier(), b);
  return single | s.product(single, s.full());
}

std::vector<Subset> enumerate_ideals(const SubsetAlgebra& s, IdealKind kind) {
  std::vector<Subset> out;
  for (const Subset a : enumerate_nonempty_subsets(s.carrier())) {
    bool keep = false;
    switch (kind) {
      case IdealKind::LeftIdeal: keep = is_left_ideal(s, a); break;
      case IdealKind::RightIdeal: keep = is_right_ideal(s, a); break;
      case IdealKind::TwoSidedIdeal: keep = is_two_sided_ideal(s, a); break;
      case IdealKind::BiIdeal: keep = is_bi_ideal(s, a); break;
      case IdealKind::Subsemigroup: keep = is_subsemigroup(s, a); break;
      case IdealKind::SubidempotentBiIdeal:
        keep = is_subidempotent_bi_ideal(s, a);
        break;
    }
    if (keep) out.push_back(a);
  }
  return out;
}

bool is_left_simple(const SubsetAlgebra& s) {
  for (const Subset a : enumerate_nonempty_subsets(s.carrier())) {
    if (!a.is_full() && is_left_ideal(s, a)) return false;
  }
  return true;
}

bool is_right_simple(const SubsetAlgebra& s) {
  for (const Subset a : enumerate_nonempty_subsets(s.carrier())) {
    if (!a.is_full() && is_right_ideal(s, a)) return false;
  }
  return true;
}

bool left_simple_criterion(const SubsetAlgebra& s) {
  const Subset full = s.full();
  for (int a = 0; a < s.carrier_n; ++a) {
    if (s.product(full, Subset::singleton(s.carrier(), a)) != full) {
      return false;
    }
  }
  return true;
}

bool right_simple_criterion(const SubsetAlgebra& s) {
  const Subset full = s.full();
  for (int a = 0; a < s.carrier_n; ++a) {
    if (s.product(Subset::singleton(s.carrier(), a), full) != full) {
      return false;
    }
  }
  return true;
}

bool is_regular(const SubsetAlgebra& s) {
  require_associative(s, "is_regular");
  const Subset full = s.full();
  for (int a = 0; a < s.carrier_n; ++a) {
    const Subset single = Subset::singleton(s.carrier(), a);
    if (!s.product(s.product(single, full), single).contains(a)) return false;
  }
  return true;
}

bool is_regular_subset_form(const SubsetAlgebra& s) {
  require_associative(s, "is_regular_subset_form");
  const Subset full = s.full();
  for (const Subset a : enumerate_nonempty_subsets(s.carrier())) {
    if (!a.is_subset_of(s.product(s.product(a, full), a))) return false;
  }
  return true;
}

bool is_regular_hypergroupoid_form(const HyperTable& t) {
  const int n = t.size();
  for (int a = 0; a < n; ++a) {
    const Subset single = Subset::singleton(t.carrier(), a);
    bool found = false;
    for (int x = 0; x < n && !found; ++x) {
      found = star(t, t.cell(a, x), single).contains(a) ||
              star(t, single, t.cell(x, a)).contains(a);
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace smallhyper
