#include "smallhyper/hyper_table.hpp"

#include <stdexcept>
#include <string>

namespace smallhyper {

HyperTable::HyperTable(Carrier carrier, std::vector<Subset> cells)
    : carrier_(carrier), cells_(std::move(cells)) {
  const auto n = static_cast<std::size_t>(carrier_.size());
  if (cells_.size() != n * n) {
    throw std::invalid_argument("hyper table needs " + std::to_string(n * n) +
                                " cells, got " + std::to_string(cells_.size()));
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].carrier_n() != carrier_.size()) {
      throw std::invalid_argument("hyper table cell " + std::to_string(i) +
                                  " is over a different carrier");
    }
    if (cells_[i].is_empty()) {
      throw std::invalid_argument("hyper table cell (" +
                                  std::to_string(i / n) + "," +
                                  std::to_string(i % n) + ") is empty");
    }
  }
}

void HyperTable::check_index(int i) const {
  if (i < 0 || i >= carrier_.size()) {
    throw std::out_of_range("element " + std::to_string(i) +
                            " outside carrier of size " +
                            std::to_string(carrier_.size()));
  }
}

bool operator<(const HyperTable& a, const HyperTable& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.cells_.size(); ++i) {
    if (a.cells_[i].mask() != b.cells_[i].mask()) {
      return a.cells_[i].mask() < b.cells_[i].mask();
    }
  }
  return false;
}

const Subset& hyper_product(const HyperTable& t, int a, int b) {
  return t.cell(a, b);
}

Subset star(const HyperTable& t, const Subset& a, const Subset& b) {
  if (a.carrier_n() != t.size() || b.carrier_n() != t.size()) {
    throw std::invalid_argument("star operands over a different carrier");
  }
  if (a.is_empty() || b.is_empty()) {
    throw std::domain_error("star is defined on nonempty subsets only");
  }
  mask_t acc = 0;
  for (mask_t ma = a.mask(); ma != 0; ma &= ma - 1) {
    const int x = std::countr_zero(ma);
    for (mask_t mb = b.mask(); mb != 0; mb &= mb - 1) {
      acc |= t.cell_mask(x, std::countr_zero(mb));
    }
  }
  return Subset::from_mask(t.carrier(), acc);
}

Subset star_chain(const HyperTable& t, std::span<const Subset> parts) {
  if (parts.empty()) {
    throw std::invalid_argument("star_chain needs at least one part");
  }
  if (parts.size() > 1) {
    if (const auto check = is_hypersemigroup(t); !check) {
      throw std::invalid_argument(
          "star_chain requires an associative table; the identity fails at "
          "(" +
          std::to_string(check.triple[0]) + "," +
          std::to_string(check.triple[1]) + "," +
          std::to_string(check.triple[2]) + ")");
    }
  }
  Subset acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = star(t, acc, parts[i]);
  }
  return acc;
}

namespace detail {

std::optional<std::array<int, 3>> hyper_assoc_violation(int n,
                                                        const mask_t* cells) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        // {x}*(y∘z) vs (x∘y)*{z}, expanded cell by cell
        mask_t lhs = 0;
        for (mask_t m = cells[y * n + z]; m != 0; m &= m - 1) {
          lhs |= cells[x * n + std::countr_zero(m)];
        }
        mask_t rhs = 0;
        for (mask_t m = cells[x * n + y]; m != 0; m &= m - 1) {
          rhs |= cells[std::countr_zero(m) * n + z];
        }
        if (lhs != rhs) return std::array<int, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

AssociativityCheck is_hypersemigroup(const HyperTable& t) {
  const int n = t.size();
  std::vector<mask_t> cells(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      cells[static_cast<std::size_t>(a) * n + b] = t.cell_mask(a, b);
    }
  }
  AssociativityCheck out;
  if (const auto v = detail::hyper_assoc_violation(n, cells.data())) {
    out.ok = false;
    out.triple = *v;
  }
  return out;
}

HypergroupCheck is_hypergroup(const HyperTable& t) {
  if (const auto check = is_hypersemigroup(t); !check) {
    throw std::invalid_argument(
        "is_hypergroup requires a hypersemigroup; the identity fails at (" +
        std::to_string(check.triple[0]) + "," + std::to_string(check.triple[1]) +
        "," + std::to_string(check.triple[2]) + ")");
  }
  const int n = t.size();
  HypergroupCheck out;
  for (int e = 0; e < n; ++e) {
    bool identity = true;
    for (int a = 0; a < n && identity; ++a) {
      const mask_t single = mask_t{1} << a;
      identity = t.cell_mask(a, e) == single && t.cell_mask(e, a) == single;
    }
    if (identity) out.identities.push_back(e);
  }
  if (out.identities.empty()) {
    out.failure = HypergroupCheck::Failure::NoIdentity;
    return out;
  }
  const int e = out.identities.front();
  const mask_t e_single = mask_t{1} << e;
  out.inverses.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (t.cell_mask(a, b) == e_single && t.cell_mask(b, a) == e_single) {
        out.inverses[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (out.inverses[static_cast<std::size_t>(a)] < 0) {
      out.failure = HypergroupCheck::Failure::MissingInverse;
      out.element_without_inverse = a;
      out.inverses.clear();
      return out;
    }
  }
  out.ok = true;
  out.failure = HypergroupCheck::Failure::None;
  return out;
}

}  // namespace smallhyper
