#pragma once

// Shared table builders and random generators for the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "smallhyper/gamma_table.hpp"
#include "smallhyper/hyper_table.hpp"
#include "smallhyper/subset.hpp"
#include "support/naive_oracle.hpp"

namespace fixtures {

using smallhyper::Carrier;
using smallhyper::GammaTable;
using smallhyper::HyperTable;
using smallhyper::Subset;
using smallhyper::mask_t;

/// Builds a hyper table from nested element lists: cell (a,b) is
/// cells[a][b].
inline HyperTable hyper(
    const std::vector<std::vector<std::vector<int>>>& cells) {
  const int n = static_cast<int>(cells.size());
  const Carrier c(n);
  std::vector<Subset> subsets;
  for (const auto& row : cells) {
    for (const auto& cell : row) {
      subsets.push_back(Subset::from_elements(c, cell));
    }
  }
  return HyperTable(c, std::move(subsets));
}

/// Builds a gamma table from nested element values: cells[a][g][b].
inline GammaTable gamma(
    const std::vector<std::vector<std::vector<int>>>& cells) {
  const int n = static_cast<int>(cells.size());
  const int k = static_cast<int>(cells.front().size());
  std::vector<std::uint8_t> flat;
  for (const auto& row : cells) {
    for (const auto& slice : row) {
      for (int v : slice) flat.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return GammaTable(Carrier(n), k, std::move(flat));
}

/// Constant table on two elements: a∘b = {0}.
inline HyperTable c2() { return hyper({{{0}, {0}}, {{0}, {0}}}); }

/// Full table on two elements: a∘b = {0,1}.
inline HyperTable f2() { return hyper({{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}}); }

/// Right projection on two elements: a∘b = {b}.
inline HyperTable r2() { return hyper({{{0}, {1}}, {{0}, {1}}}); }

/// The two-element group as a hyper table (singleton cells).
inline HyperTable z2() { return hyper({{{0}, {1}}, {{1}, {0}}}); }

/// One-element table, the trivial hypergroup.
inline HyperTable trivial1() { return hyper({{{0}}}); }

/// Left-zero gamma table on two elements, k = 1: aγb = a.
inline GammaTable lz2() { return gamma({{{0, 0}}, {{1, 1}}}); }

inline Subset random_nonempty_subset(std::mt19937_64& rng, Carrier c) {
  const mask_t full = c.full_mask();
  return Subset::from_mask(c, 1 + rng() % full);
}

inline HyperTable random_hyper(std::mt19937_64& rng, int n) {
  const Carrier c(n);
  std::vector<Subset> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) {
    cells.push_back(random_nonempty_subset(rng, c));
  }
  return HyperTable(c, std::move(cells));
}

inline GammaTable random_gamma(std::mt19937_64& rng, int n, int k) {
  std::vector<std::uint8_t> cells(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(k) * n);
  for (auto& cell : cells) {
    cell = static_cast<std::uint8_t>(rng() % static_cast<std::uint64_t>(n));
  }
  return GammaTable(Carrier(n), k, std::move(cells));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  return perm;
}

// Conversions to the oracle's representation (tests compare results across
// the two; the oracle itself never reads these types).

inline naive::HyperTable to_naive(const HyperTable& t) {
  naive::HyperTable out;
  out.n = t.size();
  out.cells.assign(static_cast<std::size_t>(t.size()),
                   std::vector<naive::Set>(static_cast<std::size_t>(t.size())));
  for (int a = 0; a < t.size(); ++a) {
    for (int b = 0; b < t.size(); ++b) {
      out.cells[a][b] = t.cell(a, b).elements();
    }
  }
  return out;
}

inline naive::GammaTable to_naive(const GammaTable& t) {
  naive::GammaTable out;
  out.n = t.size();
  out.k = t.gamma_size();
  out.cells.assign(
      static_cast<std::size_t>(t.size()),
      std::vector<std::vector<int>>(static_cast<std::size_t>(t.gamma_size()),
                                    std::vector<int>(static_cast<std::size_t>(t.size()))));
  for (int a = 0; a < t.size(); ++a) {
    for (int g = 0; g < t.gamma_size(); ++g) {
      for (int b = 0; b < t.size(); ++b) {
        out.cells[a][g][b] = t.cell(a, g, b);
      }
    }
  }
  return out;
}

inline HyperTable from_naive(const naive::HyperTable& t) {
  const Carrier c(t.n);
  std::vector<Subset> cells;
  for (const auto& row : t.cells) {
    for (const auto& cell : row) {
      cells.push_back(Subset::from_elements(c, cell));
    }
  }
  return HyperTable(c, std::move(cells));
}

}  // namespace fixtures
