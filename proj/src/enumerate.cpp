#include "smallhyper/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

namespace smallhyper {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void check_perm(std::span<const int> perm, int n, const char* what) {
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument(std::string(what) + " has wrong length");
  }
  mask_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || (seen >> v) & 1) {
      throw std::invalid_argument(std::string(what) + " is not a permutation");
    }
    seen |= mask_t{1} << v;
  }
}

mask_t image_mask(mask_t m, std::span<const int> perm) {
  mask_t out = 0;
  for (; m != 0; m &= m - 1) {
    out |= mask_t{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
  }
  return out;
}

constexpr int kCanonicalCap = 8;

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t space, std::uint64_t budget)
    : std::runtime_error("table space of size " + std::to_string(space) +
                         " exceeds the budget of " + std::to_string(budget) +
                         " tables"),
      space_(space),
      budget_(budget) {}

std::uint64_t hyper_space_size(int n) {
  const Carrier c(n);  // validates the range
  return saturating_pow(c.full_mask(), static_cast<std::uint64_t>(n) * n);
}

std::uint64_t gamma_space_size(int n, int k) {
  Carrier c(n);
  if (k < 1) throw std::invalid_argument("gamma size must be at least 1");
  return saturating_pow(static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(n) * k * n);
}

namespace detail {

// Both scans walk a mixed-radix odometer over the cell array, most
// significant digit first, so ascending index order is lexicographic
// ascending cell order.

void scan_hyper_raw(
    int n, std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, const mask_t*)>& fn) {
  if (begin >= end) return;
  const int m = n * n;
  const std::uint64_t base = Carrier(n).full_mask();
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(m));
  std::vector<mask_t> cells(static_cast<std::size_t>(m));
  std::uint64_t idx = begin;
  for (int j = m - 1; j >= 0; --j) {
    digits[static_cast<std::size_t>(j)] = idx % base;
    cells[static_cast<std::size_t>(j)] = digits[static_cast<std::size_t>(j)] + 1;
    idx /= base;
  }
  for (std::uint64_t i = begin; i < end; ++i) {
    fn(i, cells.data());
    if (i + 1 == end) break;
    int j = m - 1;
    while (true) {
      auto& d = digits[static_cast<std::size_t>(j)];
      if (++d < base) {
        cells[static_cast<std::size_t>(j)] = d + 1;
        break;
      }
      d = 0;
      cells[static_cast<std::size_t>(j)] = 1;
      --j;
    }
  }
}

void scan_gamma_raw(
    int n, int k, std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, const std::uint8_t*)>& fn) {
  if (begin >= end) return;
  const int m = n * k * n;
  const auto base = static_cast<std::uint64_t>(n);
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(m));
  std::uint64_t idx = begin;
  for (int j = m - 1; j >= 0; --j) {
    cells[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(idx % base);
    idx /= base;
  }
  for (std::uint64_t i = begin; i < end; ++i) {
    fn(i, cells.data());
    if (i + 1 == end) break;
    int j = m - 1;
    while (true) {
      auto& d = cells[static_cast<std::size_t>(j)];
      if (++d < base) break;
      d = 0;
      --j;
    }
  }
}

HyperTable hyper_from_masks(int n, const mask_t* cells) {
  const Carrier c(n);
  std::vector<Subset> subsets;
  subsets.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) {
    subsets.push_back(Subset::from_mask(c, cells[i]));
  }
  return HyperTable(c, std::move(subsets));
}

GammaTable gamma_from_cells(int n, int k, const std::uint8_t* cells) {
  return GammaTable(Carrier(n), k,
                    std::vector<std::uint8_t>(
                        cells, cells + static_cast<std::size_t>(n) * k * n));
}

}  // namespace detail

void enumerate_structures(const EnumerationSpec& spec,
                          const std::function<void(const Structure&)>& yield) {
  const bool hyper = spec.kind == StructureKind::Hyper;
  const std::uint64_t space = hyper ? hyper_space_size(spec.n)
                                    : gamma_space_size(spec.n, spec.k);
  if (space > spec.budget) throw BudgetExceeded(space, spec.budget);

  const auto emit = [&](Structure s) {
    if (spec.dedup == DedupMode::UpToIso && canonical_form(s) != s) return;
    yield(s);
  };

  if (hyper) {
    detail::scan_hyper_raw(
        spec.n, 0, space, [&](std::uint64_t, const mask_t* cells) {
          if (spec.filter == EnumFilter::SemigroupOnly &&
              detail::hyper_assoc_violation(spec.n, cells)) {
            return;
          }
          emit(detail::hyper_from_masks(spec.n, cells));
        });
  } else {
    detail::scan_gamma_raw(
        spec.n, spec.k, 0, space,
        [&](std::uint64_t, const std::uint8_t* cells) {
          if (spec.filter == EnumFilter::SemigroupOnly &&
              detail::gamma_assoc_violation(spec.n, spec.k, cells)) {
            return;
          }
          emit(detail::gamma_from_cells(spec.n, spec.k, cells));
        });
  }
}

HyperTable relabeled(const HyperTable& t, std::span<const int> perm) {
  const int n = t.size();
  check_perm(perm, n, "carrier permutation");
  std::vector<Subset> cells(static_cast<std::size_t>(n) * n,
                            Subset::full(t.carrier()));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto idx = static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * n +
                       perm[static_cast<std::size_t>(b)];
      cells[idx] =
          Subset::from_mask(t.carrier(), image_mask(t.cell_mask(a, b), perm));
    }
  }
  return HyperTable(t.carrier(), std::move(cells));
}

GammaTable relabeled(const GammaTable& t, std::span<const int> carrier_perm,
                     std::span<const int> gamma_perm) {
  const int n = t.size();
  const int k = t.gamma_size();
  check_perm(carrier_perm, n, "carrier permutation");
  check_perm(gamma_perm, k, "gamma permutation");
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * k * n);
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < k; ++g) {
      for (int b = 0; b < n; ++b) {
        const auto idx =
            (static_cast<std::size_t>(carrier_perm[static_cast<std::size_t>(a)]) * k +
             gamma_perm[static_cast<std::size_t>(g)]) *
                n +
            carrier_perm[static_cast<std::size_t>(b)];
        cells[idx] = static_cast<std::uint8_t>(
            carrier_perm[static_cast<std::size_t>(t.cell_unchecked(a, g, b))]);
      }
    }
  }
  return GammaTable(t.carrier(), k, std::move(cells));
}

HyperTable canonical_form(const HyperTable& t) {
  if (t.size() > kCanonicalCap) {
    throw std::invalid_argument(
        "canonical_form is a full permutation scan, capped at carrier size " +
        std::to_string(kCanonicalCap));
  }
  std::vector<int> perm = identity_perm(t.size());
  HyperTable best = t;
  while (std::next_permutation(perm.begin(), perm.end())) {
    HyperTable candidate = relabeled(t, perm);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

GammaTable canonical_form(const GammaTable& t) {
  if (t.size() > kCanonicalCap || t.gamma_size() > kCanonicalCap) {
    throw std::invalid_argument(
        "canonical_form is a full permutation scan, capped at size " +
        std::to_string(kCanonicalCap));
  }
  GammaTable best = t;
  std::vector<int> cperm = identity_perm(t.size());
  do {
    std::vector<int> gperm = identity_perm(t.gamma_size());
    do {
      GammaTable candidate = relabeled(t, cperm, gperm);
      if (candidate < best) best = std::move(candidate);
    } while (std::next_permutation(gperm.begin(), gperm.end()));
  } while (std::next_permutation(cperm.begin(), cperm.end()));
  return best;
}

Structure canonical_form(const Structure& s) {
  if (const auto* h = std::get_if<HyperTable>(&s)) return canonical_form(*h);
  return canonical_form(std::get<GammaTable>(s));
}

ProblemWitness make_problem_witness(const HyperTable& t) {
  if (const auto check = is_hypersemigroup(t); !check) {
    throw std::invalid_argument("problem witness must be a hypersemigroup");
  }
  const SubsetAlgebra algebra = subset_algebra(t, true);
  std::vector<Subset> bi = enumerate_ideals(algebra, IdealKind::BiIdeal);
  if (bi.size() != 1 || !bi.front().is_full()) {
    throw std::invalid_argument("problem witness must have no proper bi-ideal");
  }
  HypergroupCheck hg = is_hypergroup(t);
  if (hg.ok) {
    throw std::invalid_argument("problem witness must not be a hypergroup");
  }
  return ProblemWitness{t, std::move(bi), std::move(hg)};
}

ProblemSearchReport search_problem(
    int n_from, int n_to, const ProblemSearchOptions& options,
    const std::function<void(int, const ProblemWitness&)>& on_witness) {
  if (n_from < 1 || n_to < n_from || n_to > Carrier::kMaxSize) {
    throw std::invalid_argument("bad carrier size range");
  }
  ProblemSearchReport report;
  report.n_from = n_from;
  report.n_to = n_to;

  for (int n = n_from; n <= n_to; ++n) {
    const std::uint64_t space = hyper_space_size(n);
    if (space > options.budget) {
      report.complete = false;
      report.first_refused_n = n;
      break;
    }

    const int workers = static_cast<int>(std::min<std::uint64_t>(
        std::max(1, options.workers), std::max<std::uint64_t>(1, space)));
    std::vector<std::vector<HyperTable>> found(
        static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

    auto run_range = [&](int w, std::uint64_t begin, std::uint64_t end) {
      try {
        detail::scan_hyper_raw(
            n, begin, end, [&](std::uint64_t, const mask_t* cells) {
              if (detail::hyper_assoc_violation(n, cells)) return;
              HyperTable t = detail::hyper_from_masks(n, cells);
              const SubsetAlgebra algebra = subset_algebra(t, true);
              const auto bi = enumerate_ideals(algebra, IdealKind::BiIdeal);
              if (bi.size() != 1 || !bi.front().is_full()) return;
              if (is_hypergroup(t).ok) return;
              found[static_cast<std::size_t>(w)].push_back(std::move(t));
            });
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    };

    if (workers == 1) {
      run_range(0, 0, space);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = space / workers * w;
        const std::uint64_t end =
            w + 1 == workers ? space : space / workers * (w + 1);
        threads.emplace_back(run_range, w, begin, end);
      }
      for (auto& th : threads) th.join();
    }
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }

    // merge in worker (= table index) order, then dedup and re-verify
    std::uint64_t count = 0;
    for (const auto& chunk : found) {
      for (const HyperTable& t : chunk) {
        if (options.dedup == DedupMode::UpToIso && canonical_form(t) != t) {
          continue;
        }
        ProblemWitness witness = make_problem_witness(t);
        if (on_witness) on_witness(n, witness);
        report.witnesses.push_back(std::move(witness));
        ++count;
      }
    }
    report.witnesses_per_n.emplace_back(n, count);
  }
  return report;
}

}  // namespace smallhyper
