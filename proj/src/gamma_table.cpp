#include "smallhyper/gamma_table.hpp"

#include <stdexcept>
#include <string>

namespace smallhyper {

GammaTable::GammaTable(Carrier carrier, int gamma_size,
                       std::vector<std::uint8_t> cells)
    : carrier_(carrier), k_(gamma_size), cells_(std::move(cells)) {
  if (k_ < 1) {
    throw std::invalid_argument("gamma size must be at least 1, got " +
                                std::to_string(k_));
  }
  const auto n = static_cast<std::size_t>(carrier_.size());
  const std::size_t expected = n * static_cast<std::size_t>(k_) * n;
  if (cells_.size() != expected) {
    throw std::invalid_argument("gamma table needs " +
                                std::to_string(expected) + " cells, got " +
                                std::to_string(cells_.size()));
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] >= carrier_.size()) {
      throw std::invalid_argument("gamma table cell " + std::to_string(i) +
                                  " holds " + std::to_string(cells_[i]) +
                                  ", outside carrier of size " +
                                  std::to_string(carrier_.size()));
    }
  }
}

void GammaTable::check_element(int i) const {
  if (i < 0 || i >= carrier_.size()) {
    throw std::out_of_range("element " + std::to_string(i) +
                            " outside carrier of size " +
                            std::to_string(carrier_.size()));
  }
}

void GammaTable::check_gamma(int g) const {
  if (g < 0 || g >= k_) {
    throw std::out_of_range("gamma index " + std::to_string(g) +
                            " outside range of size " + std::to_string(k_));
  }
}

bool operator<(const GammaTable& a, const GammaTable& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.k_ != b.k_) return a.k_ < b.k_;
  return a.cells_ < b.cells_;
}

Subset gamma_product(const GammaTable& t, const Subset& a, const Subset& b) {
  if (a.carrier_n() != t.size() || b.carrier_n() != t.size()) {
    throw std::invalid_argument(
        "gamma_product operands over a different carrier");
  }
  if (a.is_empty() || b.is_empty()) {
    throw std::domain_error(
        "gamma_product is defined on nonempty subsets only");
  }
  const int k = t.gamma_size();
  mask_t acc = 0;
  for (mask_t ma = a.mask(); ma != 0; ma &= ma - 1) {
    const int x = std::countr_zero(ma);
    for (int g = 0; g < k; ++g) {
      for (mask_t mb = b.mask(); mb != 0; mb &= mb - 1) {
        acc |= mask_t{1} << t.cell_unchecked(x, g, std::countr_zero(mb));
      }
    }
  }
  return Subset::from_mask(t.carrier(), acc);
}

namespace detail {

std::optional<std::array<int, 5>> gamma_assoc_violation(
    int n, int k, const std::uint8_t* cells) {
  const auto at = [&](int a, int g, int b) {
    return cells[(static_cast<std::size_t>(a) * k + g) * n + b];
  };
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < k; ++g) {
      for (int b = 0; b < n; ++b) {
        for (int m = 0; m < k; ++m) {
          for (int c = 0; c < n; ++c) {
            if (at(a, g, at(b, m, c)) != at(at(a, g, b), m, c)) {
              return std::array<int, 5>{a, g, b, m, c};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

GammaAssociativityCheck is_gamma_semigroup(const GammaTable& t) {
  GammaAssociativityCheck out;
  if (const auto v = detail::gamma_assoc_violation(t.size(), t.gamma_size(),
                                                   t.cells().data())) {
    out.ok = false;
    out.tuple = *v;
  }
  return out;
}

}  // namespace smallhyper
