#pragma once

// Involutions of Z with determinant marks, built from the six building
// blocks, plus the generators sigma_n they define.
//
// A window {lo, ..., hi} stores iota(n) and delta_n for each n in range. The
// generator attached to n is the class of
//
//     sigma_n* = [[n, -n iota(n) - delta_n], [1, -iota(n)]],
//
// whose first column is (n, 1) and whose determinant is delta_n. The group
// generated by the sigma_n is Neumann exactly when iota satisfies
//
//     iota(iota(n) - delta_n) = iota(n+1) + delta_{n+1},  delta_n = delta_{iota(n)}.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "neumann/gl2.hpp"

namespace neumann {

using Index = std::int64_t;

/// Number of points in the domain of each building block, cases 1..6.
std::size_t block_size(int case_id);

struct BuildingBlock {
  int case_id = 1;
  Index base = 0;
  /// (n, iota(n)) for every n in {base, ..., base + size - 1}, sorted by n.
  std::vector<std::pair<Index, Index>> table;
  /// delta_n in the same order as `table`.
  std::vector<int> delta;

  Index lo() const { return base; }
  Index hi() const { return base + static_cast<Index>(table.size()) - 1; }

  bool operator==(const BuildingBlock&) const = default;
};

/// Throws BadCase unless 1 <= case_id <= 6.
BuildingBlock make_block(int case_id, Index k);

struct Provenance {
  std::vector<BuildingBlock> blocks;
  /// Outer pairs added by joins, innermost first.
  std::vector<std::pair<Index, Index>> outer_pairs;
};

class InvolutionWindow {
 public:
  /// Raw constructor: iota[i] and delta[i] belong to n = lo + i. No
  /// consistency checks beyond matching lengths and delta in {-1, +1};
  /// use validate() for the rest.
  InvolutionWindow(Index lo, std::vector<Index> iota, std::vector<int> delta,
                   Provenance provenance = {});

  static InvolutionWindow from_block(const BuildingBlock& block);

  Index lo() const noexcept { return lo_; }
  Index hi() const noexcept { return lo_ + static_cast<Index>(iota_.size()) - 1; }
  std::size_t size() const noexcept { return iota_.size(); }
  bool contains(Index n) const noexcept { return n >= lo() && n <= hi(); }

  /// Both throw OutOfWindow for n outside {lo, ..., hi}.
  Index iota(Index n) const;
  int delta(Index n) const;

  const Provenance& provenance() const noexcept { return provenance_; }

  bool operator==(const InvolutionWindow& rhs) const {
    return lo_ == rhs.lo_ && iota_ == rhs.iota_ && delta_ == rhs.delta_;
  }

 private:
  Index lo_;
  std::vector<Index> iota_;
  std::vector<int> delta_;
  Provenance provenance_;
};

/// Concatenates adjacent windows and adds the outer pair
/// (w0.lo - 1, w1.hi + 1) with delta = +1. Throws NotAdjacent unless
/// w1.lo == w0.hi + 1.
InvolutionWindow join(const InvolutionWindow& w0, const InvolutionWindow& w1);

/// Places the blocks at k_0 = -1, k_1 = k_0 + l_0 + 1, k_{i+1} = k_i + l_i + 2
/// and folds the joins left to right. Throws BadCase on an empty list or an
/// invalid case id.
InvolutionWindow assemble(std::span<const int> cases);

/// Base positions used by assemble() for the given case list.
std::vector<Index> block_bases(std::span<const int> cases);

struct IotaFailure {
  Index n;
  int eps;
  Index lhs;  // iota(iota(n) - eps delta_n)
  Index rhs;  // iota(n + eps) + eps delta_{n+eps}
};

struct ValidationReport {
  std::vector<Index> involution_failures;
  std::vector<Index> delta_failures;
  std::vector<IotaFailure> iota_failures;         // eps = +1
  std::vector<IotaFailure> iota_minus_failures;   // eps = -1
  std::size_t iota_checked = 0;
  std::size_t iota_skipped = 0;
  std::size_t iota_minus_checked = 0;
  std::size_t iota_minus_skipped = 0;

  bool ok() const {
    return involution_failures.empty() && delta_failures.empty() &&
           iota_failures.empty() && iota_minus_failures.empty();
  }
};

/// Instances of the iota condition that reference indices outside the window
/// are skipped and counted, never failed.
ValidationReport validate(const InvolutionWindow& w);

/// sigma_n* as a GL(2,Z) matrix. Throws OutOfWindow.
IntMat2 sigma_matrix(const InvolutionWindow& w, Index n);

/// Class of sigma_n* in PGL(2,Z). Throws OutOfWindow.
ProjMat2 sigma(const InvolutionWindow& w, Index n);

/// Checks sigma_n = tau^n omega nu^((1 - delta_n)/2) tau^(-iota(n)).
bool check_sigma_decomposition(const InvolutionWindow& w, Index n);

}  // namespace neumann
