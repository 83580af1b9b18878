#include "neumann/involution.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "neumann/errors.hpp"

namespace neumann {

namespace {

struct CaseTable {
  std::size_t size;
  std::vector<std::pair<Index, Index>> pairs;  // offsets; unlisted points are fixed
  std::vector<Index> negative;                 // offsets j with delta_{k+j} = -1
};

const CaseTable& case_table(int case_id) {
  static const std::array<CaseTable, 6> tables = [] {
    const std::vector<std::pair<Index, Index>> case3 = {
        {0, 9}, {1, 4}, {2, 6}, {3, 7}, {5, 8}};
    std::vector<std::pair<Index, Index>> case6 = {{0, 15}, {1, 13}, {12, 14}};
    for (auto [x, y] : case3) case6.emplace_back(x + 2, y + 2);
    return std::array<CaseTable, 6>{{
        {1, {}, {}},
        {2, {{0, 1}}, {}},
        {10, case3, {}},
        {7, {{0, 6}, {1, 4}, {3, 5}}, {1, 3, 4, 5}},
        {8, {{0, 7}, {1, 5}, {2, 3}, {4, 6}}, {1, 4, 5, 6}},
        {16, case6, {1, 12, 13, 14}},
    }};
  }();
  if (case_id < 1 || case_id > 6) {
    throw BadCase("case id " + std::to_string(case_id) + " is not in 1..6");
  }
  return tables[static_cast<std::size_t>(case_id - 1)];
}

}  // namespace

std::size_t block_size(int case_id) { return case_table(case_id).size; }

BuildingBlock make_block(int case_id, Index k) {
  const CaseTable& t = case_table(case_id);
  std::vector<Index> image(t.size);
  for (std::size_t j = 0; j < t.size; ++j) image[j] = static_cast<Index>(j);
  for (auto [x, y] : t.pairs) {
    image[static_cast<std::size_t>(x)] = y;
    image[static_cast<std::size_t>(y)] = x;
  }

  BuildingBlock block;
  block.case_id = case_id;
  block.base = k;
  for (std::size_t j = 0; j < t.size; ++j) {
    const auto off = static_cast<Index>(j);
    block.table.emplace_back(k + off, k + image[j]);
    const bool neg =
        std::find(t.negative.begin(), t.negative.end(), off) != t.negative.end();
    block.delta.push_back(neg ? -1 : 1);
  }
  return block;
}

InvolutionWindow::InvolutionWindow(Index lo, std::vector<Index> iota,
                                   std::vector<int> delta,
                                   Provenance provenance)
    : lo_(lo),
      iota_(std::move(iota)),
      delta_(std::move(delta)),
      provenance_(std::move(provenance)) {
  if (iota_.empty() || iota_.size() != delta_.size()) {
    throw Error("window needs matching, nonempty iota and delta tables");
  }
  for (int d : delta_) {
    if (d != 1 && d != -1) throw Error("delta values must be +1 or -1");
  }
}

InvolutionWindow InvolutionWindow::from_block(const BuildingBlock& block) {
  std::vector<Index> iota;
  iota.reserve(block.table.size());
  for (const auto& entry : block.table) iota.push_back(entry.second);
  Provenance prov;
  prov.blocks.push_back(block);
  return {block.base, std::move(iota), block.delta, std::move(prov)};
}

Index InvolutionWindow::iota(Index n) const {
  if (!contains(n)) throw OutOfWindow(n);
  return iota_[static_cast<std::size_t>(n - lo_)];
}

int InvolutionWindow::delta(Index n) const {
  if (!contains(n)) throw OutOfWindow(n);
  return delta_[static_cast<std::size_t>(n - lo_)];
}

InvolutionWindow join(const InvolutionWindow& w0, const InvolutionWindow& w1) {
  if (w1.lo() != w0.hi() + 1) {
    throw NotAdjacent("cannot join {" + std::to_string(w0.lo()) + ".." +
                      std::to_string(w0.hi()) + "} with {" +
                      std::to_string(w1.lo()) + ".." +
                      std::to_string(w1.hi()) + "}");
  }
  const Index lo = w0.lo() - 1;
  const Index hi = w1.hi() + 1;
  std::vector<Index> iota;
  std::vector<int> delta;
  iota.reserve(static_cast<std::size_t>(hi - lo + 1));
  delta.reserve(iota.capacity());

  iota.push_back(hi);
  delta.push_back(1);
  for (const InvolutionWindow* w : {&w0, &w1}) {
    for (Index n = w->lo(); n <= w->hi(); ++n) {
      iota.push_back(w->iota(n));
      delta.push_back(w->delta(n));
    }
  }
  iota.push_back(lo);
  delta.push_back(1);

  Provenance prov = w0.provenance();
  const Provenance& right = w1.provenance();
  prov.blocks.insert(prov.blocks.end(), right.blocks.begin(), right.blocks.end());
  prov.outer_pairs.insert(prov.outer_pairs.end(), right.outer_pairs.begin(),
                          right.outer_pairs.end());
  prov.outer_pairs.emplace_back(lo, hi);
  return {lo, std::move(iota), std::move(delta), std::move(prov)};
}

std::vector<Index> block_bases(std::span<const int> cases) {
  std::vector<Index> bases;
  bases.reserve(cases.size());
  Index k = -1;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    bases.push_back(k);
    const auto l = static_cast<Index>(block_size(cases[i])) - 1;
    // The first block is followed directly by the second; every later
    // block leaves room for the outer pair of the previous join.
    k += l + (i == 0 ? 1 : 2);
  }
  return bases;
}

InvolutionWindow assemble(std::span<const int> cases) {
  if (cases.empty()) throw BadCase("assemble needs at least one block");
  const std::vector<Index> bases = block_bases(cases);
  InvolutionWindow w = InvolutionWindow::from_block(make_block(cases[0], bases[0]));
  for (std::size_t i = 1; i < cases.size(); ++i) {
    w = join(w, InvolutionWindow::from_block(make_block(cases[i], bases[i])));
  }
  return w;
}

ValidationReport validate(const InvolutionWindow& w) {
  ValidationReport report;
  for (Index n = w.lo(); n <= w.hi(); ++n) {
    const Index image = w.iota(n);
    if (!w.contains(image) || w.iota(image) != n) {
      report.involution_failures.push_back(n);
    }
    if (w.contains(image) && w.delta(image) != w.delta(n)) {
      report.delta_failures.push_back(n);
    }
    for (int eps : {1, -1}) {
      auto& checked = eps == 1 ? report.iota_checked : report.iota_minus_checked;
      auto& skipped = eps == 1 ? report.iota_skipped : report.iota_minus_skipped;
      auto& failures = eps == 1 ? report.iota_failures : report.iota_minus_failures;
      const Index inner = image - eps * w.delta(n);
      const Index next = n + eps;
      if (!w.contains(inner) || !w.contains(next)) {
        ++skipped;
        continue;
      }
      ++checked;
      const Index lhs = w.iota(inner);
      const Index rhs = w.iota(next) + eps * w.delta(next);
      if (lhs != rhs) failures.push_back({n, eps, lhs, rhs});
    }
  }
  return report;
}

IntMat2 sigma_matrix(const InvolutionWindow& w, Index n) {
  const Integer nn = to_integer(n);
  const Integer in = to_integer(w.iota(n));
  const Integer d = w.delta(n);
  return mat(nn, Integer(-nn * in - d), 1, Integer(-in));
}

ProjMat2 sigma(const InvolutionWindow& w, Index n) {
  return ProjMat2(sigma_matrix(w, n));
}

bool check_sigma_decomposition(const InvolutionWindow& w, Index n) {
  const ProjMat2 tau = base_generator(BaseGenerator::Tau);
  ProjMat2 rhs = compose(power(tau, n), base_generator(BaseGenerator::Omega));
  if (w.delta(n) == -1) rhs = compose(rhs, base_generator(BaseGenerator::Nu));
  rhs = compose(rhs, power(tau, -w.iota(n)));
  return sigma(w, n) == rhs;
}

}  // namespace neumann
