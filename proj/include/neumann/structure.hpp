#pragma once

// Free-product structure of involution-generated groups: element
// classification, per-block generator counts and their constraints, the
// relation and elimination identities, word-level independence, the
// determinant-one subgroup, and block synthesis for a target structure.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "neumann/gl2.hpp"
#include "neumann/involution.hpp"

namespace neumann {

enum class GenClass { Order2, Order3, InfinitePlus, InfiniteMinus };

std::string to_string(GenClass c);

/// Exact powers up to 3; every torsion element of PGL(2,Z) has order 2 or 3.
GenClass classify_element(const ProjMat2& x);

struct StructureCounts {
  std::int64_t r2 = 0;
  std::int64_t r3 = 0;
  std::int64_t rinf_plus = 0;
  std::int64_t rinf_minus = 0;

  StructureCounts& operator+=(const StructureCounts& o);
  bool operator==(const StructureCounts&) const = default;
};

/// Generators delivered by one building block.
StructureCounts block_contribution(int case_id);

struct StructureReport {
  StructureCounts counts;
  std::vector<std::pair<int, StructureCounts>> per_block;
  /// No determinant -1 generator anywhere, i.e. the group lies in PSL(2,Z).
  bool in_modular_group = true;
  /// rinf_minus >= 1 for groups outside PSL(2,Z), and rinf_plus even.
  bool constraint2 = false;
  /// r2 + r3 + rinf_plus / 2 >= rinf_minus.
  bool constraint3 = false;
  /// Finite-order designated generators have |trace| < 2.
  bool finite_generators_elliptic = true;
  std::string note;
};

StructureReport structure_report(std::span<const int> cases);

/// `r2 <n>` style lines followed by constraint verdicts.
void write_structure_report(std::ostream& os, const StructureReport& r);

struct DesignatedGenerator {
  Index index;
  GenClass cls;
  GenClass expected;
  bool matches() const { return cls == expected; }
};

/// The independent generators singled out for a block, classified.
/// Throws UnknownBlock unless the block is part of w's provenance.
std::vector<DesignatedGenerator> independent_generators(
    const InvolutionWindow& w, const BuildingBlock& block);

struct RelationReport {
  std::size_t rel1_checked = 0;
  std::size_t rel2_checked = 0;
  std::size_t rel2_skipped = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// sigma_n sigma_iota(n) = I and sigma_n sigma_{iota(n) - eps delta_n}
/// sigma_iota(n+eps) = I projectively, together with their exact GL(2,Z)
/// signs -delta_n I and eps delta_n delta_{n+eps} I.
RelationReport relation_report(const InvolutionWindow& w);
bool check_relations(const InvolutionWindow& w);

struct TietzeCheck {
  std::string identity;
  bool holds;
};

/// Elimination identities for cases 3-6, evaluated exactly. Throws
/// UnknownBlock unless the block is part of w's provenance.
std::vector<TietzeCheck> check_tietze(const BuildingBlock& block,
                                      const InvolutionWindow& w);

struct ClassifiedGenerator {
  ProjMat2 element;
  GenClass cls;
};

struct Letter {
  std::size_t gen;
  int exponent;
};

/// Shortest reduced word of length <= max_len over the generators that
/// evaluates to the identity, if any.
std::optional<std::vector<Letter>> find_trivial_word(
    std::span<const ClassifiedGenerator> gens, int max_len);

/// True iff no nonempty reduced word of length <= max_len equals I.
bool check_independence(std::span<const ClassifiedGenerator> gens, int max_len);

struct SIntersectionReport {
  bool index_two = false;
  std::string note;
  std::optional<Index> alpha_index;
  std::size_t ball_size = 0;
  std::size_t det_plus = 0;
  std::size_t det_minus = 0;
  bool multiplicative = true;
  bool plus_class_closed = true;
  std::vector<ProjMat2> sample_s_generators;
};

SIntersectionReport s_intersection_report(const InvolutionWindow& w, int max_len);

struct SynthesisResult {
  std::vector<int> cases;
  /// Length of the prefix whose structure matches the targets exactly; the
  /// rest is padding.
  std::size_t exact_prefix = 0;
};

/// Throws Unrealizable for targets violating the constraints and
/// TooFewBlocks when n_blocks cannot hold the exact prefix.
SynthesisResult synthesize_blocks(const StructureCounts& targets, int pad_case,
                                  std::size_t n_blocks);

}  // namespace neumann
