#include "neumann/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "neumann/errors.hpp"
#include "neumann/neumann.hpp"

namespace neumann {

std::string to_string(GenClass c) {
  switch (c) {
    case GenClass::Order2:
      return "Order2";
    case GenClass::Order3:
      return "Order3";
    case GenClass::InfinitePlus:
      return "InfinitePlus";
    case GenClass::InfiniteMinus:
      return "InfiniteMinus";
  }
  return "?";
}

GenClass classify_element(const ProjMat2& x) {
  const IntMat2& m = x.rep();
  const IntMat2 m2 = m * m;
  if (m2.is_scalar()) return GenClass::Order2;
  if ((m2 * m).is_scalar()) return GenClass::Order3;
  return m.det() == 1 ? GenClass::InfinitePlus : GenClass::InfiniteMinus;
}

StructureCounts& StructureCounts::operator+=(const StructureCounts& o) {
  r2 += o.r2;
  r3 += o.r3;
  rinf_plus += o.rinf_plus;
  rinf_minus += o.rinf_minus;
  return *this;
}

StructureCounts block_contribution(int case_id) {
  switch (case_id) {
    case 1:
      return {1, 0, 0, 0};
    case 2:
      return {0, 1, 0, 0};
    case 3:
      return {0, 0, 2, 0};
    case 4:
      return {1, 0, 0, 1};
    case 5:
      return {0, 1, 0, 1};
    case 6:
      return {0, 0, 2, 1};
    default:
      throw BadCase("case id " + std::to_string(case_id) + " is not in 1..6");
  }
}

namespace {

struct Designation {
  Index offset;
  GenClass expected;
};

std::vector<Designation> designations(int case_id) {
  using enum GenClass;
  switch (case_id) {
    case 1:
      return {{0, Order2}};
    case 2:
      return {{0, Order3}};
    case 3:
      return {{1, InfinitePlus}, {2, InfinitePlus}};
    case 4:
      return {{1, InfiniteMinus}, {2, Order2}};
    case 5:
      return {{1, InfiniteMinus}, {2, Order3}};
    case 6:
      return {{1, InfiniteMinus}, {3, InfinitePlus}, {4, InfinitePlus}};
    default:
      throw BadCase("case id " + std::to_string(case_id) + " is not in 1..6");
  }
}

bool constraint3_holds(const StructureCounts& c) {
  return 2 * (c.r2 + c.r3) + c.rinf_plus >= 2 * c.rinf_minus;
}

void require_known(const InvolutionWindow& w, const BuildingBlock& block) {
  const auto& blocks = w.provenance().blocks;
  if (std::find(blocks.begin(), blocks.end(), block) == blocks.end()) {
    throw UnknownBlock("case " + std::to_string(block.case_id) + " block at " +
                       std::to_string(block.base) + " is not part of the window");
  }
}

}  // namespace

StructureReport structure_report(std::span<const int> cases) {
  StructureReport r;
  std::set<int> seen;
  for (int c : cases) {
    const StructureCounts contrib = block_contribution(c);
    r.per_block.emplace_back(c, contrib);
    r.counts += contrib;
    if (contrib.rinf_minus > 0) r.in_modular_group = false;
    seen.insert(c);
  }
  r.constraint2 = (r.in_modular_group || r.counts.rinf_minus >= 1) &&
                  r.counts.rinf_plus % 2 == 0;
  r.constraint3 = constraint3_holds(r.counts);

  for (int c : seen) {
    const BuildingBlock block = make_block(c, 0);
    const InvolutionWindow w = InvolutionWindow::from_block(block);
    for (const DesignatedGenerator& g : independent_generators(w, block)) {
      if (g.cls != GenClass::Order2 && g.cls != GenClass::Order3) continue;
      const IntMat2& m = sigma(w, g.index).rep();
      const Integer trace = m.a() + m.d();
      if (m.det() != 1 || abs(trace) >= 2) r.finite_generators_elliptic = false;
    }
  }

  r.note =
      "condition 1 (r2 + r3 + rinf infinite) concerns the infinite limit; "
      "counts cover the finite prefix only";
  return r;
}

void write_structure_report(std::ostream& os, const StructureReport& r) {
  os << "r2 " << r.counts.r2 << '\n'
     << "r3 " << r.counts.r3 << '\n'
     << "rinf_plus " << r.counts.rinf_plus << '\n'
     << "rinf_minus " << r.counts.rinf_minus << '\n'
     << "constraint2 " << (r.constraint2 ? "ok" : "fail") << '\n'
     << "constraint3 " << (r.constraint3 ? "ok" : "fail") << '\n'
     << "elliptic " << (r.finite_generators_elliptic ? "ok" : "fail") << '\n'
     << "subgroup " << (r.in_modular_group ? "in-M" : "not-in-M") << '\n';
  for (const auto& [c, k] : r.per_block) {
    os << "block " << c << ' ' << k.r2 << ' ' << k.r3 << ' ' << k.rinf_plus
       << ' ' << k.rinf_minus << '\n';
  }
  os << "# " << r.note << '\n';
}

std::vector<DesignatedGenerator> independent_generators(
    const InvolutionWindow& w, const BuildingBlock& block) {
  require_known(w, block);
  std::vector<DesignatedGenerator> out;
  for (const Designation& d : designations(block.case_id)) {
    const Index n = block.base + d.offset;
    out.push_back({n, classify_element(sigma(w, n)), d.expected});
  }
  return out;
}

RelationReport relation_report(const InvolutionWindow& w) {
  RelationReport r;
  auto fail = [&r](const std::string& what, Index n, int eps) {
    std::ostringstream os;
    os << what << " n=" << n;
    if (eps != 0) os << " eps=" << eps;
    r.failures.push_back(os.str());
  };

  for (Index n = w.lo(); n <= w.hi(); ++n) {
    const Index in = w.iota(n);
    const int dn = w.delta(n);
    const IntMat2 sn = sigma_matrix(w, n);
    if (w.contains(in)) {
      ++r.rel1_checked;
      const IntMat2 prod = sn * sigma_matrix(w, in);
      if (!prod.is_scalar()) {
        fail("rel1 projective", n, 0);
      } else if (prod != IntMat2::identity().scaled(-dn)) {
        fail("rel1 sign", n, 0);
      }
    }
    for (int eps : {1, -1}) {
      const Index mid = in - eps * dn;
      const Index next = n + eps;
      if (!w.contains(mid) || !w.contains(next) || !w.contains(w.iota(next))) {
        ++r.rel2_skipped;
        continue;
      }
      ++r.rel2_checked;
      const IntMat2 prod =
          sn * sigma_matrix(w, mid) * sigma_matrix(w, w.iota(next));
      if (!prod.is_scalar()) {
        fail("rel2 projective", n, eps);
      } else if (prod != IntMat2::identity().scaled(eps * dn * w.delta(next))) {
        fail("rel2 sign", n, eps);
      }
    }
  }
  return r;
}

bool check_relations(const InvolutionWindow& w) {
  return relation_report(w).ok();
}

namespace {

struct Factor {
  Index offset;
  int exponent;
};

struct Elimination {
  Index lhs;
  std::vector<Factor> rhs;
};

std::vector<Elimination> eliminations(int case_id) {
  switch (case_id) {
    case 3:
      return {{3, {{1, -1}, {2, 1}}},
              {5, {{2, -1}, {1, -1}, {2, 1}}},
              {0, {{1, 1}, {2, -1}, {1, -1}, {2, 1}}}};
    case 4:
      return {{3, {{2, 1}, {1, 1}}}, {0, {{1, 1}, {2, 1}, {1, 1}}}};
    case 5:
      return {{4, {{2, -1}, {1, 1}}}, {0, {{1, 1}, {2, -1}, {1, 1}}}};
    case 6:
      return {{12, {{2, -1}, {1, 1}}}, {0, {{1, 1}, {12, 1}}}};
    default:
      return {};
  }
}

std::string describe(const Elimination& e) {
  std::ostringstream os;
  os << "s[k+" << e.lhs << "] =";
  for (const Factor& f : e.rhs) {
    os << " s[k+" << f.offset << "]";
    if (f.exponent != 1) os << "^" << f.exponent;
  }
  return os.str();
}

}  // namespace

std::vector<TietzeCheck> check_tietze(const BuildingBlock& block,
                                      const InvolutionWindow& w) {
  require_known(w, block);
  std::vector<TietzeCheck> out;
  for (const Elimination& e : eliminations(block.case_id)) {
    ProjMat2 rhs = ProjMat2::identity();
    for (const Factor& f : e.rhs) {
      const ProjMat2 s = sigma(w, block.base + f.offset);
      rhs = compose(rhs, f.exponent == 1 ? s : invert(s));
    }
    out.push_back({describe(e), sigma(w, block.base + e.lhs) == rhs});
  }
  return out;
}

std::optional<std::vector<Letter>> find_trivial_word(
    std::span<const ClassifiedGenerator> gens, int max_len) {
  struct Syllable {
    Letter letter;
    IntMat2 value;
    bool infinite;
  };
  std::vector<Syllable> syllables;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const IntMat2& m = gens[i].element.rep();
    switch (gens[i].cls) {
      case GenClass::Order2:
        syllables.push_back({{i, 1}, m, false});
        break;
      case GenClass::Order3:
        syllables.push_back({{i, 1}, m, false});
        syllables.push_back({{i, 2}, m * m, false});
        break;
      case GenClass::InfinitePlus:
      case GenClass::InfiniteMinus:
        syllables.push_back({{i, 1}, m, true});
        syllables.push_back({{i, -1}, m.inverse(), true});
        break;
    }
  }

  // Iterative deepening so the witness, if any, is a shortest one.
  std::vector<Letter> word;
  std::function<bool(const IntMat2&, const Syllable*, int)> search =
      [&](const IntMat2& prefix, const Syllable* prev, int remaining) -> bool {
    if (remaining == 0) return prefix.is_scalar();
    for (const Syllable& s : syllables) {
      if (prev != nullptr && prev->letter.gen == s.letter.gen &&
          !(s.infinite && prev->letter.exponent == s.letter.exponent)) {
        continue;
      }
      word.push_back(s.letter);
      if (search(prefix * s.value, &s, remaining - 1)) return true;
      word.pop_back();
    }
    return false;
  };

  for (int len = 1; len <= max_len; ++len) {
    word.clear();
    if (search(IntMat2::identity(), nullptr, len)) return word;
  }
  return std::nullopt;
}

bool check_independence(std::span<const ClassifiedGenerator> gens,
                        int max_len) {
  return !find_trivial_word(gens, max_len).has_value();
}

SIntersectionReport s_intersection_report(const InvolutionWindow& w,
                                          int max_len) {
  SIntersectionReport r;
  for (Index n = w.lo(); n <= w.hi(); ++n) {
    if (w.delta(n) == -1) {
      r.alpha_index = n;
      break;
    }
  }
  if (!r.alpha_index) {
    r.note = "Ŝ⊂M: all generators have determinant 1";
    return r;
  }

  const ProjMat2 alpha = sigma(w, *r.alpha_index);
  const ProjMat2 alpha_inv = invert(alpha);
  std::set<ProjMat2> seen;
  auto add = [&](const ProjMat2& x) {
    if (!x.is_identity() && seen.insert(x).second) {
      r.sample_s_generators.push_back(x);
    }
  };
  for (Index n = w.lo(); n <= w.hi(); ++n) {
    const ProjMat2 s = sigma(w, n);
    if (w.delta(n) == 1) {
      add(s);
      add(compose(compose(alpha, s), alpha_inv));
    } else {
      add(compose(alpha, s));
      add(compose(s, alpha_inv));
    }
  }

  const std::set<ProjMat2> ball = bfs_enumerate(w, max_len);
  r.ball_size = ball.size();
  std::vector<const ProjMat2*> elems;
  for (const ProjMat2& x : ball) {
    elems.push_back(&x);
    (x.det() == 1 ? r.det_plus : r.det_minus) += 1;
  }
  for (const ProjMat2* x : elems) {
    for (const ProjMat2* y : elems) {
      const ProjMat2 z = compose(*x, *y);
      const IntMat2& m = z.rep();
      // Determinant recomputed from the entries rather than trusted.
      const Integer det = m.a() * m.d() - m.b() * m.c();
      if (det != x->det() * y->det()) r.multiplicative = false;
      if (x->det() == 1 && y->det() == 1 && det != 1 && ball.count(z) != 0) {
        r.plus_class_closed = false;
      }
    }
  }
  r.index_two = r.det_plus > 0 && r.det_minus > 0 && r.multiplicative &&
                r.plus_class_closed;
  r.note = r.index_two ? "determinant character splits the ball into two classes"
                       : "index-2 witness failed";
  return r;
}

SynthesisResult synthesize_blocks(const StructureCounts& targets, int pad_case,
                                  std::size_t n_blocks) {
  if (targets.r2 < 0 || targets.r3 < 0 || targets.rinf_plus < 0 ||
      targets.rinf_minus < 0) {
    throw Unrealizable("structure counts must be nonnegative");
  }
  if (targets.rinf_plus % 2 != 0) {
    throw Unrealizable("rinf_plus must be even");
  }
  if (!constraint3_holds(targets)) {
    throw Unrealizable("r2 + r3 + rinf_plus/2 must be at least rinf_minus");
  }
  block_size(pad_case);  // BadCase on an invalid pad

  StructureCounts left = targets;
  SynthesisResult out;
  for (std::int64_t i = 0; i < targets.rinf_minus; ++i) {
    if (left.r2 > 0) {
      out.cases.push_back(4);
      --left.r2;
    } else if (left.r3 > 0) {
      out.cases.push_back(5);
      --left.r3;
    } else {
      out.cases.push_back(6);
      left.rinf_plus -= 2;
    }
  }
  out.cases.insert(out.cases.end(), static_cast<std::size_t>(left.r2), 1);
  out.cases.insert(out.cases.end(), static_cast<std::size_t>(left.r3), 2);
  out.cases.insert(out.cases.end(), static_cast<std::size_t>(left.rinf_plus / 2), 3);
  out.exact_prefix = out.cases.size();

  if (n_blocks < std::max<std::size_t>(out.exact_prefix, 1)) {
    throw TooFewBlocks("targets need " + std::to_string(out.exact_prefix) +
                       " blocks, " + std::to_string(n_blocks) + " requested");
  }
  out.cases.resize(n_blocks, pad_case);
  return out;
}

}  // namespace neumann
