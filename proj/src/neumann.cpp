#include "neumann/neumann.hpp"

#include <algorithm>
#include <map>

#include "neumann/errors.hpp"

namespace neumann {

namespace {

Integer cross(const Integer& p1, const Integer& q1, const Integer& p2,
              const Integer& q2) {
  return p1 * q2 - q1 * p2;
}

}  // namespace

Descent descend(const InvolutionWindow& w, const PVertex& v) {
  if (v.is_infinity()) return {ProjMat2::identity(), {}};
  if (v.q() == 1) {
    if (!v.p().fits_slong_p()) throw OutOfWindow(w.hi() + 1);
    return {sigma(w, v.p().get_si()), {}};
  }

  // Positive slopes live in the eps = +1 tree rooted at (1,0), (0,1); negative
  // slopes in the eps = -1 tree rooted at (1,0), (0,-1). In both trees the
  // first coordinate of every column is positive.
  const int eps0 = sgn(v.p());
  const Integer target_p = eps0 > 0 ? v.p() : Integer(-v.p());
  const Integer target_q = eps0 > 0 ? v.q() : Integer(-v.q());

  Descent out{ProjMat2::identity(), {}};
  EdgeState edge{IntMat2::identity(), eps0, 0};
  std::optional<std::pair<Integer, Integer>> expected_right;

  // Each step strictly increases the height of the child column, so the
  // target is reached within p + q steps for a consistent window.
  const Integer step_limit = target_p + abs(target_q) + 2;
  for (Integer steps = 0;; ++steps) {
    if (steps > step_limit) {
      throw InconsistentWindow("descent toward " + v.label() +
                               " did not terminate");
    }
    const IntMat2 right =
        edge.alpha * sigma_matrix(w, edge.k).scaled(edge.eps);
    const IntMat2 child =
        edge.alpha * sigma_matrix(w, edge.k + edge.eps).scaled(edge.eps);

    DescentStep step{edge,       edge.alpha.a(), edge.alpha.c(), right.a(),
                     right.c(), child.a(),      child.c()};
    if (expected_right &&
        (step.right_p != expected_right->first ||
         step.right_q != expected_right->second)) {
      throw InconsistentWindow("edge rewrite at index " +
                               std::to_string(edge.k) +
                               " does not reproduce the mediant vertex");
    }
    out.steps.push_back(step);

    if (step.child_p == target_p && step.child_q == target_q) {
      out.element = ProjMat2(child);
      return out;
    }

    const Integer side_target =
        cross(step.child_p, step.child_q, target_p, target_q);
    const Integer side_right =
        cross(step.child_p, step.child_q, step.right_p, step.right_q);
    if (sgn(side_target) * sgn(side_right) > 0) {
      // Target lies between the child and the far endpoint: re-root the edge
      // at alpha* (eps sigma_k*) using iota.
      const int d = w.delta(edge.k);
      const Index next_k = w.iota(edge.k) - edge.eps * d;
      expected_right.emplace(step.child_p, step.child_q);
      edge = EdgeState{right, -edge.eps * d, next_k};
    } else {
      expected_right.reset();
      edge.k += edge.eps;
    }
  }
}

ProjMat2 element_for_vertex(const InvolutionWindow& w, const PVertex& v) {
  return descend(w, v).element;
}

std::set<ProjMat2> bfs_enumerate(const InvolutionWindow& w, int max_len,
                                 std::optional<Integer> height_cap) {
  std::vector<ProjMat2> gens;
  for (Index n = w.lo(); n <= w.hi(); ++n) gens.push_back(sigma(w, n));

  std::set<ProjMat2> ball{ProjMat2::identity()};
  std::vector<ProjMat2> frontier{ProjMat2::identity()};
  for (int len = 0; len < max_len && !frontier.empty(); ++len) {
    std::vector<ProjMat2> next;
    for (const ProjMat2& x : frontier) {
      for (const ProjMat2& g : gens) {
        ProjMat2 y = compose(x, g);
        if (height_cap && y.column().height() > *height_cap) continue;
        if (ball.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

std::string to_string(FailureReason r) {
  switch (r) {
    case FailureReason::Missing:
      return "Missing";
    case FailureReason::Duplicate:
      return "Duplicate";
    case FailureReason::OutOfWindow:
      return "OutOfWindow";
  }
  return "?";
}

bool NeumannReport::has_out_of_window() const {
  for (const auto& f : failures) {
    if (f.reason == FailureReason::OutOfWindow) return true;
  }
  return false;
}

std::vector<PVertex> vertices_up_to_height(std::int64_t H) {
  std::vector<PVertex> out;
  if (H < 1) return out;
  out.push_back(PVertex::infinity());
  for (std::int64_t q = 1; q <= H; ++q) {
    for (std::int64_t p = -H; p <= H; ++p) {
      Integer g;
      const Integer pp = to_integer(p), qq = to_integer(q);
      mpz_gcd(g.get_mpz_t(), pp.get_mpz_t(), qq.get_mpz_t());
      if (g == 1) out.emplace_back(pp, qq);
    }
  }
  return out;
}

std::vector<ProjMat2> elements_up_to_height(std::int64_t H) {
  std::vector<ProjMat2> out;
  for (std::int64_t c = 0; c <= H; ++c) {
    for (std::int64_t a = c == 0 ? 1 : -H; a <= H; ++a) {
      for (std::int64_t b = -H; b <= H; ++b) {
        for (std::int64_t d = -H; d <= H; ++d) {
          const std::int64_t det = a * d - b * c;
          if (det == 1 || det == -1) {
            out.emplace_back(mat(to_integer(a), to_integer(b), to_integer(c),
                                 to_integer(d)));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NeumannReport check_neumann(const InvolutionWindow& w, std::int64_t H,
                            std::optional<int> oracle_len) {
  NeumannReport report;
  report.height_bound = H;
  report.oracle_len = oracle_len.value_or(static_cast<int>(2 * H));

  std::map<PVertex, ProjMat2> found;
  for (const PVertex& v : vertices_up_to_height(H)) {
    ++report.targets_checked;
    try {
      ProjMat2 alpha = element_for_vertex(w, v);
      if (alpha.column() != v) {
        report.failures.push_back(
            {v, FailureReason::Missing, "descent returned wrong column"});
        continue;
      }
      found.emplace(v, std::move(alpha));
    } catch (const OutOfWindow& e) {
      report.failures.push_back({v, FailureReason::OutOfWindow,
                                 "needs generator " + std::to_string(e.index())});
    } catch (const InconsistentWindow& e) {
      report.failures.push_back({v, FailureReason::Missing, e.what()});
    }
  }

  const std::set<ProjMat2> ball =
      bfs_enumerate(w, report.oracle_len, to_integer(H));
  report.oracle_ball_size = ball.size();
  std::map<PVertex, std::vector<const ProjMat2*>> by_column;
  for (const ProjMat2& x : ball) by_column[x.column()].push_back(&x);
  for (const auto& [v, elems] : by_column) {
    if (elems.size() > 1) {
      report.failures.push_back(
          {v, FailureReason::Duplicate,
           std::to_string(elems.size()) + " enumerated elements share this column"});
      continue;
    }
    auto it = found.find(v);
    if (it != found.end() && it->second != *elems.front()) {
      report.failures.push_back(
          {v, FailureReason::Duplicate, "descent and oracle disagree"});
    }
  }

  report.verified = report.failures.empty();
  return report;
}

std::int64_t max_supported_height(const InvolutionWindow& w,
                                  std::int64_t limit) {
  std::int64_t best = 0;
  for (std::int64_t H = 1; H <= limit; ++H) {
    for (const PVertex& v : vertices_up_to_height(H)) {
      if (v.height() != H) continue;
      try {
        element_for_vertex(w, v);
      } catch (const OutOfWindow&) {
        return best;
      }
    }
    best = H;
  }
  return best;
}

CosetDecomposition coset_decompose(const InvolutionWindow& w,
                                   const ProjMat2& g) {
  ProjMat2 s = element_for_vertex(w, act(g, PVertex::infinity()));
  ProjMat2 t = compose(invert(s), g);
  const IntMat2& r = t.rep();
  // Canonical form with c = 0 forces a = 1, so t = [[1, b], [0, +-1]].
  if (r.c() != 0) {
    throw NotInCoset("s^-1 g does not fix infinity");
  }
  CosetDecomposition out{std::move(s), t, CosetKind::TauPower, r.b()};
  if (r.d() == -1) {
    // tau^n nu = +-[[1, -n], [0, -1]]
    out.kind = CosetKind::TauPowerNu;
    out.n = -r.b();
  }
  return out;
}

}  // namespace neumann
