#pragma once

// Neumann-property machinery: locating the unique group element that sends
// infinity to a given vertex by mediant descent in the sign-tracked Cayley
// graph, a breadth-first oracle over generator words, and the coset
// decomposition against <tau, nu>.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "neumann/gl2.hpp"
#include "neumann/involution.hpp"

namespace neumann {

/// The ordered edge {alpha*, alpha* (eps sigma_k*)} of the sign-tracked
/// Cayley graph. Its child vertex is alpha* (eps sigma*_{k+eps}).
struct EdgeState {
  IntMat2 alpha;
  int eps;
  Index k;
};

struct DescentStep {
  EdgeState edge;
  // Sign-tracked first columns of the two endpoints and of the child.
  Integer left_p, left_q;
  Integer right_p, right_q;
  Integer child_p, child_q;
};

struct Descent {
  ProjMat2 element;
  std::vector<DescentStep> steps;  // empty for infinity and (n, 1) targets
};

/// Returns alpha in the generated group with alpha(infinity) = v.
/// Throws OutOfWindow when the descent needs a generator index outside the
/// window and InconsistentWindow when the window data breaks the edge rewrite.
ProjMat2 element_for_vertex(const InvolutionWindow& w, const PVertex& v);

/// Same as element_for_vertex, recording every descent step.
Descent descend(const InvolutionWindow& w, const PVertex& v);

/// All distinct products of at most max_len in-window generators. With a
/// height cap, only elements whose image of infinity has height <= cap are
/// kept and expanded.
std::set<ProjMat2> bfs_enumerate(const InvolutionWindow& w, int max_len,
                                 std::optional<Integer> height_cap = std::nullopt);

enum class FailureReason { Missing, Duplicate, OutOfWindow };

std::string to_string(FailureReason r);

struct NeumannFailure {
  PVertex vertex;
  FailureReason reason;
  std::string detail;
};

struct NeumannReport {
  std::int64_t height_bound = 0;
  int oracle_len = 0;
  std::size_t oracle_ball_size = 0;
  bool verified = false;
  std::size_t targets_checked = 0;
  std::vector<NeumannFailure> failures;

  bool has_out_of_window() const;
};

/// All canonical vertices with height <= H, in canonical order.
std::vector<PVertex> vertices_up_to_height(std::int64_t H);

/// Every element of PGL(2,Z) whose canonical representative has all
/// entries bounded by H in absolute value, in canonical order.
std::vector<ProjMat2> elements_up_to_height(std::int64_t H);

/// Existence by descent for every vertex of height <= H; uniqueness within
/// the generator ball of length oracle_len (default 2H) capped at height H.
NeumannReport check_neumann(const InvolutionWindow& w, std::int64_t H,
                            std::optional<int> oracle_len = std::nullopt);

/// Largest H <= limit such that check_neumann(w, H) has no out-of-window
/// failures, or 0 if even H = 1 fails.
std::int64_t max_supported_height(const InvolutionWindow& w, std::int64_t limit);

enum class CosetKind { TauPower, TauPowerNu };

struct CosetDecomposition {
  ProjMat2 s;
  ProjMat2 t;
  CosetKind kind;
  Integer n;
};

/// g = s t with s in the generated group and t = tau^n or tau^n nu.
/// Throws OutOfWindow (from the descent) or NotInCoset.
CosetDecomposition coset_decompose(const InvolutionWindow& w, const ProjMat2& g);

}  // namespace neumann
