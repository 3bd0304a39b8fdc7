#pragma once

#include <cstdint>
#include <optional>

#include "liebreadth/algebra.hpp"

namespace liebreadth {

enum class Certainty { Exact, MonteCarlo };

struct BreadthOptions {
  enum class Method {
    Auto,        // symbolic for n <= 5 or when cheap, Monte Carlo otherwise
    Symbolic,    // always certify by minor expansion
    MonteCarlo,  // random evaluation only (upgraded to Exact by the sandwich bound)
  };
  std::size_t trials = 24;
  std::int64_t entry_bound = std::int64_t{1} << 31;
  std::uint64_t seed = 0;
  Method method = Method::Auto;
  /// b = 0 / b = 1 read off dim[L, L]. Disabled when the characterization
  /// itself is being tested.
  bool use_shortcuts = true;
};

struct BreadthResult {
  std::size_t value = 0;
  Vector witness;  // rank(ad_witness) == value
  Certainty certainty = Certainty::Exact;
  std::size_t trials = 0;          // MonteCarlo only
  std::int64_t entry_bound = 0;    // MonteCarlo only
};

/// rank(ad_x).
std::size_t breadth_of(const StructureTensor& L, const Vector& x);
/// rank(ad_x restricted to the ideal A).
std::size_t breadth_rel(const StructureTensor& L, const Subspace& A, const Vector& x);

/// max_x rank(ad_x). Over GF(p) every projective point is visited. Over
/// char 0 the generic rank of M(t) = sum t_i ad_{e_i} is bounded below by
/// random evaluation and certified by checking that every minor one size
/// larger vanishes as a polynomial.
BreadthResult breadth(const StructureTensor& L, const BreadthOptions& opts = {});
/// max_x rank(ad_x restricted to A) for an ideal A.
BreadthResult breadth_rel_max(const StructureTensor& L, const Subspace& A, const BreadthOptions& opts = {});

/// (b(L) = 1) <=> (dim[L, L] = 1), with b computed without the shortcut.
bool char_breadth1(const StructureTensor& L, const BreadthOptions& opts = {});

enum class Breadth2Case { None, S1, S2 };
struct Breadth2Check {
  bool holds;
  Breadth2Case fired;
};
/// (b(L) = 2) <=> (dim[L, L] = 2, or dim[L, L] = 3 and dim L/Z(L) = 3).
/// Requires L solvable.
Breadth2Check char_breadth2(const StructureTensor& L, const BreadthOptions& opts = {});

const char* to_string(Breadth2Case c);
const char* to_string(Certainty c);

}  // namespace liebreadth
