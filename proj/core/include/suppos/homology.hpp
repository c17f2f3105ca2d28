// Reduced simplicial homology over the rationals, computed from exact
// integer ranks of boundary matrices.  Faces are vertex bitmasks; complexes
// must be closed under taking subsets and contain the empty face.

#pragma once

#include <cstdint>
#include <vector>

namespace suppos::homology {

/// Rank of an integer matrix over Q.  Integer-preserving elimination with
/// unit-pivot preference and row content reduction; falls back to
/// arbitrary-precision arithmetic if 64-bit intermediate values overflow.
long long matrix_rank(const std::vector<std::vector<long long>>& rows);

/// h[c] = dim of the reduced homology in simplicial degree c-1 (so h[0]
/// detects the irrelevant complex {{}}, h[1] counts extra connected
/// components, ...).  `faces` lists every face as a bitmask over
/// vertices 0..vertex_count-1 and must include 0 (the empty face).
std::vector<long long> reduced_betti(const std::vector<std::uint64_t>& faces, int vertex_count);

/// True when some vertex belongs to every maximal face, which makes the
/// complex a cone and all reduced homology vanish.
bool is_cone(const std::vector<std::uint64_t>& faces, int vertex_count);

}  // namespace suppos::homology
