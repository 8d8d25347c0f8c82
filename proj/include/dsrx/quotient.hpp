#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsrx/distance.hpp"
#include "dsrx/graph.hpp"
#include "dsrx/polynomial.hpp"

namespace dsrx {

// A vertex partition that is equitable for the distance matrix, together
// with the quotient matrix of block row sums.  Equitability forces every
// row within a block to sum to the same integer, so the quotient is exact
// and its characteristic polynomial has integer coefficients.
struct QuotientSystem {
  std::vector<std::vector<int>> parts;
  std::vector<std::vector<long long>> quotient;
  Polynomial charpoly;
};

// Contiguous vertex ranges of the given sizes, the layout every family
// constructor uses for its blocks.
std::vector<std::vector<int>> block_parts(const std::vector<int>& sizes);

// Checks block row-sum constancy over the given parts.  The parts must
// partition the vertex set exactly; a violation of constancy raises
// not_equitable_error naming the offending part and vertex.
QuotientSystem verify_equitable(const DistanceMatrix& d,
                                const std::vector<std::vector<int>>& parts);

// Characteristic polynomial of a square integer matrix by the
// Faddeev-LeVerrier recurrence.  Every division in the recurrence is exact,
// so the result is exact; coefficient overflow throws instead of wrapping.
Polynomial charpoly_int(const std::vector<std::vector<long long>>& m);

// The common Perron-vector value on each part.  Within-part spread beyond
// 10*tol raises not_equitable_error: either the partition is wrong or the
// eigenpair did not converge, and neither should be papered over.
std::vector<double> perron_part_values(const Graph& g,
                                       const std::vector<std::vector<int>>& parts,
                                       double tol = 1e-10);

// The four quotient families with closed-form characteristic polynomials in
// the parameter k.  Each names a concrete graph together with its equitable
// block layout:
//   phi    — hub of size 2k joined to K3 u K1 (three blocks, cubic)
//   phi_s  — K_{2k+1} joined to three isolated vertices (two blocks)
//   phi1   — block diamond 3 | k+2 | k | 1 (four blocks, quartic)
//   phi2   — block diamond 2 | k+1 | k+1 | 2 (four blocks, quartic)
enum class QuotientFamily { phi, phi_s, phi1, phi2 };

Graph family_graph(QuotientFamily f, long long k);
std::vector<std::vector<int>> family_parts(QuotientFamily f, long long k);

// The closed-form characteristic polynomial of the family's quotient,
// evaluated at k.  These are the reference values the computed quotients
// must reproduce exactly.
Polynomial reference_charpoly(QuotientFamily f, long long k);

// Builds the family graph, forms its quotient, and compares characteristic
// polynomials coefficient by coefficient.  On mismatch returns false and,
// when requested, the difference computed - reference.
bool charpoly_matches_reference(QuotientFamily f, long long k,
                                Polynomial* diff = nullptr);

std::optional<QuotientFamily> quotient_family_from_name(std::string_view name);
std::string_view quotient_family_name(QuotientFamily f);

}  // namespace dsrx
