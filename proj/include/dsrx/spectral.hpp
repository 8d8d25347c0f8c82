#pragma once

#include <vector>

#include "dsrx/distance.hpp"
#include "dsrx/graph.hpp"

namespace dsrx {

struct SpectralResult {
  double radius = 0;            // dominant eigenvalue of the distance matrix
  std::vector<double> perron;   // unit 2-norm eigenvector, all entries > 0
  double residual = 0;          // max-norm of D*x - radius*x at acceptance
  long long iterations = 0;
};

// Dominant eigenpair by power iteration from the all-ones vector, with
// Rayleigh-quotient estimates.  Iterates on D + I: the shift keeps the
// dominant eigenvalue strictly largest in magnitude (D alone has spectrum
// {1, -1} for K2 and the iteration would oscillate forever) and moves the
// eigenvalues without touching the eigenvectors.  Accepts once the 2-norm
// residual drops to tol, which bounds the eigenvalue error by tol for a
// symmetric matrix and dominates the reported max-norm residual.
SpectralResult spectral_radius(const DistanceMatrix& d, double tol = 1e-10);

// distance_matrix + spectral_radius in one call.
SpectralResult graph_radius(const Graph& g, double tol = 1e-10);

// Verdict of comparing two graphs by distance spectral radius.  Values
// within `margin` of each other are treated as potentially equal: first an
// isomorphism test, then a rerun of both radii at a much tighter tolerance.
// Only when the refined values still cannot be separated does the verdict
// become indistinguishable.
enum class RadiusRelation { smaller, larger, equal_isomorphic, indistinguishable };

struct RadiusComparison {
  RadiusRelation relation;
  double radius_a = 0;  // tightest values computed along the way
  double radius_b = 0;
};

RadiusComparison compare_radii(const Graph& a, const Graph& b, double tol = 1e-10,
                               double margin = 1e-7, int iso_cap = 16);

}  // namespace dsrx
