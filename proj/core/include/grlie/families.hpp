#pragma once

#include <string>
#include <vector>

#include "grlie/presentation.hpp"

namespace grlie {

/// Free Lie algebra on named weighted generators (no relations).
GradedPresentation free_lie(std::vector<std::string> names, std::vector<int> weights);

/// Infinitesimal braid ("horizontal 4T") presentation of the graded algebra
/// of the pure braid group on n strands: generators A[i,j] for
/// 1 <= i < j <= n at weight 1; disjoint pairs commute, and
/// [A_ij, A_ik + A_jk] = [A_ik, A_ij + A_jk] = 0 for i < j < k.
GradedPresentation drinfeld_kohno(int n);

/// Ihara's presentation of the sphere braid Lie algebra: generators B[i,j]
/// for i < j only (the B_ji = B_ij and B_ii = 0 conventions are folded into
/// the indexing); disjoint pairs commute and each star sum over a strand
/// vanishes in degree 1.
GradedPresentation ihara_sphere(int n);

/// The sphere presentation on generators A[i,j], 1 <= i < j <= n-1: disjoint
/// pairs commute and twice the full generator sum vanishes; that sum has
/// order 2 and generates the centre.
GradedPresentation kv_sphere(int n);

/// Closed genus-g surface presentation on a[l,i], b[l,i] with the derived
/// elements s_{i,j} expanded as the representative [a[rep,i], b[rep,j]].
/// rep defaults to layer 1; any layer yields the same quotient because the
/// cross-layer relations identify the representatives.
GradedPresentation bezrukavnikov(int g, int n, int rep = 1);

/// Weight-graded surface group of genus g with k punctures: a[m], c[m] at
/// weight 1, u[i] at weight 2, one weight-2 relation
/// sum u_i + sum [a_m, c_m] = 0.
GradedPresentation surface_group(int g, int k);

}  // namespace grlie
