#pragma once

#include <string>
#include <vector>

#include "grlie/alphabet.hpp"
#include "grlie/free_lie.hpp"
#include "grlie/int_matrix.hpp"
#include "grlie/lattice.hpp"
#include "grlie/lie_element.hpp"

namespace grlie {

/// Family name and parameters carried through to all reports.
struct PresentationMeta {
    std::string family;
    int genus = 0;
    int strands = 0;
    int punctures = 0;

    bool operator==(const PresentationMeta&) const = default;
};

/// A weighted alphabet together with homogeneous relations; the object every
/// analysis consumes. Relations are stored expanded in Lyndon coordinates.
class GradedPresentation {
public:
    GradedPresentation(WeightedAlphabet alphabet, std::vector<LieElement> relations,
                       PresentationMeta meta)
        : alphabet_(std::move(alphabet)), relations_(std::move(relations)), meta_(std::move(meta)) {}

    const WeightedAlphabet& alphabet() const { return alphabet_; }
    const std::vector<LieElement>& relations() const { return relations_; }
    const PresentationMeta& meta() const { return meta_; }

private:
    WeightedAlphabet alphabet_;
    std::vector<LieElement> relations_;
    PresentationMeta meta_;
};

/// Confirms every relation is homogeneous of its stated weighted degree and
/// lives over the declared alphabet. Throws InhomogeneousRelationError naming
/// the offending relation.
void validate(const GradedPresentation& p);

/// Per-degree components I_1..I_D of the graded relation ideal, built
/// incrementally: I_d is spanned by the degree-d relations together with
/// brackets of every generator against the basis of the matching lower
/// component. Bracketing with generators alone closes the ideal because the
/// algebra is generated by the alphabet.
class IdealCache {
public:
    explicit IdealCache(GradedPresentation presentation, int threads = 0);

    const GradedPresentation& presentation() const { return pres_; }
    const FreeLieAlgebra& algebra() const { return fla_; }
    int built_degree() const { return static_cast<int>(ideals_.size()); }

    /// Number of rows fed into the lattice at one degree, for diagnostics.
    struct DegreeHistory {
        int relation_rows = 0;
        int closure_rows = 0;
        int rank = 0;
    };

    /// Build all components up to and including `degree`.
    void ensure(int degree);

    /// I_d in Hermite normal form (builds lower degrees on demand).
    const IntegerLattice& ideal_component(int degree);

    /// gr^d of the presented algebra as an abelian group:
    /// cokernel of I_d inside the degree-d free component.
    AbelianInvariants quotient_component(int degree);

    /// True iff the coordinate vector of e lies in I_degree(e).
    bool element_in_ideal(const LieElement& e);

    const DegreeHistory& history(int degree) const;

private:
    void extend_one();

    GradedPresentation pres_;
    FreeLieAlgebra fla_;
    int threads_;
    std::vector<IntegerLattice> ideals_;   // ideals_[d-1] = I_d
    std::vector<DegreeHistory> history_;
};

}  // namespace grlie
