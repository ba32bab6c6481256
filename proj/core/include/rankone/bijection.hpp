#pragma once

#include <string_view>

#include "rankone/marked_tree.hpp"
#include "rankone/permutation.hpp"

namespace rankone {

/// Which branch of the recursive construction applies. Base2 and Base3 cover
/// sizes 2 and 3; the six C* tags apply from size 4 on. C1* is used when the
/// largest label n-1 is not in a 2-cycle, C2* when it is.
enum class CaseTag { Base2, Base3, C1a, C1b, C1cI, C1cII, C2a, C2b };

inline constexpr CaseTag kAllCaseTags[] = {
    CaseTag::Base2, CaseTag::Base3, CaseTag::C1a,   CaseTag::C1b,
    CaseTag::C1cI,  CaseTag::C1cII, CaseTag::C2a,   CaseTag::C2b};

std::string_view to_string(CaseTag tag) noexcept;

/// Throws FormatError for an unknown name.
CaseTag parse_case_tag(std::string_view name);

/// Maps a derangement of {0, ..., n-1}, n >= 2, to an increasing tree of size
/// n with a marked rank-1 vertex. Throws DomainError on fixed points or a
/// ground set other than {0, ..., n-1}.
MarkedTree forward(const CycleDecomposition& p);

/// Inverse of forward. Throws DomainError if `mt` has labels other than
/// {0, ..., n-1} or n < 2. InvariantFailure signals a broken internal step.
CycleDecomposition inverse(const MarkedTree& mt);

/// The case forward(p) goes through. For the C1 subcases this recurses on the
/// reduced derangement, since they depend on the recursive tree.
CaseTag classify_derangement(const CycleDecomposition& p);

/// Reads the case off the shape of a marked tree around the vertex n-1.
CaseTag classify_tree(const MarkedTree& mt);

/// State of the C2 branch just before the final attachment: `tree` is the
/// recursive image of p with the 2-cycle (partner n-1) removed, relabeled back
/// onto {0, ..., n-2} minus {partner}; `mark` is its marked vertex.
struct TwoCycleReduction {
  IncreasingTree tree;
  Label partner;
  Label mark;
};

/// Throws DomainError unless n >= 4 and n-1 lies in a 2-cycle of p.
TwoCycleReduction reduce_two_cycle(const CycleDecomposition& p);

/// Restructuring step of case C2a. Inserts `partner` on the path from the
/// root to `mark` and then, walking down that path, hangs below `partner`
/// every subtree that would stop a depth search walk from `partner` reaching
/// `mark` as its first rank-1 vertex. Ranks are taken on the tree as it is
/// being edited.
///
/// Requires mark > partner and rank(mark) == 1; throws ContractViolation
/// otherwise.
IncreasingTree case2a_restructure(IncreasingTree t, Label partner, Label mark);

}  // namespace rankone
