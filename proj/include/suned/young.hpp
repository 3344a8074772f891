#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "suned/fock.hpp"

namespace suned::young {

/// Partition with non-ascending positive row lengths; labels an equivalence
/// class of SU(N) multiplets when it has at most N rows.
class YoungDiagram {
  public:
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int box_count() const;
    int row(int i) const { return rows_[i]; }  // 0-based

    std::string to_string() const;  // "3,2,2"

    bool operator==(const YoungDiagram&) const = default;
    auto operator<=>(const YoungDiagram&) const = default;

  private:
    std::vector<int> rows_;
};

enum class DominanceRelation {
    StrictlyAbove,  // first argument dominates
    StrictlyBelow,
    Equal,
    Incomparable,
};

const char* to_string(DominanceRelation r);

/// Diagram whose rows are the nonzero sector counts, sorted non-ascending.
/// Throws for the all-zero sector (no diagram for zero particles).
YoungDiagram diagram_from_sector(const fock::Sector& sector);

/// Dominance order via prefix sums. Diagrams with different box counts are
/// never related; equal box counts compare prefix sums row by row.
DominanceRelation dominates(const YoungDiagram& a, const YoungDiagram& b);

/// Reflection across the main diagonal.
YoungDiagram conjugate(const YoungDiagram& d);

/// Dimension of the SU(N) multiplet labeled by the diagram (Weyl dimension
/// formula with rows padded to N by zeros); equals the count of semistandard
/// tableaux of that shape with entries 1..N.
std::uint64_t irrep_dimension(const YoungDiagram& d, int num_flavors);

/// Dominance-minimal diagram with the given box count and at most N rows:
/// full columns of height N plus one column of height M mod N.
YoungDiagram ground_diagram(int boxes, int num_flavors);

/// All partitions of `boxes` into at most N parts, descending lexicographic.
std::vector<YoungDiagram> enumerate_diagrams(int boxes, int num_flavors);

}  // namespace suned::young
