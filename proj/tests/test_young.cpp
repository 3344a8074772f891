#include "suned/young.hpp"

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace suned;
using young::DominanceRelation;
using young::YoungDiagram;

TEST_CASE("diagram_from_sector sorts the nonzero counts") {
    CHECK(young::diagram_from_sector(fock::Sector{{2, 3, 1}}) ==
          YoungDiagram({3, 2, 1}));
    CHECK(young::diagram_from_sector(fock::Sector{{0, 0, 4}}) ==
          YoungDiagram({4}));
    CHECK(young::diagram_from_sector(fock::Sector{{2, 0, 4}}) ==
          YoungDiagram({4, 2}));
    CHECK_THROWS_AS(young::diagram_from_sector(fock::Sector{{0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(YoungDiagram({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram({}), std::invalid_argument);
    CHECK(YoungDiagram({3, 2, 2}).to_string() == "3,2,2");
}

TEST_CASE("dominance chain for four boxes") {
    const std::vector<YoungDiagram> chain = {
        YoungDiagram({4}), YoungDiagram({3, 1}), YoungDiagram({2, 2}),
        YoungDiagram({2, 1, 1}), YoungDiagram({1, 1, 1, 1})};
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
            CHECK(young::dominates(chain[i], chain[j]) ==
                  DominanceRelation::StrictlyAbove);
            CHECK(young::dominates(chain[j], chain[i]) ==
                  DominanceRelation::StrictlyBelow);
        }
    }
}

TEST_CASE("incomparable and unrelated pairs") {
    CHECK(young::dominates(YoungDiagram({4, 1, 1}), YoungDiagram({3, 3})) ==
          DominanceRelation::Incomparable);
    CHECK(young::dominates(YoungDiagram({2, 1}), YoungDiagram({2, 1})) ==
          DominanceRelation::Equal);
    // Different box counts are never related.
    CHECK(young::dominates(YoungDiagram({3}), YoungDiagram({2})) ==
          DominanceRelation::Incomparable);
}

TEST_CASE("dominance agrees with the box-move oracle") {
    for (int boxes = 1; boxes <= 8; ++boxes) {
        const auto shapes = oracles::all_partitions(boxes);
        for (const auto& a : shapes) {
            for (const auto& b : shapes) {
                const auto rel =
                    young::dominates(YoungDiagram(a), YoungDiagram(b));
                const bool above = oracles::dominates_by_box_moves(a, b);
                const bool below = oracles::dominates_by_box_moves(b, a);
                if (a == b) {
                    CHECK(rel == DominanceRelation::Equal);
                } else if (above) {
                    CHECK(rel == DominanceRelation::StrictlyAbove);
                } else if (below) {
                    CHECK(rel == DominanceRelation::StrictlyBelow);
                } else {
                    CHECK(rel == DominanceRelation::Incomparable);
                }
            }
        }
    }
}

TEST_CASE("dominance is a partial order") {
    for (int boxes = 1; boxes <= 8; ++boxes) {
        const auto diagrams = young::enumerate_diagrams(boxes, 4);
        for (const auto& a : diagrams) {
            CHECK(young::dominates(a, a) == DominanceRelation::Equal);
            for (const auto& b : diagrams) {
                const auto ab = young::dominates(a, b);
                const auto ba = young::dominates(b, a);
                if (ab == DominanceRelation::StrictlyAbove)
                    CHECK(ba == DominanceRelation::StrictlyBelow);
                for (const auto& c : diagrams) {
                    if (ab == DominanceRelation::StrictlyAbove &&
                        young::dominates(b, c) ==
                            DominanceRelation::StrictlyAbove)
                        CHECK(young::dominates(a, c) ==
                              DominanceRelation::StrictlyAbove);
                }
            }
        }
    }
}

TEST_CASE("conjugate reflects across the diagonal") {
    CHECK(young::conjugate(YoungDiagram({3, 1})) == YoungDiagram({2, 1, 1}));
    CHECK(young::conjugate(YoungDiagram({1, 1, 1})) == YoungDiagram({3}));
    for (int boxes = 1; boxes <= 8; ++boxes)
        for (const auto& d : young::enumerate_diagrams(boxes, boxes))
            CHECK(young::conjugate(young::conjugate(d)) == d);
}

TEST_CASE("conjugation inverts the dominance order") {
    for (int boxes = 1; boxes <= 8; ++boxes) {
        const auto diagrams = young::enumerate_diagrams(boxes, boxes);
        for (const auto& a : diagrams) {
            for (const auto& b : diagrams) {
                const auto rel = young::dominates(a, b);
                const auto conj = young::dominates(young::conjugate(a),
                                                   young::conjugate(b));
                if (rel == DominanceRelation::StrictlyAbove)
                    CHECK(conj == DominanceRelation::StrictlyBelow);
                else if (rel == DominanceRelation::StrictlyBelow)
                    CHECK(conj == DominanceRelation::StrictlyAbove);
                else
                    CHECK(conj == rel);
            }
        }
    }
}

TEST_CASE("irrep dimensions") {
    CHECK(young::irrep_dimension(YoungDiagram({1}), 3) == 3);
    CHECK(young::irrep_dimension(YoungDiagram({1, 1}), 3) == 3);
    CHECK(young::irrep_dimension(YoungDiagram({2, 1}), 3) == 8);
    CHECK(young::irrep_dimension(YoungDiagram({2, 2, 2}), 3) == 1);
    CHECK_THROWS_AS(young::irrep_dimension(YoungDiagram({1, 1, 1}), 2),
                    std::invalid_argument);
}

TEST_CASE("irrep dimension equals the semistandard-tableau count") {
    for (int n = 1; n <= 4; ++n) {
        for (int boxes = 1; boxes <= 8; ++boxes) {
            for (const auto& d : young::enumerate_diagrams(boxes, n)) {
                CHECK(young::irrep_dimension(d, n) ==
                      oracles::ssyt_count(d.rows(), n));
            }
        }
    }
}

TEST_CASE("single columns give binomial dimensions") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(young::irrep_dimension(YoungDiagram(std::vector<int>(
                                             static_cast<std::size_t>(k), 1)),
                                         n) == fock::binomial(n, k));
}

TEST_CASE("ground diagram: full columns plus the remainder") {
    CHECK(young::ground_diagram(6, 3) == YoungDiagram({2, 2, 2}));
    CHECK(young::ground_diagram(7, 3) == YoungDiagram({3, 2, 2}));
    CHECK(young::ground_diagram(8, 3) == YoungDiagram({3, 3, 2}));
    CHECK(young::ground_diagram(2, 4) == YoungDiagram({1, 1}));
}

TEST_CASE("ground diagram is dominated by every other diagram") {
    for (int n = 2; n <= 4; ++n) {
        for (int boxes = 1; boxes <= 8; ++boxes) {
            const auto gs = young::ground_diagram(boxes, n);
            for (const auto& d : young::enumerate_diagrams(boxes, n)) {
                if (d == gs) continue;
                CHECK(young::dominates(d, gs) ==
                      DominanceRelation::StrictlyAbove);
            }
        }
    }
}

TEST_CASE("enumerate_diagrams lists partitions with bounded rows") {
    const auto three = young::enumerate_diagrams(3, 2);
    REQUIRE(three.size() == 2);
    CHECK(three[0] == YoungDiagram({3}));
    CHECK(three[1] == YoungDiagram({2, 1}));

    CHECK(young::enumerate_diagrams(4, 4).size() == 5);
    CHECK(young::enumerate_diagrams(1, 5).size() == 1);
    CHECK(young::enumerate_diagrams(8, 3).size() == 10);
}
