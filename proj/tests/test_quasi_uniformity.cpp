#include <catch2/catch_amalgamated.hpp>

#include "qtop/enumerate.hpp"
#include "qtop/quasi_uniformity.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qtop;

namespace {
Relation rel(int n, std::vector<std::uint32_t> rows) { return Relation::fromRows(n, std::move(rows)); }

FinSpace sierpinski() { return FinSpace(rel(2, {0b11, 0b10})); }

FinSpace w3() {
    return FinSpace::fromOpens(3, {PointSet{0b000}, PointSet{0b001}, PointSet{0b010},
                                   PointSet{0b011}, PointSet{0b111}});
}
}  // namespace

TEST_CASE("normalize keeps the base and computes the minimal entourage") {
    auto q = FiniteQuasiUniformity::normalize({Relation::diagonal(3)});
    CHECK(q.minimal() == Relation::diagonal(3));

    Relation m = rel(2, {0b11, 0b10});
    auto q2 = FiniteQuasiUniformity::normalize({m, Relation::full(2)});
    CHECK(q2.minimal() == m);
    CHECK(q2.base().size() == 2);
}

TEST_CASE("normalize accepts bases whose intersection is transitive") {
    // Two one-step relations intersect to the diagonal, which is a preorder.
    Relation a = rel(3, {0b011, 0b010, 0b100});
    Relation b = rel(3, {0b001, 0b110, 0b100});
    CHECK_NOTHROW(FiniteQuasiUniformity::normalize({a, b}));
}

TEST_CASE("normalize rejects a lone non-transitive entourage") {
    // diag + (0,1) + (1,2): composing with itself produces (0,2), and no
    // smaller member exists to absorb it.
    Relation bad = rel(3, {0b011, 0b110, 0b100});
    CHECK_THROWS_AS(FiniteQuasiUniformity::normalize({bad}), NotQuasiUniformityError);
    CHECK_THROWS_AS(FiniteQuasiUniformity::normalize({}), NotQuasiUniformityError);
}

TEST_CASE("induced topology realizes the minimal entourage as minimal opens") {
    CHECK(FiniteQuasiUniformity::normalize({Relation::diagonal(2)}).inducedTopology() ==
          FinSpace(Relation::diagonal(2)));
    CHECK(FiniteQuasiUniformity::normalize({Relation::full(2)}).inducedTopology() ==
          FinSpace(Relation::full(2)));
    CHECK(FiniteQuasiUniformity::normalize({rel(2, {0b11, 0b10})}).inducedTopology() ==
          sierpinski());
}

TEST_CASE("normality of the canonical quasi-uniformity on the two-point connected space") {
    FinSpace s = sierpinski();
    CHECK(isNormal(canonicalQU(s), s));
    CHECK(isNormallyQuasiUniformizable(s));
}

TEST_CASE("the three-point wedge fails normality with the documented witness") {
    FinSpace s = w3();
    auto witness = findNormalityViolation(canonicalQU(s), s);
    REQUIRE(witness.has_value());
    CHECK(witness->a == PointSet::single(0));
    CHECK(witness->closureOfA == PointSet{0b101});
    CHECK(witness->interiorClosureBall == PointSet{0b001});
    CHECK_FALSE(isNormallyQuasiUniformizable(s));
}

TEST_CASE("symmetric canonical quasi-uniformities are normal") {
    // Partition topologies have symmetric minimal entourages; their canonical
    // quasi-uniformity is a continuous uniformity, hence normal.
    for (int n = 1; n <= 4; ++n)
        for (const FinSpace& s : enumerateSpaces(n))
            if (s.minimalOpenRelation().isSymmetric()) CHECK(isNormallyQuasiUniformizable(s));
}

TEST_CASE("every continuous symmetric quasi-uniformity over a refining topology is normal") {
    // Exhaustive over equivalence-relation entourages and all topologies in
    // which the classes are open.
    for (int n = 1; n <= 4; ++n) {
        const auto spaces = enumerateSpaces(n);
        for (const FinSpace& e : spaces) {
            if (!e.minimalOpenRelation().isSymmetric()) continue;
            FiniteQuasiUniformity q =
                FiniteQuasiUniformity::normalize({e.minimalOpenRelation()});
            for (const FinSpace& ambient : spaces) {
                if (!checkAxioms(q, ambient).continuous) continue;
                INFO("equivalence id=" << e.minimalOpenRelation().encode()
                                       << " ambient id=" << ambient.minimalOpenRelation().encode());
                REQUIRE(isNormal(q, ambient));
            }
        }
    }
}

TEST_CASE("axiom checks on small instances") {
    FinSpace discrete(Relation::diagonal(2));
    auto ax = checkAxioms(canonicalQU(discrete), discrete);
    CHECK(ax.separated);
    CHECK(ax.isUniformity);
    CHECK(ax.continuous);

    FinSpace s = sierpinski();
    auto ax2 = checkAxioms(canonicalQU(s), s);
    CHECK_FALSE(ax2.separated);
    CHECK_FALSE(ax2.isUniformity);
    CHECK(ax2.continuous);

    FinSpace indiscrete(Relation::full(2));
    auto ax3 = checkAxioms(canonicalQU(indiscrete), indiscrete);
    CHECK(ax3.continuous);
    CHECK(ax3.isUniformity);
    CHECK_FALSE(ax3.separated);
}

TEST_CASE("separatedness is T1 is discreteness on finite carriers") {
    for (int n = 1; n <= 4; ++n)
        for (const FinSpace& s : enumerateSpaces(n)) {
            auto q = canonicalQU(s);
            bool separated = checkAxioms(q, s).separated;
            CHECK(separated == (s.minimalOpenRelation() == Relation::diagonal(n)));
            CHECK(separated == classify(q.inducedTopology()).t1);
        }
}

TEST_CASE("canonical quasi-uniformity round-trips through the induced topology") {
    for (int n = 1; n <= 4; ++n)
        for (const FinSpace& s : enumerateSpaces(n)) {
            CHECK(canonicalQU(s).inducedTopology() == s);
            CHECK(canonicalQU(s).minimal() == s.minimalOpenRelation());
        }
}

TEST_CASE("generating quasi-uniformities of one topology share their minimal entourage") {
    auto rng = gen::makeRng(20240920, "uniqueness");
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(iter % 4);
        Relation p = gen::randomPreorder(rng, n);
        std::vector<Relation> base{p};
        for (int extra = 0; extra < 2; ++extra) base.push_back(gen::randomSuperset(rng, p));
        auto q = FiniteQuasiUniformity::normalize(base);
        CHECK(q.minimal() == p);
        CHECK(q.inducedTopology().minimalOpenRelation() == q.minimal());
    }
}

TEST_CASE("minimal-entourage normality agrees with the brute-force quantification") {
    auto rng = gen::makeRng(20240921, "normality oracle");
    int checked = 0;
    while (checked < 500) {
        int n = 2 + static_cast<int>(checked % 4);  // sizes 2..5
        Relation p = gen::randomPreorder(rng, n);
        std::vector<Relation> base{p};
        std::uniform_int_distribution<int> extras(0, 2);
        for (int e = extras(rng); e > 0; --e) base.push_back(gen::randomSuperset(rng, p));
        auto q = FiniteQuasiUniformity::normalize(base);
        FinSpace ambient = gen::randomSpace(rng, n);
        CHECK(isNormal(q, ambient) == oracle::isNormalBruteForce(q, ambient));
        ++checked;
    }
}
