#include <catch2/catch_amalgamated.hpp>

#include "qtop/enumerate.hpp"
#include "qtop/separation.hpp"
#include "support/oracles.hpp"

using namespace qtop;

namespace {
FinSpace sierpinski() { return FinSpace(Relation::fromRows(2, {0b11, 0b10})); }

FinSpace w3() {
    // opens {}, {0}, {1}, {0,1}, X
    return FinSpace::fromOpens(3, {PointSet{0b000}, PointSet{0b001}, PointSet{0b010},
                                   PointSet{0b011}, PointSet{0b111}});
}
}  // namespace

TEST_CASE("two-point connected space: only T0 holds") {
    ClassificationRecord r = classify(sierpinski());
    CHECK(r.t0);
    CHECK_FALSE(r.t1);
    CHECK_FALSE(r.semiHausdorff);
    CHECK_FALSE(r.hausdorff);
    CHECK_FALSE(r.functionallyHausdorff);
    CHECK_FALSE(r.semiregular);
    CHECK_FALSE(r.regular);
    CHECK_FALSE(r.completelyRegular);
    CHECK(verifyDiagram(r));
}

TEST_CASE("indiscrete two-point space: regularity without T0") {
    ClassificationRecord r = classify(FinSpace(Relation::full(2)));
    CHECK_FALSE(r.t0);
    CHECK(r.semiregular);
    CHECK(r.regular);
    CHECK(r.completelyRegular);
    CHECK_FALSE(r.t3);
    CHECK(verifyDiagram(r));
}

TEST_CASE("discrete space: every flag holds") {
    ClassificationRecord r = classify(FinSpace(Relation::diagonal(3)));
    CHECK(r.t0);
    CHECK(r.t1);
    CHECK(r.semiHausdorff);
    CHECK(r.hausdorff);
    CHECK(r.functionallyHausdorff);
    CHECK(r.semiregular);
    CHECK(r.regular);
    CHECK(r.completelyRegular);
    CHECK(r.t3);
    CHECK(r.t12_3);
    CHECK(r.tychonoff);
    CHECK(r.submetrizable);
    CHECK(verifyDiagram(r));
}

TEST_CASE("the three-point wedge is semiregular but not regular") {
    ClassificationRecord r = classify(w3());
    CHECK(r.t0);
    CHECK(r.semiregular);
    CHECK_FALSE(r.regular);
    CHECK_FALSE(r.completelyRegular);
    CHECK(verifyDiagram(r));
}

TEST_CASE("verifyDiagram rejects an impossible record") {
    ClassificationRecord r;
    r.hausdorff = true;  // T2 without T1
    CHECK_FALSE(verifyDiagram(r));
    CHECK(findDiagramViolation(r).has_value());
}

TEST_CASE("diagram holds on every space with up to 4 points") {
    for (int n = 1; n <= 4; ++n)
        for (const FinSpace& s : enumerateSpaces(n)) {
            ClassificationRecord r = classify(s);
            INFO("n=" << n << " id=" << s.minimalOpenRelation().encode());
            REQUIRE(verifyDiagram(r));
        }
}

TEST_CASE("finite rigidity: T1, functionally Hausdorff and submetrizable all mean discrete") {
    for (int n = 1; n <= 4; ++n)
        for (const FinSpace& s : enumerateSpaces(n)) {
            ClassificationRecord r = classify(s);
            bool discrete = s.minimalOpenRelation() == Relation::diagonal(n);
            CHECK(r.t1 == discrete);
            CHECK(r.functionallyHausdorff == discrete);
            CHECK(r.submetrizable == discrete);
        }
}

TEST_CASE("finite rigidity: completely regular means partition topology") {
    for (int n = 1; n <= 4; ++n)
        for (const FinSpace& s : enumerateSpaces(n)) {
            ClassificationRecord r = classify(s);
            bool partition = s.minimalOpenRelation().isSymmetric();
            CHECK(r.completelyRegular == partition);
            CHECK(r.regular == partition);  // regular coincides finitely as well
        }
}

TEST_CASE("semiregular literal form matches the regular-open reformulation") {
    for (int n = 1; n <= 4; ++n)
        for (const FinSpace& s : enumerateSpaces(n)) {
            ClassificationRecord r = classify(s);
            bool viaMinimal = true;
            for (int x = 0; x < n; ++x) {
                PointSet ux = s.minimalOpen(x);
                if (!s.interior(s.closure(ux)).subsetOf(ux)) viaMinimal = false;
            }
            CHECK(r.semiregular == viaMinimal);
        }
}

TEST_CASE("clopen-partition axioms agree with the function oracle on all 3-point spaces") {
    // The chain {0, 1/2, 1} carries isolated values, so the oracle quantifies
    // over genuinely continuous functions.
    for (int n = 1; n <= 3; ++n)
        for (const FinSpace& s : enumerateSpaces(n)) {
            ClassificationRecord r = classify(s);
            INFO("n=" << n << " id=" << s.minimalOpenRelation().encode());
            CHECK(r.functionallyHausdorff == oracle::functionallyHausdorffByFunctions(s));
            CHECK(r.completelyRegular == oracle::completelyRegularByFunctions(s));
        }
}

TEST_CASE("TSV row layout") {
    ClassificationRecord r = classify(sierpinski());
    r.normallyQuasiUniformizable = true;
    CHECK(classificationTsvHeader() ==
          "id\tn\tT0\tT1\tsH\tT2\tfH\tsR\tR\tcR\tT3\tT12_3\tT3_12\tsM\tnqu");
    CHECK(classificationTsvRow(13, 2, r) ==
          "13\t2\t1\t0\t0\t0\t0\t0\t0\t0\t0\t0\t0\t0\t1");
}
