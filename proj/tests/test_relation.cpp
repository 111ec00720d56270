#include <catch2/catch_amalgamated.hpp>

#include "qtop/relation.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qtop;

namespace {
Relation rel(int n, std::vector<std::uint32_t> rows) { return Relation::fromRows(n, std::move(rows)); }
}  // namespace

TEST_CASE("composition of diagonals is the diagonal") {
    Relation d = Relation::diagonal(3);
    CHECK(d.composedWith(d) == d);
}

TEST_CASE("composition fills in transitive pairs") {
    // r = diag + (0,1), s = diag + (1,0) on 2 points: every pair has an
    // intermediate, so the composite is the full relation.
    Relation r = rel(2, {0b11, 0b10});
    Relation s = rel(2, {0b01, 0b11});
    CHECK(r.composedWith(s) == Relation::full(2));
}

TEST_CASE("a preorder composed with itself is itself") {
    Relation m = rel(2, {0b11, 0b10});  // {(0,0),(0,1),(1,1)}
    CHECK(m.composedWith(m) == m);
    CHECK(m.isPreorder());
}

TEST_CASE("composition matches the triple-enumeration oracle") {
    auto rng = gen::makeRng(20240901, "compose oracle");
    for (int n : {1, 2, 3, 4, 5, 6})
        for (int iter = 0; iter < 40; ++iter) {
            Relation r = gen::randomReflexive(rng, n, 0.35);
            Relation s = gen::randomReflexive(rng, n, 0.35);
            CHECK(r.composedWith(s) == oracle::composeByTriples(r, s));
        }
}

TEST_CASE("composition rejects mismatched carriers") {
    CHECK_THROWS_AS(Relation::diagonal(2).composedWith(Relation::diagonal(3)), DimensionError);
}

TEST_CASE("inverse transposes and is an involution") {
    CHECK(Relation::diagonal(4).inverted() == Relation::diagonal(4));
    Relation m = rel(2, {0b11, 0b10});
    CHECK(m.inverted() == rel(2, {0b01, 0b11}));

    auto rng = gen::makeRng(20240902, "inverse involution");
    for (int iter = 0; iter < 60; ++iter) {
        Relation r = gen::randomReflexive(rng, 5, 0.4);
        CHECK(r.inverted().inverted() == r);
    }
}

TEST_CASE("balls read off rows") {
    CHECK(Relation::diagonal(3).ball(PointSet{0b101}) == PointSet{0b101});
    Relation m = rel(2, {0b11, 0b10});
    CHECK(m.ball(PointSet::single(0)) == PointSet{0b11});
    CHECK(m.ball(PointSet::empty()) == PointSet::empty());
}

TEST_CASE("preorder detection") {
    CHECK(Relation::diagonal(3).isPreorder());
    CHECK(rel(2, {0b11, 0b10}).isPreorder());
    // diag + (0,1) + (1,2) misses (0,2)
    CHECK_FALSE(rel(3, {0b011, 0b110, 0b100}).isPreorder());
}

TEST_CASE("constructors reject a missing diagonal and oversized carriers") {
    CHECK_THROWS_AS(Relation::fromRows(2, {0b10, 0b10}), DimensionError);
    CHECK_THROWS_AS(Relation::fromRows(2, {0b11, 0b111}), DimensionError);
    CHECK_THROWS_AS(Relation::diagonal(kMaxPoints + 1), CapExceeded);
    CHECK_THROWS_AS(Relation::diagonal(0), DimensionError);
    CHECK_NOTHROW(Relation::diagonal(kMaxPoints));
}

TEST_CASE("composition is associative") {
    auto rng = gen::makeRng(20240903, "associativity");
    for (int n : {2, 3, 4, 5, 6})
        for (int iter = 0; iter < 40; ++iter) {
            Relation a = gen::randomReflexive(rng, n, 0.3);
            Relation b = gen::randomReflexive(rng, n, 0.3);
            Relation c = gen::randomReflexive(rng, n, 0.3);
            CHECK(a.composedWith(b).composedWith(c) == a.composedWith(b.composedWith(c)));
        }
}

TEST_CASE("composition is monotone in both arguments") {
    auto rng = gen::makeRng(20240904, "monotonicity");
    for (int iter = 0; iter < 60; ++iter) {
        Relation r = gen::randomReflexive(rng, 5, 0.25);
        Relation s = gen::randomReflexive(rng, 5, 0.25);
        Relation rBig = gen::randomSuperset(rng, r);
        Relation sBig = gen::randomSuperset(rng, s);
        CHECK(r.composedWith(s).subsetOf(rBig.composedWith(sBig)));
    }
}

TEST_CASE("ball distributes over union") {
    auto rng = gen::makeRng(20240905, "ball union");
    std::uniform_int_distribution<std::uint32_t> mask(0, 31);
    for (int iter = 0; iter < 60; ++iter) {
        Relation r = gen::randomReflexive(rng, 5, 0.3);
        PointSet a{mask(rng)}, b{mask(rng)};
        CHECK(r.ball(a.unionWith(b)) == r.ball(a).unionWith(r.ball(b)));
    }
}

TEST_CASE("inverse is an anti-homomorphism for composition") {
    auto rng = gen::makeRng(20240906, "anti-homomorphism");
    for (int iter = 0; iter < 60; ++iter) {
        Relation r = gen::randomReflexive(rng, 5, 0.3);
        Relation s = gen::randomReflexive(rng, 5, 0.3);
        CHECK(r.composedWith(s).inverted() == s.inverted().composedWith(r.inverted()));
    }
}

TEST_CASE("text form round-trips") {
    Relation m = rel(3, {0b011, 0b010, 0b111});
    std::string text = m.toText();
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    CHECK(Relation::fromText(lines) == m);
    CHECK_THROWS_AS(Relation::fromText({"10", "01"}), ParseError);  // missing diagonal
    CHECK_THROWS_AS(Relation::fromText({"1x", "01"}), ParseError);
    CHECK_THROWS_AS(Relation::fromText({"111", "011"}), ParseError);  // ragged
}
