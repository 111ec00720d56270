#include <catch2/catch_amalgamated.hpp>

#include "qtop/enumerate.hpp"
#include "qtop/finite_model.hpp"
#include "qtop/urysohn.hpp"
#include "support/generators.hpp"

using namespace qtop;

namespace {
Relation rel(int n, std::vector<std::uint32_t> rows) { return Relation::fromRows(n, std::move(rows)); }

FiniteSetModel sierpinskiModel() { return FiniteSetModel(FinSpace(rel(2, {0b11, 0b10}))); }

FiniteSetModel w3Model() {
    return FiniteSetModel(FinSpace::fromOpens(3, {PointSet{0b000}, PointSet{0b001},
                                                  PointSet{0b010}, PointSet{0b011},
                                                  PointSet{0b111}}));
}
}  // namespace

TEST_CASE("binary expansions") {
    CHECK(binaryExpansion(Dyadic::of(1, 1)) == std::vector<int>{1});
    CHECK(binaryExpansion(Dyadic::of(3, 3)) == std::vector<int>{0, 1, 1});
    CHECK(binaryExpansion(Dyadic::of(11, 4)) == std::vector<int>{1, 0, 1, 1});
    CHECK_THROWS_AS(binaryExpansion(Dyadic::zero()), DomainError);
    CHECK_THROWS_AS(binaryExpansion(Dyadic::one()), DomainError);
}

TEST_CASE("dyadic normalization and ordering") {
    CHECK(Dyadic::of(4, 3) == Dyadic::of(1, 1));
    CHECK(Dyadic::of(0, 5) == Dyadic::zero());
    CHECK(Dyadic::of(3, 3) < Dyadic::of(1, 1));
    CHECK(Dyadic::of(1, 1).times(Dyadic::of(1, 1)) == Dyadic::of(1, 2));
    CHECK(dyadicsUpToLevel(2) ==
          std::vector<Dyadic>{Dyadic::of(1, 2), Dyadic::of(1, 1), Dyadic::of(3, 2)});
}

TEST_CASE("entourage powers collapse on an idempotent chain") {
    FiniteSetModel m = sierpinskiModel();
    Relation preorder = m.space().minimalOpenRelation();
    auto chain = canonicalFiniteChain(m, 4);
    for (const Dyadic& q : dyadicsUpToLevel(4))
        CHECK(entouragePower(m, chain, q) == preorder);
    CHECK(entouragePower(m, chain, Dyadic::of(1, 1)) == chain.levels()[0]);
}

TEST_CASE("entourage powers reject expansions deeper than the chain") {
    FiniteSetModel m = sierpinskiModel();
    auto chain = canonicalFiniteChain(m, 2);
    CHECK_THROWS_AS(entouragePower(m, chain, Dyadic::of(1, 3)), DomainError);
}

TEST_CASE("chain construction checks the composition certificates eagerly") {
    FiniteSetModel m = w3Model();
    Relation preorder = m.space().minimalOpenRelation();
    CHECK_NOTHROW(canonicalFiniteChain(m, 3));
    // A level that composes outside its predecessor must be rejected:
    // diag+(0,1)+(1,2) squares to contain (0,2) but the predecessor is the
    // diagonal.
    Relation loose = rel(3, {0b011, 0b110, 0b100});
    CHECK_THROWS_AS(EntourageChain<FiniteSetModel>(m, Relation::full(3),
                                                   {Relation::diagonal(3), loose}),
                    InvalidChainError);
    CHECK_THROWS_AS(EntourageChain<FiniteSetModel>(m, Relation::diagonal(3), {preorder}),
                    InvalidChainError);
    CHECK_THROWS_AS(EntourageChain<FiniteSetModel>(m, Relation::full(3), {}), InvalidChainError);
}

TEST_CASE("the source must be nonempty") {
    FiniteSetModel m = sierpinskiModel();
    auto chain = canonicalFiniteChain(m, 3);
    CHECK_THROWS_AS(UrysohnFunction<FiniteSetModel>(m, chain, PointSet::empty()), DomainError);
}

TEST_CASE("evaluation on the two-point connected space") {
    FiniteSetModel m = sierpinskiModel();
    UrysohnFunction<FiniteSetModel> f(m, canonicalFiniteChain(m, 4), PointSet::single(1));
    // cl{1} is the whole space, so the function vanishes everywhere.
    CHECK(f.evaluate(0) == Dyadic::zero());
    CHECK(f.evaluate(1) == Dyadic::zero());
}

TEST_CASE("evaluation on the discrete two-point space") {
    FiniteSetModel m(FinSpace(Relation::diagonal(2)));
    UrysohnFunction<FiniteSetModel> f(m, canonicalFiniteChain(m, 4), PointSet::single(0));
    CHECK(f.evaluate(0) == Dyadic::zero());
    CHECK(f.evaluate(1) == Dyadic::one());
}

TEST_CASE("full verification passes on the two-point connected space") {
    FiniteSetModel m = sierpinskiModel();
    TheoremReport rep = verifyTheoremMain(m, canonicalFiniteChain(m, 3), PointSet::single(1));
    CHECK(rep.hypothesisHolds);
    CHECK(rep.allChecksPass());
    CHECK(rep.verdict() == TheoremVerdict::Pass);
}

TEST_CASE("the three-point wedge reports a violated hypothesis with a witness pair") {
    FiniteSetModel m = w3Model();
    TheoremReport rep = verifyTheoremMain(m, canonicalFiniteChain(m, 3), PointSet::single(0));
    CHECK_FALSE(rep.hypothesisHolds);
    CHECK(rep.verdict() == TheoremVerdict::HypothesisViolated);
    CHECK_FALSE(rep.monotone.pass);
    CHECK_FALSE(rep.monotone.detail.empty());
}

TEST_CASE("idempotent collapse: the function is two-valued up to the depth quantum") {
    const int depth = 4;
    for (int n = 1; n <= 3; ++n)
        for (const FinSpace& s : enumerateSpaces(n)) {
            FiniteSetModel m(s);
            auto chain = canonicalFiniteChain(m, depth);
            const Relation preorder = s.minimalOpenRelation();
            for (std::uint32_t w = 1; w < (std::uint32_t{1} << n); ++w) {
                PointSet a{w};
                UrysohnFunction<FiniteSetModel> f(m, chain, a);
                PointSet captured = s.closure(preorder.ball(a));
                for (int p = 0; p < n; ++p) {
                    Dyadic v = f.evaluate(p);
                    if (captured.contains(p))
                        CHECK(v <= Dyadic::of(1, depth));
                    else
                        CHECK(v == Dyadic::one());
                }
            }
        }
}

TEST_CASE("membership is upward closed in the level for idempotent chains") {
    for (int n = 1; n <= 3; ++n)
        for (const FinSpace& s : enumerateSpaces(n)) {
            FiniteSetModel m(s);
            auto chain = canonicalFiniteChain(m, 3);
            for (std::uint32_t w = 1; w < (std::uint32_t{1} << n); ++w) {
                UrysohnFunction<FiniteSetModel> f(m, chain, PointSet{w});
                for (int p = 0; p < n; ++p) {
                    bool seen = false;
                    for (const Dyadic& q : dyadicsUpToLevel(3)) {
                        bool mem = f.memberAt(p, q);
                        if (seen) CHECK(mem);
                        seen = seen || mem;
                    }
                }
            }
        }
}

TEST_CASE("deepening the chain never raises the value and moves it by at most one quantum") {
    auto rng = gen::makeRng(20240930, "depth precision");
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + iter % 4;
        auto levels = gen::randomEquivalenceChain(rng, n, 6);
        FinSpace ambient(levels.back());
        FiniteSetModel m(ambient);
        std::uniform_int_distribution<std::uint32_t> mask(1, (1u << n) - 1);
        PointSet a{mask(rng)};
        for (int k = 2; k < 6; ++k) {
            EntourageChain<FiniteSetModel> shallow(
                m, levels[0], std::vector<Relation>(levels.begin(), levels.begin() + k));
            EntourageChain<FiniteSetModel> deep(
                m, levels[0], std::vector<Relation>(levels.begin(), levels.begin() + k + 1));
            UrysohnFunction<FiniteSetModel> fs(m, shallow, a);
            UrysohnFunction<FiniteSetModel> fd(m, deep, a);
            for (int p = 0; p < n; ++p) {
                Dyadic vs = fs.evaluate(p);
                Dyadic vd = fd.evaluate(p);
                CHECK(vd <= vs);
                // |vs - vd| <= 2^-k exactly: compare at the common level.
                std::int64_t diff = vs.scaledTo(k + 1) - vd.scaledTo(k + 1);
                CHECK(diff <= 2);
            }
        }
    }
}

TEST_CASE("randomized nested equivalence chains verify fully") {
    auto rng = gen::makeRng(20240931, "equivalence chains");
    int passes = 0;
    for (int iter = 0; iter < 120; ++iter) {
        int n = 2 + iter % 5;  // sizes 2..6
        auto levels = gen::randomEquivalenceChain(rng, n, 4);
        FinSpace ambient(levels.back());
        FiniteSetModel m(ambient);
        EntourageChain<FiniteSetModel> chain(m, levels[0], levels);
        std::uniform_int_distribution<std::uint32_t> mask(1, (1u << n) - 1);
        PointSet a{mask(rng)};
        TheoremReport rep = verifyTheoremMain(m, chain, a);
        INFO("iter " << iter);
        REQUIRE(rep.hypothesisHolds);
        REQUIRE(rep.verdict() == TheoremVerdict::Pass);
        ++passes;
    }
    CHECK(passes == 120);
}

TEST_CASE("corrupting any chain level is caught at construction") {
    auto rng = gen::makeRng(20240932, "corrupted chains");
    int rejected = 0;
    for (int iter = 0; iter < 100; ++iter) {
        int n = 3 + iter % 4;
        auto levels = gen::randomEquivalenceChain(rng, n, 4);
        FiniteSetModel m{FinSpace(levels.back())};
        // Pick a level and a pair missing from its predecessor; adding the
        // pair to the level forces the square outside the predecessor.
        std::uniform_int_distribution<int> pickLevel(1, 3);
        int li = pickLevel(rng);
        const Relation& pred = levels[li - 1];
        std::optional<std::pair<int, int>> missing;
        for (int i = 0; i < n && !missing; ++i)
            for (int j = 0; j < n && !missing; ++j)
                if (!pred.contains(i, j)) missing = {{i, j}};
        if (!missing) continue;  // predecessor is full; nothing to corrupt here
        std::vector<std::uint32_t> rows;
        for (int i = 0; i < n; ++i) rows.push_back(levels[li].row(i).bits());
        rows[missing->first] |= PointSet::single(missing->second).bits();
        levels[li] = Relation::fromRows(n, rows);
        CHECK_THROWS_AS(EntourageChain<FiniteSetModel>(m, levels[0], levels),
                        InvalidChainError);
        ++rejected;
    }
    CHECK(rejected > 50);  // most random chains are corruptible
}
