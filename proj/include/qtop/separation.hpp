#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtop/fin_space.hpp"

namespace qtop {

/// Separation-axiom flags of one finite space. Composite axioms are
/// conjunctions: t3 = regular and t1, t12_3 = semiregular and t1,
/// tychonoff = completely regular and t1.
struct ClassificationRecord {
    bool t0 = false;
    bool t1 = false;
    bool semiHausdorff = false;         // every other point avoids some int-closure
    bool hausdorff = false;             // t2
    bool functionallyHausdorff = false; // t2 1/2
    bool semiregular = false;
    bool regular = false;
    bool completelyRegular = false;
    bool t3 = false;
    bool t12_3 = false;
    bool tychonoff = false;             // t3 1/2
    bool submetrizable = false;
    std::optional<bool> normallyQuasiUniformizable;  // filled by the quasi-uniformity layer

    bool operator==(const ClassificationRecord&) const = default;
};

/// Decides every axiom by direct quantification over points and open sets.
/// The function-based axioms (functionally Hausdorff, completely regular,
/// submetrizable) are decided through the clopen partition: on a finite space
/// every continuous real-valued function is constant on clopen-partition
/// classes and every clopen indicator is continuous, so the partition carries
/// exactly the reachable function values. The brute-force function oracle
/// validating this lives in the test tree.
inline ClassificationRecord classify(const FinSpace& s) {
    const int n = s.size();
    const std::vector<PointSet> opens = s.allOpens();
    const std::vector<PointSet> classes = s.clopenPartition();

    std::vector<PointSet> clopenClassOf(n);
    for (PointSet cls : classes)
        for (int x : cls) clopenClassOf[x] = cls;

    ClassificationRecord rec;

    rec.t0 = rec.t1 = rec.hausdorff = rec.semiHausdorff = true;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            PointSet ux = s.minimalOpen(x);
            PointSet uy = s.minimalOpen(y);
            // Some open contains exactly one of x,y iff one of the two
            // minimal opens already separates them.
            if (ux.contains(y) && uy.contains(x)) rec.t0 = false;
            if (ux.contains(y)) rec.t1 = false;
            // Any open neighborhood of x contains U_x, and closure and
            // interior-of-closure are monotone, so U_x is the best witness.
            if (s.closure(ux).contains(y)) rec.hausdorff = false;
            if (s.interior(s.closure(ux)).contains(y)) rec.semiHausdorff = false;
        }
    }

    // The clopen partition separates points iff every class is a singleton.
    rec.functionallyHausdorff = true;
    for (PointSet cls : classes)
        if (cls.count() != 1) rec.functionallyHausdorff = false;
    rec.submetrizable = rec.functionallyHausdorff;  // finite metric spaces are discrete

    rec.semiregular = rec.regular = rec.completelyRegular = true;
    for (int x = 0; x < n && (rec.semiregular || rec.regular || rec.completelyRegular); ++x) {
        for (PointSet target : opens) {
            if (!target.contains(x)) continue;
            bool foundSemi = false, foundReg = false;
            for (PointSet u : opens) {
                if (!u.contains(x)) continue;
                if (!foundSemi && s.interior(s.closure(u)).subsetOf(target)) foundSemi = true;
                if (!foundReg && s.closure(u).subsetOf(target)) foundReg = true;
                if (foundSemi && foundReg) break;
            }
            if (!foundSemi) rec.semiregular = false;
            if (!foundReg) rec.regular = false;
            // Every clopen set containing x contains its partition class, so
            // the class is the only candidate that matters.
            if (!clopenClassOf[x].subsetOf(target)) rec.completelyRegular = false;
        }
    }

    rec.t3 = rec.regular && rec.t1;
    rec.t12_3 = rec.semiregular && rec.t1;
    rec.tychonoff = rec.completelyRegular && rec.t1;
    return rec;
}

/// One implication arrow between two axiom flags.
struct DiagramArrow {
    const char* from;
    const char* to;
    bool (*fromFlag)(const ClassificationRecord&);
    bool (*toFlag)(const ClassificationRecord&);
};

/// The primitive arrows of the separation diagram; composite implications
/// follow by chaining.
inline const std::vector<DiagramArrow>& diagramArrows() {
    static const std::vector<DiagramArrow> arrows = {
        {"T1", "T0", [](const ClassificationRecord& r) { return r.t1; },
         [](const ClassificationRecord& r) { return r.t0; }},
        {"T1/2_2", "T1", [](const ClassificationRecord& r) { return r.semiHausdorff; },
         [](const ClassificationRecord& r) { return r.t1; }},
        {"T1/2_3", "T1/2_2", [](const ClassificationRecord& r) { return r.t12_3; },
         [](const ClassificationRecord& r) { return r.semiHausdorff; }},
        {"T1/2_3", "sR", [](const ClassificationRecord& r) { return r.t12_3; },
         [](const ClassificationRecord& r) { return r.semiregular; }},
        {"T2", "T1/2_2", [](const ClassificationRecord& r) { return r.hausdorff; },
         [](const ClassificationRecord& r) { return r.semiHausdorff; }},
        {"T3", "T2", [](const ClassificationRecord& r) { return r.t3; },
         [](const ClassificationRecord& r) { return r.hausdorff; }},
        {"T3", "R", [](const ClassificationRecord& r) { return r.t3; },
         [](const ClassificationRecord& r) { return r.regular; }},
        {"T3", "T1/2_3", [](const ClassificationRecord& r) { return r.t3; },
         [](const ClassificationRecord& r) { return r.t12_3; }},
        {"R", "sR", [](const ClassificationRecord& r) { return r.regular; },
         [](const ClassificationRecord& r) { return r.semiregular; }},
        {"sM", "T2_1/2", [](const ClassificationRecord& r) { return r.submetrizable; },
         [](const ClassificationRecord& r) { return r.functionallyHausdorff; }},
        {"T2_1/2", "T2", [](const ClassificationRecord& r) { return r.functionallyHausdorff; },
         [](const ClassificationRecord& r) { return r.hausdorff; }},
        {"T3_1/2", "T2_1/2", [](const ClassificationRecord& r) { return r.tychonoff; },
         [](const ClassificationRecord& r) { return r.functionallyHausdorff; }},
        {"T3_1/2", "T3", [](const ClassificationRecord& r) { return r.tychonoff; },
         [](const ClassificationRecord& r) { return r.t3; }},
        {"T3_1/2", "R1/2", [](const ClassificationRecord& r) { return r.tychonoff; },
         [](const ClassificationRecord& r) { return r.completelyRegular; }},
        {"R1/2", "R", [](const ClassificationRecord& r) { return r.completelyRegular; },
         [](const ClassificationRecord& r) { return r.regular; }},
    };
    return arrows;
}

/// Name of the first violated arrow, if any.
inline std::optional<std::string> findDiagramViolation(const ClassificationRecord& rec) {
    for (const DiagramArrow& a : diagramArrows())
        if (a.fromFlag(rec) && !a.toFlag(rec))
            return std::string(a.from) + " => " + a.to;
    return std::nullopt;
}

inline bool verifyDiagram(const ClassificationRecord& rec) {
    return !findDiagramViolation(rec).has_value();
}

inline std::string classificationTsvHeader() {
    return "id\tn\tT0\tT1\tsH\tT2\tfH\tsR\tR\tcR\tT3\tT12_3\tT3_12\tsM\tnqu";
}

/// One TSV row per space: id, carrier size, then 0/1 flags in header order.
inline std::string classificationTsvRow(std::uint64_t id, int n,
                                        const ClassificationRecord& r) {
    auto b = [](bool v) { return v ? "1" : "0"; };
    std::string out = std::to_string(id) + "\t" + std::to_string(n);
    for (bool v : {r.t0, r.t1, r.semiHausdorff, r.hausdorff, r.functionallyHausdorff,
                   r.semiregular, r.regular, r.completelyRegular, r.t3, r.t12_3, r.tychonoff,
                   r.submetrizable})
        out += std::string("\t") + b(v);
    out += std::string("\t") + (r.normallyQuasiUniformizable ? b(*r.normallyQuasiUniformizable) : "-");
    return out;
}

}  // namespace qtop
