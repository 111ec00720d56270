#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtop/enumerate.hpp"
#include "qtop/quasi_uniformity.hpp"
#include "qtop/separation.hpp"

namespace qtop {

enum class CampaignKind { Diagram, Equi, Characterization, Count, P2, Monoreg, Qrl, Lvr };

inline const char* toString(CampaignKind k) {
    switch (k) {
        case CampaignKind::Diagram: return "diagram";
        case CampaignKind::Equi: return "equi";
        case CampaignKind::Characterization: return "characterization";
        case CampaignKind::Count: return "count";
        case CampaignKind::P2: return "p2";
        case CampaignKind::Monoreg: return "monoreg";
        case CampaignKind::Qrl: return "qrl";
        case CampaignKind::Lvr: return "lvr";
    }
    return "?";
}

inline std::optional<CampaignKind> parseCampaignKind(const std::string& s) {
    for (CampaignKind k : {CampaignKind::Diagram, CampaignKind::Equi,
                           CampaignKind::Characterization, CampaignKind::Count, CampaignKind::P2,
                           CampaignKind::Monoreg, CampaignKind::Qrl, CampaignKind::Lvr})
        if (s == toString(k)) return k;
    return std::nullopt;
}

/// Result of one exhaustive verification run. Everything serialized is
/// deterministic: fixed enumeration order, no timing content. The wall-clock
/// duration appears only in the human summary.
struct CampaignReport {
    std::string name;
    int maxSize = 0;
    std::vector<long> instanceCounts;       // per size, 1-based size = index+1
    std::vector<long> hypothesisMetCounts;  // monoid campaigns only
    std::vector<std::string> violations;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
    std::string tsv;
    double seconds = 0;

    std::string serialize() const {
        std::string out = "campaign\t" + name + "\nmaxSize\t" + std::to_string(maxSize) + "\n";
        for (std::size_t i = 0; i < instanceCounts.size(); ++i)
            out += "instances\tn=" + std::to_string(i + 1) + "\t" +
                   std::to_string(instanceCounts[i]) + "\n";
        for (std::size_t i = 0; i < hypothesisMetCounts.size(); ++i)
            out += "hypothesisMet\tn=" + std::to_string(i + 1) + "\t" +
                   std::to_string(hypothesisMetCounts[i]) + "\n";
        out += "violations\t" + std::to_string(violations.size()) + "\n";
        for (const std::string& v : violations) out += "violation\t" + v + "\n";
        for (const std::string& w : witnesses) out += "witness\t" + w + "\n";
        for (const std::string& nte : notes) out += "note\t" + nte + "\n";
        if (!tsv.empty()) out += tsv;
        return out;
    }

    std::string humanSummary() const {
        long total = 0;
        for (long c : instanceCounts) total += c;
        std::string out = "campaign " + name + " (sizes 1.." + std::to_string(maxSize) + "): " +
                          std::to_string(total) + " instances, " +
                          std::to_string(violations.size()) + " violations, " +
                          std::to_string(seconds) + " s\n";
        for (const std::string& v : violations) out += "  violation: " + v + "\n";
        for (const std::string& w : witnesses) out += "  witness: " + w + "\n";
        for (const std::string& nte : notes) out += "  note: " + nte + "\n";
        return out;
    }
};

namespace detail {

/// Witness targets of the non-implication search: the reversal of every
/// diagram arrow plus the free-standing combinations the reports track.
struct WitnessTarget {
    std::string label;
    std::function<bool(const ClassificationRecord&)> pred;
    bool provablyNoFiniteWitness;
    std::string rigidityReason;
};

inline bool inDiscreteClass(const std::string& axiom) {
    for (const char* a : {"T1", "T1/2_2", "T2", "T2_1/2", "T1/2_3", "T3", "T3_1/2", "sM"})
        if (axiom == a) return true;
    return false;
}

inline bool inPartitionClass(const std::string& axiom) {
    return axiom == "R" || axiom == "R1/2";
}

inline std::vector<WitnessTarget> witnessTargets() {
    std::vector<WitnessTarget> out;
    for (const DiagramArrow& a : diagramArrows()) {
        WitnessTarget t;
        t.label = std::string(a.to) + " without " + a.from;
        auto fromFlag = a.fromFlag;
        auto toFlag = a.toFlag;
        t.pred = [fromFlag, toFlag](const ClassificationRecord& r) {
            return toFlag(r) && !fromFlag(r);
        };
        if (inDiscreteClass(a.from) && inDiscreteClass(a.to)) {
            t.provablyNoFiniteWitness = true;
            t.rigidityReason = "finite spaces with either axiom are discrete";
        } else if (inPartitionClass(a.from) && inPartitionClass(a.to)) {
            t.provablyNoFiniteWitness = true;
            t.rigidityReason = "finite regular and finite completely regular spaces both "
                               "coincide with partition topologies";
        } else {
            t.provablyNoFiniteWitness = false;
        }
        out.push_back(std::move(t));
    }
    out.push_back({"R without T0",
                   [](const ClassificationRecord& r) { return r.regular && !r.t0; }, false, ""});
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace detail

/// Exhaustive search for a two-sided-family normality failure; the underlying
/// question is open, so the result is recorded, never asserted. Scans every
/// instance even after a hit so the reported counts stay exact.
struct LvRSearchResult {
    std::vector<long> rawPerSize;
    std::vector<long> hypothesisMetPerSize;
    std::optional<std::string> witness;
};

inline LvRSearchResult searchLvR(int maxN) {
    LvRSearchResult res;
    for (int size = 1; size <= maxN; ++size) {
        long raw = 0, met = 0;
        forEachTopMonoid(size, [&](const TopMonoidInstance& inst) {
            ++raw;
            if (!inst.continuousMultiplication || !inst.openShifts) return;
            ++met;
            if (res.witness) return;
            FiniteQuasiUniformity q = quBase(inst.monoid, QuKind::TwoSided);
            if (auto w = findNormalityViolation(q, inst.monoid.space()))
                res.witness = "n=" + std::to_string(size) + " table=" +
                              std::to_string(inst.tableCode) + " space=" +
                              std::to_string(inst.spaceCode) + " A=" + w->a.toString() +
                              " cl(A)=" + w->closureOfA.toString() + " escapes int cl ball = " +
                              w->interiorClosureBall.toString();
        });
        res.rawPerSize.push_back(raw);
        res.hypothesisMetPerSize.push_back(met);
    }
    return res;
}

inline CampaignReport runCampaign(CampaignKind kind, int n) {
    if (n < 1) throw DomainError("campaign size must be at least 1");
    if (n > kEnumerationCap)
        throw CapExceeded("campaigns capped at n = " + std::to_string(kEnumerationCap));
    detail::Timer timer;
    CampaignReport rep;
    rep.name = toString(kind);
    rep.maxSize = n;

    const bool spaceCampaign = kind == CampaignKind::Diagram || kind == CampaignKind::Equi ||
                               kind == CampaignKind::Characterization ||
                               kind == CampaignKind::Count;
    if (spaceCampaign) {
        auto targets = detail::witnessTargets();
        std::vector<std::optional<std::string>> found(targets.size());
        std::string rows;
        for (int size = 1; size <= n; ++size) {
            const auto spaces = enumerateSpaces(size);
            rep.instanceCounts.push_back(static_cast<long>(spaces.size()));
            for (const FinSpace& s : spaces) {
                const std::uint64_t id = s.minimalOpenRelation().encode();
                ClassificationRecord rec = classifyFull(s);
                const std::string tag = "n=" + std::to_string(size) + " id=" + std::to_string(id);
                switch (kind) {
                    case CampaignKind::Diagram:
                        if (auto v = findDiagramViolation(rec))
                            rep.violations.push_back(tag + " violates " + *v);
                        for (std::size_t t = 0; t < targets.size(); ++t)
                            if (!found[t] && targets[t].pred(rec)) found[t] = tag;
                        break;
                    case CampaignKind::Equi:
                        if (*rec.normallyQuasiUniformizable) {
                            bool regChain = rec.semiregular == rec.regular &&
                                            rec.regular == rec.completelyRegular;
                            bool hausChain = rec.semiHausdorff == rec.hausdorff &&
                                             rec.hausdorff == rec.functionallyHausdorff;
                            if (!regChain)
                                rep.violations.push_back(
                                    tag + " breaks semiregular=regular=completely-regular");
                            if (!hausChain)
                                rep.violations.push_back(
                                    tag + " breaks semi-Hausdorff=Hausdorff=functionally-Hausdorff");
                        }
                        break;
                    case CampaignKind::Characterization:
                        if (rec.semiregular &&
                            rec.completelyRegular != *rec.normallyQuasiUniformizable)
                            rep.violations.push_back(
                                tag + " semiregular but completely-regular disagrees with "
                                      "normal quasi-uniformizability");
                        break;
                    case CampaignKind::Count:
                    default:
                        break;
                }
                if (kind != CampaignKind::Count)
                    rows += classificationTsvRow(id, size, rec) + "\n";
            }
        }
        if (kind == CampaignKind::Diagram) {
            for (std::size_t t = 0; t < targets.size(); ++t) {
                if (targets[t].provablyNoFiniteWitness) {
                    if (found[t])
                        rep.violations.push_back("rigidity broken: witness for " +
                                                 targets[t].label + " at " + *found[t]);
                    rep.witnesses.push_back(targets[t].label + ": provably no finite witness (" +
                                            targets[t].rigidityReason + ")");
                } else if (found[t]) {
                    rep.witnesses.push_back(targets[t].label + ": " + *found[t]);
                } else {
                    rep.witnesses.push_back(targets[t].label + ": none found for n <= " +
                                            std::to_string(n));
                }
            }
        }
        if (kind != CampaignKind::Count) rep.tsv = classificationTsvHeader() + "\n" + rows;
    } else {
        // Monoid campaigns. For qrl the hypothesis column counts
        // paratopological groups instead of open-shift monoids.
        for (int size = 1; size <= n; ++size) {
            long raw = 0, met = 0;
            forEachTopMonoid(size, [&](const TopMonoidInstance& inst) {
                ++raw;
                const bool hypothesis = inst.continuousMultiplication && inst.openShifts;
                if (kind != CampaignKind::Qrl && hypothesis) ++met;
                const std::string tag = "n=" + std::to_string(size) + " table=" +
                                        std::to_string(inst.tableCode) + " space=" +
                                        std::to_string(inst.spaceCode);
                switch (kind) {
                    case CampaignKind::P2: {
                        if (!hypothesis) break;
                        P2Report p2 = checkP2(inst.monoid);
                        if (!p2.pass()) {
                            std::string why;
                            auto add = [&](bool ok, const char* what) {
                                if (!ok) why += std::string(" ") + what;
                            };
                            add(p2.leftNormal, "left-not-normal");
                            add(p2.rightNormal, "right-not-normal");
                            add(p2.roelckeNormal, "roelcke-not-normal");
                            add(p2.leftRegenerates, "left-topology-differs");
                            add(p2.rightRegenerates, "right-topology-differs");
                            add(p2.twoSidedRegenerates, "two-sided-topology-differs");
                            add(p2.roelckeRegenerates, "roelcke-topology-differs");
                            add(p2.quasiRoelckeSymmetric, "quasi-roelcke-not-symmetric");
                            add(p2.quasiRoelckeCoarser, "quasi-roelcke-not-coarser");
                            rep.violations.push_back(tag + why);
                        }
                        break;
                    }
                    case CampaignKind::Monoreg: {
                        if (!hypothesis) break;
                        ClassificationRecord rec = classify(inst.monoid.space());
                        if (!(rec.semiregular == rec.regular &&
                              rec.regular == rec.completelyRegular))
                            rep.violations.push_back(tag + " breaks the regularity chain");
                        if (!(rec.semiHausdorff == rec.hausdorff &&
                              rec.hausdorff == rec.functionallyHausdorff))
                            rep.violations.push_back(tag + " breaks the Hausdorff chain");
                        break;
                    }
                    case CampaignKind::Qrl: {
                        const TopMonoid& m = inst.monoid;
                        if (!isGroupTable(size, m.data().table) ||
                            !inst.continuousMultiplication)
                            break;
                        ++met;
                        if (!inst.openShifts) {
                            rep.violations.push_back(tag +
                                                     " paratopological group without open shifts");
                            break;
                        }
                        // Prove the group is topological: the minimal open of
                        // the unit is a subgroup and inversion is continuous.
                        PointSet ue = m.space().minimalOpen(m.unit());
                        auto inverseOf = [&](int a) {
                            for (int b = 0; b < size; ++b)
                                if (m.mul(a, b) == m.unit()) return b;
                            return -1;
                        };
                        bool subgroup = true;
                        for (int u : ue) {
                            if (!ue.contains(inverseOf(u))) subgroup = false;
                            for (int v : ue)
                                if (!ue.contains(m.mul(u, v))) subgroup = false;
                        }
                        bool inversionContinuous = true;
                        for (PointSet o : m.space().allOpens()) {
                            PointSet pre;
                            for (int x = 0; x < size; ++x)
                                if (o.contains(inverseOf(x))) pre = pre.with(x);
                            if (!m.space().isOpen(pre)) inversionContinuous = false;
                        }
                        if (!subgroup || !inversionContinuous) {
                            rep.violations.push_back(tag + " is not a topological group");
                            break;
                        }
                        if (!(quBase(m, QuKind::QuasiRoelcke).minimal() ==
                              quBase(m, QuKind::Roelcke).minimal()))
                            rep.violations.push_back(
                                tag + " quasi-Roelcke and Roelcke minimal entourages differ");
                        break;
                    }
                    default:
                        break;
                }
            });
            rep.instanceCounts.push_back(raw);
            rep.hypothesisMetCounts.push_back(met);
        }
        if (kind == CampaignKind::Lvr) {
            LvRSearchResult lvr = searchLvR(n);
            if (lvr.witness)
                rep.witnesses.push_back("two-sided normality failure: " + *lvr.witness);
            else
                rep.witnesses.push_back("two-sided normality failure: none found for n <= " +
                                        std::to_string(n));
            rep.notes.push_back(
                "two-sided normality is an open question; this campaign records, it never asserts");
        }
    }

    rep.seconds = timer.seconds();
    return rep;
}

}  // namespace qtop
