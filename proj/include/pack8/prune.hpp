#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pack8/interval.hpp"
#include "pack8/layout.hpp"
#include "pack8/lp.hpp"

namespace pack8 {

// Branch-and-prune state for one embedding: an interval for the edge length
// psi (radians) and one interval per corner (units of pi, so vertex sums are
// exactly 2 and the LP stays rational).
struct AngleBox {
    Interval psi;
    std::vector<Interval> corner;
};

struct EliminationCert {
    std::string kind;             // "propagation" | "lp" | "stress"
    std::string detail;           // rule or face that fired
    AngleBox box;                 // box the certificate applies to
    std::vector<Rat> lambda;      // Farkas multipliers for kind == "lp"/"stress"
};

struct PruneConfig {
    Rat tol = Rat(1, 1000000);   // fixpoint shrink tolerance (radians)
    int max_rounds = 64;
    int propagation_sweeps = 6;
    int dyadic_bits = 96;
    bool both_wedge_sides = false;  // add LP rows for both wedge orientations
    int psi_split = 8;
    long node_budget = 200000;
};

struct TightenStats {
    int rounds = 0;
    long lp_solves = 0;
    bool stalled = false;
};

// Elimination engine for one embedding. Pure: all methods are const apart
// from statistics accumulation in the caller-provided structs.
class PruneEngine {
public:
    PruneEngine(const Embedding& e, const PruneConfig& cfg);

    const CornerLayout& layout() const { return layout_; }
    const PruneConfig& config() const { return cfg_; }

    AngleBox initial_box() const;

    // Interval propagation only (no LP): nullopt = eliminated.
    std::optional<AngleBox> propagate(AngleBox box, EliminationCert* cert) const;

    // The linear relaxation of the current box (spec'd rows: box bounds,
    // vertex sums, face sums, activated orderings, linearized path rows).
    LpModel build_lp(const AngleBox& box) const;

    // Alternate LP bound sweeps and propagation until quiescent.
    std::optional<AngleBox> tighten(AngleBox box, TightenStats* stats,
                                    std::vector<EliminationCert>* certs) const;

    // Extra per-node eliminator (the KKT stress test plugs in here). Returns
    // a certificate when the box is eliminated.
    using ExtraEliminator =
        std::function<std::optional<EliminationCert>(const PruneEngine&, const AngleBox&)>;

    struct BranchResult {
        bool survives = false;
        std::optional<AngleBox> hull;  // hull of surviving child boxes
        long nodes = 0;
        std::vector<EliminationCert> certs;
    };

    // Split psi into k equal parts, tighten each child, aggregate.
    BranchResult branch_psi(const AngleBox& box, int k, const ExtraEliminator& extra) const;

    // Bisect psi and every corner of one face: 2^(len+1) children.
    BranchResult branch_face(const AngleBox& box, int face, const ExtraEliminator& extra) const;

private:
    std::optional<AngleBox> tighten_node(AngleBox box, std::vector<EliminationCert>* certs,
                                         const ExtraEliminator& extra, long* nodes) const;

    CornerLayout layout_;
    PruneConfig cfg_;
};

// Serialization for verdict files and certificates.
std::string anglebox_to_json(const AngleBox& box);
AngleBox anglebox_from_json(const std::string& json);

}  // namespace pack8
