#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staircase/engine.hpp"
#include "staircase/geometry.hpp"

namespace stair {

// A polygon together with a function supported in it of maximal vanishing
// order m at the all-ones point; space_dim is the dimension of the space of
// such functions.
struct Witness {
    LatticePolygon polygon;
    FiniteFn f;
    long m = 0;
    long space_dim = 0;
};

enum class VerdictStatus { irreducible, reducible, inconclusive };

struct Verdict {
    VerdictStatus status = VerdictStatus::inconclusive;
    std::optional<std::pair<LatticePolygon, LatticePolygon>> decomposition;
    std::string reason;
};

struct AtlasRow {
    LatticePolygon polygon; // canonical form
    long m = 0;
    Int two_vol;
    Witness witness;
    Verdict verdict;
};

struct AtlasResult {
    std::vector<AtlasRow> rows;
    std::vector<AtlasRow> inconclusive; // listed, never silently dropped
};

// Maximal-order function on P's lattice points, deterministically normalized:
// the value at the (y,x)-largest support point is 1 when possible.
Witness max_order_witness(const LatticePolygon& p);

// m^2 > 2*vol(NP(f)), exactly.
bool is_large(const Witness& w);

// Decomposition-based decision. Indecomposable Newton polytope means
// irreducible; with a one-dimensional top-order space, a decomposition whose
// s-values reach m realizes a factorization. Everything else is reported
// inconclusive rather than guessed.
Verdict decide_irreducible(const Witness& w);

AtlasResult atlas_search(long max_double_area);

// hull{(0,0), (r,0), (-1,r+2)}
LatticePolygon family_triangle(long r);

struct PrCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct PrReport {
    long r = 0;
    bool ok = false;
    std::vector<PrCheck> checks;
};

// Verifies the whole pipeline on the family triangle: staircase shape,
// witness order and support, largeness, irreducibility, and the mixed-volume
// equality against the next family member.
PrReport verify_pr(long r);

struct RelPrimeCheck {
    Int lhs; // |sm(f1)| * |sm(f2)|
    Int rhs; // 2*vol(NP(f1), NP(f2))
    bool holds = false;
};

// Caller certifies that f1, f2 are relatively prime.
RelPrimeCheck check_rel_prime_inequality(const FiniteFn& f1, const FiniteFn& f2);

} // namespace stair
