#pragma once

// First-order Darboux engine: superpotential α1 = u0'/u0, partner potential
// V1 = V0 - 2 α1', the intertwiners A± = ∓d/dx + α1, and the missing state
// 1/u0 annihilated by A-.

#include "forge/grid.hpp"
#include "forge/jet.hpp"
#include "forge/schrodinger.hpp"

namespace forge {

struct SeedSolution {
    FnJet u0;
    double epsilon = 0.0;  // factorization energy: -u0'' + V0 u0 = ε u0
};

struct DarbouxPair {
    Potential V0;
    double epsilon = 0.0;
    FnJet alpha1;  // superpotential, full analytic jet
    FnJet V1;      // partner potential, full analytic jet
};

// α1 = u0'/u0 with analytic first derivative; throws with the location if u0
// has a node in [lo, hi]. The second derivative of the returned jet is
// numeric (the seed jet does not carry u0''').
FnJet superpotential(const SeedSolution& seed, double lo, double hi);

// Builds {V1, α1} from a nodeless seed. The seed is residual-checked against
// -u0'' + V0 u0 = ε u0 before use; derivatives of α1 and V1 are closed via
// that equation, so the returned jets are fully analytic.
DarbouxPair darboux_partner(const Potential& V0, const SeedSolution& seed,
                            double lo, double hi);

enum class Intertwine { Raise, Lower };

// Raise: A+ψ = -ψ' + α1 ψ (maps H0 solutions at λ to H1 solutions at λ).
// Lower: A-ψ =  ψ' + α1 ψ. Value and first derivative of the result are
// analytic; its second derivative is numeric.
FnJet apply_intertwiner(Intertwine dir, const FnJet& alpha1, const FnJet& psi);

// ψ_ε ∝ 1/u0, the H1 eigenfunction at the factorization energy.
FnJet missing_state(const SeedSolution& seed);

// Boundary decay heuristic for square integrability on [lo, hi]: |ψ| must
// shrink geometrically toward both ends.
bool is_normalizable(const FnJet& psi, double lo, double hi);

// max over the grid of |(H1 A+ - A+ H0) ψ|, all derivative applications to
// intermediate (non-jet) quantities done with Richardson finite differences.
double intertwining_residual(const DarbouxPair& pair, const FnJet& psi,
                             double lambda, const UniformGrid& grid);

}  // namespace forge
