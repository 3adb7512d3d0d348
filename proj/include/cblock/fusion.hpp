#pragma once

#include "cblock/alcove.hpp"
#include "cblock/orbitmap.hpp"
#include "cblock/torus.hpp"

#include <map>
#include <vector>

namespace cblock {

inline constexpr double kDefaultTolerance = 1e-6;

struct BlockQuery {
    int genus = 0;
    std::vector<Weight> weights;  // weights of g
};

struct BlockValue {
    Int value = 0;
    double residual = 0;      // distance of the complex sum from the reported integer
    Int torus_order = 0;
    std::size_t orbit_count = 0;
};

// Structure constants N(lambda, mu, nu) = trace (or dimension) on the genus-0
// three-point block; the product is lambda * mu = sum_nu N(lambda, mu, nu*) nu.
struct FusionTable {
    Int level = 0;
    TorusMode mode = TorusMode::untwisted;
    std::vector<Weight> weights;    // alcove set, weights of g
    std::vector<std::size_t> dual;  // index of lambda*
    std::vector<Int> coeffs;        // n^3, row-major

    std::size_t size() const { return weights.size(); }
    Int at(std::size_t i, std::size_t j, std::size_t k) const { return coeffs[(i * size() + j) * size() + k]; }
    std::size_t index_of(const Weight& w) const;
};

// Everything needed to evaluate blocks at one level: the alcove set, the
// character table at the regular torus orbits, and lambda -> lambda*.
class FusionRing {
public:
    FusionRing(const RootSystem& rs, Int level);
    FusionRing(const OrbitData& od, Int level, TorusMode mode);

    TorusMode mode() const { return mode_; }
    Int level() const { return level_; }
    const OrbitData& orbit_data() const { return od_; }
    const std::vector<Weight>& weights() const { return weights_; }
    std::size_t index_of(const Weight& w) const;  // throws InvalidInput outside the alcove set
    std::size_t dual_index(std::size_t i) const { return dual_[i]; }
    const CharTable& table() const { return table_; }

    // Character formula with the closed-form genus factor (|T| / Delta)^(g-1).
    BlockValue evaluate(const BlockQuery& q, double tol = kDefaultTolerance) const;
    // Same sum with the genus factor taken from the Casimir character sum.
    BlockValue evaluate_casimir_sum(const BlockQuery& q, double tol = kDefaultTolerance) const;

private:
    BlockValue evaluate_impl(const BlockQuery& q, double tol, bool closed_form) const;

    TorusMode mode_;
    Int level_;
    OrbitData od_;
    std::vector<Weight> weights_;
    std::map<Weight, std::size_t> index_;
    std::vector<std::size_t> dual_;
    CharTable table_;
};

BlockValue verlinde_dim(const RootSystem& rs, Int level, const BlockQuery& q, double tol = kDefaultTolerance);
BlockValue twisted_trace(const OrbitData& od, Int level, const BlockQuery& q, double tol = kDefaultTolerance);

FusionTable fusion_table(const FusionRing& ring, double tol = kDefaultTolerance);
FusionTable fusion_table(const OrbitData& od, Int level, TorusMode mode, double tol = kDefaultTolerance);

// Alternating sum over the sigma-fixed affine Weyl group of twining
// invariant dimensions; lambda, mu, nu are sigma-invariant weights of g in P_l.
Int kac_watson_trace(const OrbitData& od, Int level, const Weight& lambda, const Weight& mu, const Weight& nu);
// dim of g_sigma-invariants in W_iota(l1) (x) ... (x) W_iota(lk).
Int twining_invariant_dim(const OrbitData& od, const std::vector<Weight>& weights);

// Casimir-sum evaluation (see FusionRing::evaluate_casimir_sum).
BlockValue higher_genus(const FusionRing& ring, const BlockQuery& q, double tol = kDefaultTolerance);
// Evaluation from the three-point table alone: sew handles with sum_mu (mu, mu*)
// and split genus-0 blocks with four or more points through an intermediate weight.
Int genus_recursion(const FusionTable& table, const BlockQuery& q);

struct InvariantDim {
    Int value = 0;   // dimension of the sigma-invariant subspace
    Int dim = 0;
    Int trace = 0;
    int order = 1;
};
InvariantDim invariant_dim(const OrbitData& od, Int level, const BlockQuery& q, double tol = kDefaultTolerance);

// For odd level l, the trace of the diagram flip on sl_{2n+1} blocks against the
// dimension of sp_{2n} blocks at level (l-1)/2 with iota-transported weights.
struct SpCorrespondence {
    Int lhs = 0;
    Int rhs = 0;
    bool equal = false;
};
SpCorrespondence sl_odd_sp_correspondence(Int level, int n, const BlockQuery& q, double tol = kDefaultTolerance);

}  // namespace cblock
