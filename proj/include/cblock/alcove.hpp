#pragma once

#include "cblock/orbitmap.hpp"
#include "cblock/rootlab.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace cblock {

struct LevelWeights {
    Int level = 0;
    std::vector<Weight> all;              // P_l, graded lexicographic order
    std::vector<Weight> sigma_invariant;  // the sigma-fixed sublist (all of P_l without sigma)
};

// Dominant weights with <lambda, theta^vee> <= level.
LevelWeights level_weights(const RootSystem& rs, Int level, const DiagramAutomorphism* sigma = nullptr);

struct ReductionResult {
    bool on_wall = false;
    std::optional<Weight> reduced;
    int parity = 0;                    // number of reflections used, mod 2
    std::optional<int> sigma_parity;   // same count on the folded side
};

// s_{alpha, offset}: x -> x - (<x, alpha^vee> - offset) alpha, acting on x = lambda + rho.
struct AffineReflection {
    std::size_t root = 0;  // index into positive_roots()
    Rational offset;
};
struct AffineTranslation {
    Weight beta;
};
using AffineElement = std::variant<AffineReflection, AffineTranslation>;

// The group W x| N.M acting on weights by the shifted (dot) action, where M is
// a full-rank lattice given by basis rows in fundamental-weight coordinates.
class AffineAction {
public:
    AffineAction(RootSystem rs, IntMatrix lattice_basis, Int shifted_level);

    const RootSystem& root_system() const { return rs_; }
    const IntMatrix& lattice_basis() const { return basis_; }
    Int shifted_level() const { return shifted_; }
    // For positive root k, affine walls sit at <x, alpha_k^vee> in spacing(k) * Z.
    const Rational& spacing(std::size_t k) const { return spacing_[k]; }

    bool in_lattice(const Weight& beta) const;  // beta in N.M
    bool on_wall(const Weight& shifted) const;  // shifted = lambda + rho
    bool in_open_alcove(const Weight& shifted) const;
    ReductionResult reduce(const Weight& lambda) const;
    Weight star(const AffineElement& e, const Weight& lambda) const;
    // Weights lambda with lambda + rho in the open alcove.
    std::vector<Weight> alcove_weights() const;

private:
    RootSystem rs_;
    IntMatrix basis_;
    Int shifted_;
    std::vector<Rational> spacing_;
};

// W x| (l + h^vee) Q_l on g itself.
AffineAction untwisted_action(const RootSystem& rs, Int level);
// W_sigma x| (l + h^vee(g)) iota(Q^sigma) on g_sigma.
AffineAction sigma_action(const OrbitData& od, Int level);

Weight star_apply(const RootSystem& rs, Int level, const AffineElement& e, const Weight& lambda);
ReductionResult affine_reduce(const RootSystem& rs, Int level, const Weight& lambda);
// lambda is a sigma-invariant weight of g. The reduction runs on the g_sigma side;
// `parity` comes from the direct reduction on g and `reduced` is mapped back to g.
ReductionResult sigma_affine_reduce(const OrbitData& od, Int level, const Weight& lambda);
// Parity of the length of translation by beta (weight coordinates of g_sigma,
// beta in (l + h^vee) iota(Q^sigma)). Throws std::logic_error if it comes out odd.
int translation_parity(const OrbitData& od, Int level, const Weight& beta);

}  // namespace cblock
