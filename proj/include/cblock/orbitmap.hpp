#pragma once

#include "cblock/rootlab.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cblock {

class DiagramAutomorphism {
public:
    static DiagramAutomorphism trivial(std::size_t rank);
    // perm[i] is the image of node i (0-based).
    static DiagramAutomorphism from_permutation(std::vector<std::size_t> perm);
    // "trivial", "flip" (A_n reversal, D_n swap of the two spin nodes, E6 involution)
    // or "d4rot" (order three rotation 1 -> 3 -> 4 -> 1 of D4).
    static DiagramAutomorphism named(const RootSystem& rs, std::string_view name);

    const std::vector<std::size_t>& perm() const { return perm_; }
    int order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }
    // Orbits sorted by their smallest node.
    const std::vector<std::vector<std::size_t>>& orbits() const { return orbits_; }
    Weight apply(const Weight& w) const;
    bool preserves(const IntMatrix& cartan) const;

private:
    std::vector<std::size_t> perm_;
    int order_ = 1;
    std::vector<std::vector<std::size_t>> orbits_;
};

enum class LatticeContext {
    untwisted,  // long-root lattice Q_l; with trivial sigma this is the classical theory
    twisted,    // iota(Q^sigma) inside P_sigma
};

struct OrbitData {
    RootSystem base;
    DiagramAutomorphism autom;
    RootSystem orbit_rs;
    std::vector<std::size_t> orbit_of;   // node -> orbit index
    std::vector<bool> connected;         // orbit contains an edge (only in A_2n)
    IntMatrix iota_matrix;               // r_sigma x r on weight coordinates
    IntMatrix iota_inv_matrix;           // r x r_sigma
    IntMatrix iota_check_matrix;         // r_sigma x r on coroot coordinates
    IntMatrix q_sigma_basis;             // rows: basis of iota(Q^sigma), weight coordinates of g_sigma
    bool is_A2n = false;
    std::string label;                   // type of g_sigma from the folding table, e.g. "C1"
};

OrbitData orbit_algebra(const RootSystem& rs, const DiagramAutomorphism& sigma);

bool is_sigma_invariant(const OrbitData& od, const Weight& w);
Weight iota(const OrbitData& od, const Weight& w);
Weight iota_inverse(const OrbitData& od, const Weight& w);
// Coroot coordinates of g -> coroot coordinates of g_sigma.
IntVec iota_check(const OrbitData& od, const IntVec& coroot_coords);

// iota^{-1}(alpha_orbit) in simple-root coordinates of g, one per orbit.
std::vector<IntVec> iota_root_images(const OrbitData& od);

// Folded Cartan matrix predicted by the orbit-size rule |i| a_ij on one adjacent
// pair. It agrees with orbit_rs.cartan() unless two adjacent orbits both have
// two nodes (A_{2n-1} with n >= 3, E6), where it counts the edge twice.
IntMatrix case_formula_cartan(const OrbitData& od);

struct HighestRootCorrespondence {
    Weight iota_theta;                 // weight coordinates of g_sigma
    IntVec iota_check_theta_check;     // coroot coordinates of g_sigma
};
HighestRootCorrespondence highest_root_correspondence(const OrbitData& od);

// Basis rows, in weight coordinates of g_sigma, of the lattice defining the
// affine Weyl group in the given context.
IntMatrix q_sigma_lattice(const OrbitData& od, LatticeContext ctx);
// Long-root lattice of any root system, as a basis in weight coordinates.
IntMatrix long_root_lattice(const RootSystem& rs);

}  // namespace cblock
