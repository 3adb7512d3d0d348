#pragma once

#include "cblock/intmat.hpp"
#include "cblock/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cblock {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
    Family family = Family::A;
    int rank = 1;

    // Throws InvalidInput if the rank is impossible for the family.
    static LieType make(Family f, int rank);
    static LieType parse(std::string_view family, int rank);
    std::string name() const;
    friend bool operator==(const LieType&, const LieType&) = default;
};

// Integer coordinates in the fundamental-weight basis.
struct Weight {
    IntVec coords;

    Weight() = default;
    explicit Weight(IntVec c) : coords(std::move(c)) {}
    Weight(std::initializer_list<Int> c) : coords(c) {}
    static Weight zero(std::size_t rank) { return Weight(IntVec(rank, 0)); }

    std::size_t size() const { return coords.size(); }
    Int operator[](std::size_t i) const { return coords[i]; }
    Int& operator[](std::size_t i) { return coords[i]; }
    bool is_zero() const;

    Weight operator-() const;
    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    friend Weight operator*(Int k, const Weight& a);
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }

    std::string str() const;  // "(a,b,c)"
};

// Rational coordinates in the fundamental-coweight basis.
struct Coweight {
    RatVec coords;
    friend bool operator==(const Coweight&, const Coweight&) = default;
    friend auto operator<=>(const Coweight& a, const Coweight& b) { return a.coords <=> b.coords; }
    std::string str() const;
};

// Materialized Weyl group. Element k acts on fundamental-weight coordinates by
// the r x r matrix stored row-major in `matrix(k)`.
class WeylGroup {
public:
    std::size_t size() const { return lengths_.size(); }
    std::size_t rank() const { return rank_; }
    const Int* matrix(std::size_t k) const { return &mats_[k * rank_ * rank_]; }
    int length(std::size_t k) const { return lengths_[k]; }
    int sign(std::size_t k) const { return (lengths_[k] & 1) ? -1 : 1; }
    std::size_t longest() const { return longest_; }
    Weight apply(std::size_t k, const Weight& w) const;

private:
    friend class RootSystem;
    std::size_t rank_ = 0;
    std::vector<Int> mats_;
    std::vector<int> lengths_;
    std::size_t longest_ = 0;
};

class RootSystem {
public:
    static constexpr Int kMaxWeylOrder = 1'000'000;

    // Cartan matrix convention: a_ij = <alpha_i, alpha_j^vee>.
    static RootSystem from_cartan(const IntMatrix& cartan);

    const LieType& type() const { return type_; }
    std::size_t rank() const { return cartan_.size(); }
    const IntMatrix& cartan() const { return cartan_; }
    // (alpha_i, alpha_i)/2 normalised so that short roots have 1.
    const IntVec& symmetrizer() const { return sym_; }

    // Positive roots in simple-root coordinates, sorted by height, then lexicographically.
    const std::vector<IntVec>& positive_roots() const { return pos_; }
    // Coroot of each positive root in simple-coroot coordinates.
    const std::vector<IntVec>& positive_coroots() const { return pos_check_; }
    // Positive roots written in fundamental-weight coordinates.
    const std::vector<Weight>& positive_root_weights() const { return pos_w_; }
    // (alpha, alpha)/2 in the same normalisation as symmetrizer().
    Int root_half_norm(std::size_t k) const { return pos_norm_[k]; }
    bool is_long(std::size_t k) const { return pos_norm_[k] == max_norm_; }
    bool simply_laced() const { return max_norm_ == 1; }
    std::size_t root_count() const { return 2 * pos_.size(); }

    Weight simple_root(std::size_t i) const { return Weight(cartan_[i]); }
    Weight theta() const { return pos_w_.back(); }
    const IntVec& theta_root_coords() const { return pos_.back(); }
    // theta^vee in simple-coroot coordinates (the comarks).
    const IntVec& comarks() const { return pos_check_.back(); }
    Coweight theta_check() const;
    // Highest short root; equals theta when simply laced.
    std::size_t highest_short_index() const;
    Weight rho() const { return Weight(IntVec(rank(), 1)); }
    Int dual_coxeter() const;
    Int weyl_order() const { return weyl_order_; }
    Int fundamental_group_order() const;

    // <lambda, alpha_k^vee> for the k-th positive root.
    Int coroot_pairing(const Weight& w, std::size_t k) const;
    // Index of a positive root given in simple-root coordinates, or npos.
    std::size_t find_positive_root(const IntVec& root_coords) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Basis conversions. Coweights live in fundamental-coweight coordinates.
    // These two routines are the only place the Cartan matrix mixes bases.
    RatVec coweight_to_coroot_coords(const Coweight& x) const;      // y with x = A y
    Coweight coroot_coords_to_coweight(const IntVec& y) const;     // A y
    RatVec weight_to_root_coords(const Weight& w) const;            // c with w = sum c_i alpha_i
    Weight root_coords_to_weight(const IntVec& c) const;
    // <lambda, x>
    Rational pair(const Weight& w, const Coweight& x) const;
    // <alpha, x> for alpha given in simple-root coordinates.
    static Rational pair_root(const IntVec& root_coords, const Coweight& x);

    // Invariant symmetric form on weights, (alpha_i, alpha_i) = 2 d_i.
    Rational inner(const Weight& a, const Weight& b) const;
    const RatMatrix& cartan_inverse() const { return cartan_inv_; }

    Weight reflect(std::size_t i, const Weight& w) const;
    bool is_dominant(const Weight& w) const;
    // Dominant element of the W-orbit of w; `reflections` receives the number of
    // simple reflections used (its parity is the sign of the connecting element).
    Weight dominant_representative(const Weight& w, int* reflections = nullptr) const;

    // Throws Unsupported when |W| exceeds kMaxWeylOrder.
    const WeylGroup& weyl() const;

    // Memo table for dominant weight multiplicities, protected by a mutex.
    struct Cache;
    Cache& cache() const { return *cache_; }

private:
    LieType type_;
    IntMatrix cartan_;
    RatMatrix cartan_inv_;
    IntVec sym_;
    std::vector<IntVec> pos_;
    std::vector<IntVec> pos_check_;
    std::vector<Weight> pos_w_;
    IntVec pos_norm_;
    Int max_norm_ = 1;
    Int weyl_order_ = 1;
    RatMatrix form_;  // (omega_i, omega_j)
    std::shared_ptr<const WeylGroup> weyl_;
    std::shared_ptr<Cache> cache_;
};

RootSystem build_root_system(LieType t);
IntMatrix standard_cartan(LieType t);
// Identifies the Cartan type from generated root data; B2 and C2 are told
// apart by which simple root is long.
LieType classify_cartan(const IntMatrix& cartan);
Int closed_form_weyl_order(LieType t);

// Representation theory of the finite-dimensional simple modules V_lambda.
Int weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);
// Dominant weights of V_lambda with their multiplicities.
const std::map<Weight, Int>& dominant_character(const RootSystem& rs, const Weight& lambda);
// Every weight of V_lambda with multiplicity.
std::map<Weight, Int> full_character(const RootSystem& rs, const Weight& lambda);
// W-orbit of a weight (no multiplicities).
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);
Int weyl_dim(const RootSystem& rs, const Weight& lambda);
// V_lambda (x) V_mu as a map highest weight -> multiplicity.
std::map<Weight, Int> tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu);
Int tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu);
// -w0(lambda)
Weight dualize(const RootSystem& rs, const Weight& lambda);

// Result of conjugating lambda + rho into the dominant chamber.
struct DotReduction {
    bool on_wall = false;
    Weight dominant;  // w(lambda + rho) - rho, meaningful when !on_wall
    int reflections = 0;
};
DotReduction finite_dot_reduce(const RootSystem& rs, const Weight& lambda);

}  // namespace cblock
