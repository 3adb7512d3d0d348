#pragma once

#include "cblock/orbitmap.hpp"
#include "cblock/rootlab.hpp"

#include <complex>
#include <string>
#include <vector>

namespace cblock {

enum class TorusMode { untwisted, twisted };
std::string to_string(TorusMode m);

// The finite group T = ((1/N) L^vee) / Q^vee, where L is the defining lattice
// and L^vee = { x : <beta, x> in Z for all beta in L }.
struct TorusSpec {
    TorusMode mode = TorusMode::untwisted;
    Int level = 0;
    Int denom = 1;                 // N = level + h^vee of g
    RootSystem rs;                 // g (untwisted) or g_sigma (twisted)
    IntMatrix lattice_basis;       // rows, fundamental-weight coordinates
    RatMatrix dual_basis;          // columns span L^vee, fundamental-coweight coordinates
    IntVec invariant_factors;      // T = prod Z/d_i
    Int order = 1;
    std::vector<Weight> alcove;    // P_l or iota(P_l^sigma), coordinates of rs
};

TorusSpec torus_group(const RootSystem& rs, Int level);
TorusSpec torus_group(const OrbitData& od, Int level, TorusMode mode);

// A point of T. Stores x in fundamental-coweight coordinates together with
// its simple-coroot coordinates y = A^{-1} x over a common denominator, so
// every exponent <mu, x> = mu . y_num / y_den is reduced exactly.
struct TorusPoint {
    Coweight x;
    IntVec y_num;
    Int y_den = 1;
};
TorusPoint make_point(const RootSystem& rs, const Coweight& x);

bool is_regular(const RootSystem& rs, const TorusPoint& t);
// Every point of T, as pairwise inequivalent representatives (y in [0,1)^r).
std::vector<TorusPoint> enumerate_torus(const TorusSpec& spec);

enum class OrbitMethod {
    automatic,   // ident parametrization when L^vee = P^vee, otherwise filter
    filter,      // scan (1/N) L^vee inside the open fundamental alcove
    ident,       // (mu^vee + rho^vee)/N for dominant coweights; needs L^vee = P^vee
};
bool dual_lattice_is_coweight_lattice(const TorusSpec& spec);
std::vector<TorusPoint> regular_orbit_reps(const TorusSpec& spec, OrbitMethod method = OrbitMethod::automatic);

// J(e^mu)(t) = sum_w sign(w) exp(2 pi i <w mu, x>)
std::complex<double> weyl_antisymmetrizer(const RootSystem& rs, const TorusPoint& t, const Weight& mu);
std::complex<double> char_value(const RootSystem& rs, const TorusPoint& t, const Weight& lambda);
// prod over all roots of (e^alpha(t) - 1). Throws InvalidInput at non-regular t.
double delta_value(const RootSystem& rs, const TorusPoint& t);

struct CasimirValue {
    double direct = 0;  // sum over the alcove set of |chi_lambda(t)|^2
    double closed = 0;  // |T| / Delta(t)
};

struct CharTable {
    TorusSpec spec;
    std::vector<TorusPoint> points;
    std::vector<std::vector<std::complex<double>>> values;  // [point][alcove index]
    std::vector<double> delta;
    std::vector<CasimirValue> casimir;
};
CharTable build_char_table(const TorusSpec& spec);
CasimirValue casimir_value(const CharTable& table, std::size_t point);

}  // namespace cblock
