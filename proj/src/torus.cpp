#include "cblock/torus.hpp"

#include "cblock/alcove.hpp"
#include "cblock/error.hpp"
#include "cblock/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cblock {

std::string to_string(TorusMode m) { return m == TorusMode::untwisted ? "untwisted" : "twisted"; }

namespace {

TorusSpec finish_spec(TorusMode mode, Int level, Int denom, RootSystem rs, IntMatrix basis, std::vector<Weight> alcove) {
    TorusSpec s;
    s.mode = mode;
    s.level = level;
    s.denom = denom;
    s.rs = std::move(rs);
    s.lattice_basis = std::move(basis);
    // L^vee = A B^{-1} Z^r, columns in coweight coordinates.
    s.dual_basis = multiply(to_rational(s.rs.cartan()), inverse(s.lattice_basis));
    IntMatrix nb = s.lattice_basis;
    for (auto& row : nb)
        for (auto& v : row) v *= denom;
    s.invariant_factors = smith_invariants(nb);
    s.order = 1;
    for (Int d : s.invariant_factors) s.order *= d;
    s.alcove = std::move(alcove);
    return s;
}

Int mod_pos(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct UnitTable {
    std::vector<std::complex<double>> z;
    explicit UnitTable(Int den) : z(static_cast<std::size_t>(den)) {
        for (Int k = 0; k < den; ++k) {
            double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(den);
            z[static_cast<std::size_t>(k)] = {std::cos(ang), std::sin(ang)};
        }
    }
    const std::complex<double>& operator()(Int k) const {
        return z[static_cast<std::size_t>(mod_pos(k, static_cast<Int>(z.size())))];
    }
};

// Per-point view of the Weyl group: u[w] satisfies <w mu, x> = mu . u[w] / y_den.
std::vector<IntVec> weyl_pullbacks(const WeylGroup& wg, const TorusPoint& t) {
    const std::size_t r = wg.rank();
    std::vector<IntVec> u(wg.size(), IntVec(r, 0));
    for (std::size_t k = 0; k < wg.size(); ++k) {
        const Int* m = wg.matrix(k);
        for (std::size_t j = 0; j < r; ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < r; ++i) s += m[i * r + j] * t.y_num[i];
            u[k][j] = mod_pos(s, t.y_den);
        }
    }
    return u;
}

std::complex<double> antisym(const WeylGroup& wg, const std::vector<IntVec>& u, const UnitTable& ut, const Weight& mu) {
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < wg.size(); ++k) {
        const auto& z = ut(dot(mu.coords, u[k]));
        if (wg.sign(k) > 0) acc += z;
        else acc -= z;
    }
    return acc;
}

void enumerate_alcove_numerators(const IntVec& theta, Int bound, std::size_t i, Int used, IntVec& cur,
                                 std::vector<IntVec>& out) {
    if (i == theta.size()) {
        out.push_back(cur);
        return;
    }
    // Remaining coordinates need at least theta_j each.
    Int rest = 0;
    for (std::size_t j = i + 1; j < theta.size(); ++j) rest += theta[j];
    for (Int v = 1; used + v * theta[i] + rest < bound; ++v) {
        cur[i] = v;
        enumerate_alcove_numerators(theta, bound, i + 1, used + v * theta[i], cur, out);
    }
}

bool in_scaled_dual(const TorusSpec& spec, const TorusPoint& t) {
    // x in (1/N) L^vee  <=>  N B y in Z^r.
    for (const auto& row : spec.lattice_basis) {
        __int128 s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += static_cast<__int128>(row[j]) * t.y_num[j];
        if ((s * spec.denom) % t.y_den != 0) return false;
    }
    return true;
}

}  // namespace

TorusSpec torus_group(const RootSystem& rs, Int level) {
    if (level < 0) throw InvalidInput("level must be nonnegative");
    return finish_spec(TorusMode::untwisted, level, level + rs.dual_coxeter(), rs, long_root_lattice(rs),
                       level_weights(rs, level).all);
}

TorusSpec torus_group(const OrbitData& od, Int level, TorusMode mode) {
    if (mode == TorusMode::untwisted) return torus_group(od.base, level);
    if (level < 0) throw InvalidInput("level must be nonnegative");
    std::vector<Weight> alcove;
    for (const auto& w : level_weights(od.base, level, &od.autom).sigma_invariant) alcove.push_back(iota(od, w));
    return finish_spec(TorusMode::twisted, level, level + od.base.dual_coxeter(), od.orbit_rs,
                       q_sigma_lattice(od, LatticeContext::twisted), std::move(alcove));
}

TorusPoint make_point(const RootSystem& rs, const Coweight& x) {
    if (x.coords.size() != rs.rank()) throw InvalidInput("torus point has wrong rank");
    TorusPoint t;
    t.x = x;
    RatVec y = rs.coweight_to_coroot_coords(x);
    t.y_den = 1;
    for (const auto& v : y) t.y_den = lcm_checked(t.y_den, v.den());
    for (const auto& v : y) t.y_num.push_back((v * Rational(t.y_den)).num());
    return t;
}

bool is_regular(const RootSystem& rs, const TorusPoint& t) {
    for (const auto& a : rs.positive_root_weights())
        if (mod_pos(dot(a.coords, t.y_num), t.y_den) == 0) return false;
    return true;
}

std::vector<TorusPoint> enumerate_torus(const TorusSpec& spec) {
    const std::size_t r = spec.rs.rank();
    const Int n = spec.denom;
    const IntMatrix& b = spec.lattice_basis;
    RatMatrix binv = inverse(b);
    // u = N B y for y in [0,1)^r; scan the bounding box of that parallelepiped.
    IntVec lo(r, 0), hi(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) (n * b[i][j] < 0 ? lo[i] : hi[i]) += n * b[i][j];
    std::vector<TorusPoint> out;
    IntVec u = lo;
    for (;;) {
        RatVec y = multiply(binv, RatVec(u.begin(), u.end()));
        bool inside = true;
        for (auto& v : y) {
            v /= Rational(n);
            if (v < Rational(0) || v >= Rational(1)) inside = false;
        }
        if (inside) out.push_back(make_point(spec.rs, Coweight{multiply(to_rational(spec.rs.cartan()), y)}));
        std::size_t i = 0;
        while (i < r && u[i] >= hi[i]) {
            u[i] = lo[i];
            ++i;
        }
        if (i == r) break;
        ++u[i];
    }
    return out;
}

bool dual_lattice_is_coweight_lattice(const TorusSpec& spec) {
    const IntMatrix& a = spec.rs.cartan();
    for (const auto& row : spec.lattice_basis)
        if (!in_row_lattice(a, row)) return false;
    return std::llabs(determinant(spec.lattice_basis)) == std::llabs(determinant(a));
}

std::vector<TorusPoint> regular_orbit_reps(const TorusSpec& spec, OrbitMethod method) {
    const IntVec& theta = spec.rs.theta_root_coords();
    const std::size_t r = spec.rs.rank();
    if (method == OrbitMethod::automatic)
        method = dual_lattice_is_coweight_lattice(spec) ? OrbitMethod::ident : OrbitMethod::filter;
    if (method == OrbitMethod::ident && !dual_lattice_is_coweight_lattice(spec))
        throw InvalidInput("ident parametrization needs the dual lattice to be the coweight lattice");

    // ident:  x = n / N with n = mu^vee + rho^vee.
    // filter: x = n / (N D) where D clears the denominators of L^vee, then test membership.
    const Int scale = method == OrbitMethod::ident ? 1 : common_denominator(spec.dual_basis);
    std::vector<IntVec> nums;
    IntVec cur(r, 1);
    enumerate_alcove_numerators(theta, spec.denom * scale, 0, 0, cur, nums);

    std::vector<TorusPoint> out;
    for (const auto& n : nums) {
        Coweight x;
        for (Int v : n) x.coords.emplace_back(v, spec.denom * scale);
        TorusPoint t = make_point(spec.rs, x);
        if (method == OrbitMethod::filter && !in_scaled_dual(spec, t)) continue;
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const TorusPoint& a, const TorusPoint& b) { return a.x < b.x; });
    return out;
}

std::complex<double> weyl_antisymmetrizer(const RootSystem& rs, const TorusPoint& t, const Weight& mu) {
    const WeylGroup& wg = rs.weyl();
    UnitTable ut(t.y_den);
    return antisym(wg, weyl_pullbacks(wg, t), ut, mu);
}

std::complex<double> char_value(const RootSystem& rs, const TorusPoint& t, const Weight& lambda) {
    if (!rs.is_dominant(lambda)) throw InvalidInput("char_value: weight " + lambda.str() + " is not dominant");
    if (!is_regular(rs, t)) throw InvalidInput("char_value: torus point " + t.x.str() + " is not regular");
    const WeylGroup& wg = rs.weyl();
    UnitTable ut(t.y_den);
    auto u = weyl_pullbacks(wg, t);
    return antisym(wg, u, ut, lambda + rs.rho()) / antisym(wg, u, ut, rs.rho());
}

double delta_value(const RootSystem& rs, const TorusPoint& t) {
    double prod = 1.0;
    for (const auto& a : rs.positive_root_weights()) {
        Int k = mod_pos(dot(a.coords, t.y_num), t.y_den);
        if (k == 0) throw InvalidInput("delta_value: torus point " + t.x.str() + " is not regular");
        double s = std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(t.y_den));
        prod *= 4.0 * s * s;
    }
    return prod;
}

CharTable build_char_table(const TorusSpec& spec) {
    CharTable table;
    table.spec = spec;
    table.points = regular_orbit_reps(spec);
    if (table.points.size() != spec.alcove.size())
        throw std::logic_error("regular orbit count " + std::to_string(table.points.size()) +
                               " differs from alcove size " + std::to_string(spec.alcove.size()));
    const std::size_t np = table.points.size();
    table.values.assign(np, {});
    table.delta.assign(np, 0.0);
    table.casimir.assign(np, {});
    const WeylGroup& wg = spec.rs.weyl();
    const Weight rho = spec.rs.rho();
    parallel_for(np, [&](std::size_t p) {
        const TorusPoint& t = table.points[p];
        UnitTable ut(t.y_den);
        auto u = weyl_pullbacks(wg, t);
        std::complex<double> denom = antisym(wg, u, ut, rho);
        auto& row = table.values[p];
        row.reserve(spec.alcove.size());
        double direct = 0;
        for (const auto& lam : spec.alcove) {
            row.push_back(antisym(wg, u, ut, lam + rho) / denom);
            direct += std::norm(row.back());
        }
        table.delta[p] = delta_value(spec.rs, t);
        table.casimir[p] = {direct, static_cast<double>(spec.order) / table.delta[p]};
    });
    return table;
}

CasimirValue casimir_value(const CharTable& table, std::size_t point) { return table.casimir.at(point); }

}  // namespace cblock
