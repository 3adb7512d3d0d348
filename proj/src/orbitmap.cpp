#include "cblock/orbitmap.hpp"

#include "cblock/error.hpp"

#include <algorithm>
#include <numeric>

namespace cblock {

DiagramAutomorphism DiagramAutomorphism::trivial(std::size_t rank) {
    std::vector<std::size_t> p(rank);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return from_permutation(std::move(p));
}

DiagramAutomorphism DiagramAutomorphism::from_permutation(std::vector<std::size_t> perm) {
    const std::size_t n = perm.size();
    std::vector<bool> hit(n, false);
    for (std::size_t v : perm) {
        if (v >= n || hit[v]) throw InvalidInput("diagram automorphism is not a permutation");
        hit[v] = true;
    }
    DiagramAutomorphism a;
    a.perm_ = std::move(perm);
    std::vector<bool> seen(n, false);
    int order = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orb;
        for (std::size_t j = i; !seen[j]; j = a.perm_[j]) {
            seen[j] = true;
            orb.push_back(j);
        }
        std::sort(orb.begin(), orb.end());
        order = std::lcm(order, static_cast<int>(orb.size()));
        a.orbits_.push_back(std::move(orb));
    }
    // Discovery order is by smallest unseen node, so orbits are already sorted by minimum.
    a.order_ = order;
    return a;
}

DiagramAutomorphism DiagramAutomorphism::named(const RootSystem& rs, std::string_view name) {
    const std::size_t n = rs.rank();
    const LieType t = rs.type();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    if (name == "trivial") {
        // identity
    } else if (name == "flip") {
        if (t.family == Family::A) {
            for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
        } else if (t.family == Family::D && n >= 4) {
            std::swap(p[n - 2], p[n - 1]);
        } else if (t.family == Family::E && n == 6) {
            std::swap(p[0], p[5]);
            std::swap(p[2], p[4]);
        } else {
            throw InvalidInput("sigma 'flip' is not defined for " + t.name());
        }
    } else if (name == "d4rot") {
        if (!(t.family == Family::D && n == 4)) throw InvalidInput("sigma 'd4rot' requires D4");
        p = {2, 1, 3, 0};
    } else {
        throw InvalidInput("unknown sigma '" + std::string(name) + "' (expected trivial, flip or d4rot)");
    }
    DiagramAutomorphism a = from_permutation(std::move(p));
    if (!a.preserves(rs.cartan())) throw InvalidInput("sigma does not preserve the Cartan matrix");
    return a;
}

Weight DiagramAutomorphism::apply(const Weight& w) const {
    Weight out = w;
    for (std::size_t i = 0; i < perm_.size(); ++i) out.coords[perm_[i]] = w.coords[i];
    return out;
}

bool DiagramAutomorphism::preserves(const IntMatrix& a) const {
    if (a.size() != perm_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[perm_[i]][perm_[j]] != a[i][j]) return false;
    return true;
}

IntMatrix long_root_lattice(const RootSystem& rs) {
    IntMatrix gens;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
        if (rs.is_long(k)) gens.push_back(rs.positive_root_weights()[k].coords);
    return hermite_basis(gens);
}

namespace {

std::string folded_label(const RootSystem& base, const DiagramAutomorphism& s, std::size_t folded_rank) {
    if (s.is_trivial()) return base.type().name();
    const std::string k = std::to_string(folded_rank);
    switch (base.type().family) {
        case Family::A: return (base.rank() % 2 == 1 ? "B" : "C") + k;
        case Family::D: return s.order() == 3 ? "G2" : "C" + k;
        case Family::E: return "F4";
        default: return "?";
    }
}

}  // namespace

OrbitData orbit_algebra(const RootSystem& rs, const DiagramAutomorphism& sigma) {
    if (sigma.perm().size() != rs.rank()) throw InvalidInput("sigma has the wrong number of nodes");
    if (!sigma.preserves(rs.cartan())) throw InvalidInput("sigma does not preserve the Cartan matrix");

    const std::size_t n = rs.rank();
    const auto& orbits = sigma.orbits();
    const std::size_t m = orbits.size();
    const IntMatrix& a = rs.cartan();

    OrbitData od{rs, sigma, rs, {}, {}, {}, {}, {}, {}, false, ""};
    od.orbit_of.assign(n, 0);
    for (std::size_t o = 0; o < m; ++o)
        for (std::size_t i : orbits[o]) od.orbit_of[i] = o;

    // An orbit is connected when two of its nodes are joined by an edge;
    // among diagram foldings of simple types this only happens in A_2n.
    od.connected.assign(m, false);
    for (std::size_t o = 0; o < m; ++o)
        for (std::size_t i : orbits[o])
            for (std::size_t j : orbits[o])
                if (i != j && a[i][j] != 0) od.connected[o] = true;
    od.is_A2n = std::any_of(od.connected.begin(), od.connected.end(), [](bool b) { return b; });

    // Folded Cartan matrix: row o holds the fundamental-weight coordinates of
    // iota^{-1}(alpha_o), read off at any node of the target orbit.
    IntMatrix folded(m, IntVec(m, 0));
    for (std::size_t o = 0; o < m; ++o) {
        const Int c = od.connected[o] ? 2 : 1;
        for (std::size_t p = 0; p < m; ++p) {
            const std::size_t j = orbits[p].front();
            Int s = 0;
            for (std::size_t i : orbits[o]) s += a[i][j];
            folded[o][p] = c * s;
        }
    }
    od.orbit_rs = RootSystem::from_cartan(folded);

    od.iota_matrix.assign(m, IntVec(n, 0));
    od.iota_inv_matrix.assign(n, IntVec(m, 0));
    od.iota_check_matrix.assign(m, IntVec(n, 0));
    for (std::size_t o = 0; o < m; ++o) {
        od.iota_matrix[o][orbits[o].front()] = 1;
        for (std::size_t i : orbits[o]) {
            od.iota_inv_matrix[i][o] = 1;
            od.iota_check_matrix[o][i] = 1;
        }
    }
    od.label = folded_label(rs, sigma, m);
    od.q_sigma_basis = q_sigma_lattice(od, LatticeContext::twisted);
    return od;
}

bool is_sigma_invariant(const OrbitData& od, const Weight& w) {
    return w.size() == od.base.rank() && od.autom.apply(w) == w;
}

Weight iota(const OrbitData& od, const Weight& w) {
    if (!is_sigma_invariant(od, w)) throw InvalidInput("weight " + w.str() + " is not sigma-invariant");
    return Weight(multiply(od.iota_matrix, w.coords));
}

Weight iota_inverse(const OrbitData& od, const Weight& w) {
    if (w.size() != od.orbit_rs.rank()) throw InvalidInput("iota_inverse: weight has wrong rank");
    return Weight(multiply(od.iota_inv_matrix, w.coords));
}

IntVec iota_check(const OrbitData& od, const IntVec& y) { return multiply(od.iota_check_matrix, y); }

std::vector<IntVec> iota_root_images(const OrbitData& od) {
    std::vector<IntVec> out;
    const auto& orbits = od.autom.orbits();
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        IntVec c(od.base.rank(), 0);
        for (std::size_t i : orbits[o]) c[i] = od.connected[o] ? 2 : 1;
        out.push_back(std::move(c));
    }
    return out;
}

IntMatrix case_formula_cartan(const OrbitData& od) {
    const auto& orbits = od.autom.orbits();
    const std::size_t m = orbits.size();
    const IntMatrix& a = od.base.cartan();
    IntMatrix out(m, IntVec(m, 2));
    for (std::size_t o = 0; o < m; ++o)
        for (std::size_t p = 0; p < m; ++p) {
            if (o == p) continue;
            Int aij = 0;
            for (std::size_t i : orbits[o])
                for (std::size_t j : orbits[p])
                    if (a[i][j] != 0) aij = a[i][j];
            const Int size = static_cast<Int>(orbits[o].size());
            out[o][p] = (od.is_A2n && !od.connected[o]) ? size * aij / 2 : size * aij;
        }
    return out;
}

HighestRootCorrespondence highest_root_correspondence(const OrbitData& od) {
    if (od.autom.is_trivial()) throw InvalidInput("highest_root_correspondence requires a nontrivial sigma");
    HighestRootCorrespondence h;
    h.iota_theta = iota(od, od.base.theta());
    h.iota_check_theta_check = iota_check(od, od.base.comarks());
    return h;
}

IntMatrix q_sigma_lattice(const OrbitData& od, LatticeContext ctx) {
    if (ctx == LatticeContext::untwisted || od.autom.is_trivial()) return long_root_lattice(od.orbit_rs);
    // Q^sigma is spanned by the orbit sums of simple roots.
    IntMatrix gens;
    for (const auto& orb : od.autom.orbits()) {
        IntVec c(od.base.rank(), 0);
        for (std::size_t i : orb) c[i] = 1;
        gens.push_back(iota(od, od.base.root_coords_to_weight(c)).coords);
    }
    return hermite_basis(gens);
}

}  // namespace cblock
