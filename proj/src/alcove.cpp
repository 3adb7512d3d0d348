#include "cblock/alcove.hpp"

#include "cblock/error.hpp"

#include <algorithm>
#include <numeric>

namespace cblock {

namespace {

// Recursively enumerate nonnegative vectors with sum_i c_i x_i <= budget.
void enumerate_bounded(const IntVec& weights, Int budget, std::size_t i, IntVec& cur, std::vector<Weight>& out) {
    if (i == weights.size()) {
        out.emplace_back(cur);
        return;
    }
    for (Int v = 0; v * weights[i] <= budget; ++v) {
        cur[i] = v;
        enumerate_bounded(weights, budget - v * weights[i], i + 1, cur, out);
    }
    cur[i] = 0;
}

void graded_lex_sort(std::vector<Weight>& ws) {
    std::sort(ws.begin(), ws.end(), [](const Weight& a, const Weight& b) {
        Int sa = std::accumulate(a.coords.begin(), a.coords.end(), Int(0));
        Int sb = std::accumulate(b.coords.begin(), b.coords.end(), Int(0));
        if (sa != sb) return sa < sb;
        return a < b;
    });
}

// Smallest c > 0 with c * alpha in the lattice spanned by `basis` rows.
Rational lattice_multiple(const IntMatrix& basis, const Weight& alpha) {
    RatMatrix inv = inverse(basis);
    const std::size_t n = basis.size();
    RatVec v(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) v[j] += Rational(alpha.coords[i]) * inv[i][j];
    Int l = 1;
    for (const auto& x : v) l = lcm_checked(l, x.den());
    Int g = 0;
    for (const auto& x : v) g = std::gcd(g, (x * Rational(l)).num());
    return Rational(l, g);
}

}  // namespace

LevelWeights level_weights(const RootSystem& rs, Int level, const DiagramAutomorphism* sigma) {
    if (level < 0) throw InvalidInput("level must be nonnegative");
    LevelWeights lw;
    lw.level = level;
    IntVec cur(rs.rank(), 0);
    enumerate_bounded(rs.comarks(), level, 0, cur, lw.all);
    graded_lex_sort(lw.all);
    for (const auto& w : lw.all)
        if (!sigma || sigma->apply(w) == w) lw.sigma_invariant.push_back(w);
    return lw;
}

AffineAction::AffineAction(RootSystem rs, IntMatrix lattice_basis, Int shifted_level)
    : rs_(std::move(rs)), basis_(std::move(lattice_basis)), shifted_(shifted_level) {
    if (shifted_ <= 0) throw InvalidInput("shifted level must be positive");
    if (basis_.size() != rs_.rank() || determinant(basis_) == 0)
        throw InvalidInput("affine lattice must have full rank");
    for (const auto& a : rs_.positive_root_weights())
        spacing_.push_back(Rational(shifted_) * lattice_multiple(basis_, a));
}

bool AffineAction::in_lattice(const Weight& beta) const {
    IntVec scaled_check = beta.coords;
    for (const auto& v : scaled_check)
        if (v % shifted_ != 0) return false;
    for (auto& v : scaled_check) v /= shifted_;
    return in_row_lattice(basis_, scaled_check);
}

bool AffineAction::on_wall(const Weight& x) const {
    for (std::size_t k = 0; k < spacing_.size(); ++k) {
        Rational p(rs_.coroot_pairing(x, k));
        if ((p / spacing_[k]).is_integer()) return true;
    }
    return false;
}

bool AffineAction::in_open_alcove(const Weight& x) const {
    for (std::size_t k = 0; k < spacing_.size(); ++k) {
        Rational p(rs_.coroot_pairing(x, k));
        if (p <= Rational(0) || p >= spacing_[k]) return false;
    }
    return true;
}

ReductionResult AffineAction::reduce(const Weight& lambda) const {
    if (lambda.size() != rs_.rank()) throw InvalidInput("reduce: weight has wrong rank");
    ReductionResult r;
    const Weight rho = rs_.rho();
    Weight x = lambda + rho;
    if (on_wall(x)) {
        r.on_wall = true;
        return r;
    }
    int count = 0;
    for (;;) {
        int c = 0;
        x = rs_.dominant_representative(x, &c);
        count += c;
        // Most violated upper wall, lowest root index on ties.
        std::size_t best = spacing_.size();
        Rational excess(0);
        for (std::size_t k = 0; k < spacing_.size(); ++k) {
            Rational e = Rational(rs_.coroot_pairing(x, k)) - spacing_[k];
            if (e > excess) {
                excess = e;
                best = k;
            }
        }
        if (best == spacing_.size()) break;
        const Weight& a = rs_.positive_root_weights()[best];
        for (std::size_t i = 0; i < x.size(); ++i) {
            Rational nv = Rational(x.coords[i]) - excess * Rational(a.coords[i]);
            if (!nv.is_integer()) throw std::logic_error("affine reflection left the weight lattice");
            x.coords[i] = nv.num();
        }
        ++count;
    }
    r.reduced = x - rho;
    r.parity = count % 2;
    return r;
}

Weight AffineAction::star(const AffineElement& e, const Weight& lambda) const {
    if (lambda.size() != rs_.rank()) throw InvalidInput("star: weight has wrong rank");
    const Weight rho = rs_.rho();
    Weight x = lambda + rho;
    if (const auto* refl = std::get_if<AffineReflection>(&e)) {
        if (refl->root >= spacing_.size()) throw InvalidInput("star: root index out of range");
        if (!(refl->offset / spacing_[refl->root]).is_integer())
            throw InvalidInput("star: reflection offset is not a multiple of the wall spacing");
        const Weight& a = rs_.positive_root_weights()[refl->root];
        Rational d = Rational(rs_.coroot_pairing(x, refl->root)) - refl->offset;
        for (std::size_t i = 0; i < x.size(); ++i) {
            Rational nv = Rational(x.coords[i]) - d * Rational(a.coords[i]);
            if (!nv.is_integer()) throw std::logic_error("affine reflection left the weight lattice");
            x.coords[i] = nv.num();
        }
    } else {
        const auto& t = std::get<AffineTranslation>(e);
        if (!in_lattice(t.beta)) throw InvalidInput("star: translation " + t.beta.str() + " is not in the lattice");
        x = x + t.beta;
    }
    return x - rho;
}

std::vector<Weight> AffineAction::alcove_weights() const {
    const std::size_t n = rs_.rank();
    IntVec bound(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        const Rational& s = spacing_[rs_.find_positive_root(e)];
        // lambda_i + 1 < s
        bound[i] = (s - Rational(1)).floor();
        if ((s - Rational(1)).is_integer()) bound[i] -= 1;
    }
    std::vector<Weight> out;
    IntVec cur(n, 0);
    const Weight rho = rs_.rho();
    for (;;) {
        Weight w(cur);
        if (in_open_alcove(w + rho)) out.push_back(w);
        std::size_t i = 0;
        while (i < n && cur[i] >= bound[i]) cur[i++] = 0;
        if (i == n) break;
        ++cur[i];
    }
    graded_lex_sort(out);
    return out;
}

AffineAction untwisted_action(const RootSystem& rs, Int level) {
    if (level < 0) throw InvalidInput("level must be nonnegative");
    return AffineAction(rs, long_root_lattice(rs), level + rs.dual_coxeter());
}

AffineAction sigma_action(const OrbitData& od, Int level) {
    if (level < 0) throw InvalidInput("level must be nonnegative");
    return AffineAction(od.orbit_rs, q_sigma_lattice(od, LatticeContext::twisted), level + od.base.dual_coxeter());
}

Weight star_apply(const RootSystem& rs, Int level, const AffineElement& e, const Weight& lambda) {
    return untwisted_action(rs, level).star(e, lambda);
}

ReductionResult affine_reduce(const RootSystem& rs, Int level, const Weight& lambda) {
    return untwisted_action(rs, level).reduce(lambda);
}

ReductionResult sigma_affine_reduce(const OrbitData& od, Int level, const Weight& lambda) {
    if (!is_sigma_invariant(od, lambda)) throw InvalidInput("weight " + lambda.str() + " is not sigma-invariant");
    ReductionResult folded = sigma_action(od, level).reduce(iota(od, lambda));
    ReductionResult direct = affine_reduce(od.base, level, lambda);
    ReductionResult r;
    r.on_wall = folded.on_wall;
    if (!folded.on_wall) r.reduced = iota_inverse(od, *folded.reduced);
    r.parity = direct.parity;
    r.sigma_parity = folded.parity;
    return r;
}

int translation_parity(const OrbitData& od, Int level, const Weight& beta) {
    AffineAction act = sigma_action(od, level);
    if (!act.in_lattice(beta)) throw InvalidInput("translation " + beta.str() + " is not in the lattice");
    // rho_sigma + beta reduces to rho_sigma through exactly the translation.
    Weight zero = Weight::zero(act.root_system().rank());
    ReductionResult r = act.reduce(act.star(AffineTranslation{beta}, zero));
    if (r.on_wall || *r.reduced != zero) throw std::logic_error("translation did not return to the alcove origin");
    if (r.parity != 0) throw std::logic_error("odd-length translation in the folded affine Weyl group");
    return r.parity;
}

}  // namespace cblock
