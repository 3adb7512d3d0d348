#include "cblock/fusion.hpp"

#include "cblock/error.hpp"
#include "cblock/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace cblock {

namespace {

Int round_checked(std::complex<double> z, double tol, double& residual, const char* what) {
    double r = std::round(z.real());
    residual = std::max(std::abs(z.real() - r), std::abs(z.imag()));
    if (!(residual < tol)) {
        std::ostringstream os;
        os << what << ": value " << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
           << "i is not within " << tol << " of an integer";
        throw RoundingError(os.str(), residual);
    }
    return static_cast<Int>(r);
}

}  // namespace

std::size_t FusionTable::index_of(const Weight& w) const {
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] == w) return i;
    throw InvalidInput("weight " + w.str() + " is not in the fusion table");
}

FusionRing::FusionRing(const RootSystem& rs, Int level)
    : FusionRing(orbit_algebra(rs, DiagramAutomorphism::trivial(rs.rank())), level, TorusMode::untwisted) {}

FusionRing::FusionRing(const OrbitData& od, Int level, TorusMode mode) : mode_(mode), level_(level), od_(od) {
    LevelWeights lw = level_weights(od.base, level, &od.autom);
    weights_ = mode == TorusMode::untwisted ? lw.all : lw.sigma_invariant;
    for (std::size_t i = 0; i < weights_.size(); ++i) index_.emplace(weights_[i], i);
    for (const auto& w : weights_) {
        auto it = index_.find(dualize(od.base, w));
        if (it == index_.end()) throw std::logic_error("alcove set is not closed under duality");
        dual_.push_back(it->second);
    }
    table_ = build_char_table(torus_group(od, level, mode));
}

std::size_t FusionRing::index_of(const Weight& w) const {
    if (w.size() != od_.base.rank()) throw InvalidInput("weight " + w.str() + " has the wrong rank");
    auto it = index_.find(w);
    if (it != index_.end()) return it->second;
    if (mode_ == TorusMode::twisted && !is_sigma_invariant(od_, w))
        throw InvalidInput("weight " + w.str() + " is not sigma-invariant");
    throw InvalidInput("weight " + w.str() + " is not in P_" + std::to_string(level_));
}

BlockValue FusionRing::evaluate(const BlockQuery& q, double tol) const { return evaluate_impl(q, tol, true); }

BlockValue FusionRing::evaluate_casimir_sum(const BlockQuery& q, double tol) const {
    return evaluate_impl(q, tol, false);
}

BlockValue FusionRing::evaluate_impl(const BlockQuery& q, double tol, bool closed_form) const {
    if (q.genus < 0) throw InvalidInput("genus must be nonnegative");
    std::vector<std::size_t> idx;
    for (const auto& w : q.weights) idx.push_back(index_of(w));
    std::complex<double> sum = 0;
    for (std::size_t p = 0; p < table_.points.size(); ++p) {
        std::complex<double> prod = 1;
        for (std::size_t i : idx) prod *= table_.values[p][i];
        const double c = closed_form ? table_.casimir[p].closed : table_.casimir[p].direct;
        sum += prod * std::pow(c, q.genus - 1);
    }
    BlockValue v;
    v.value = round_checked(sum, tol, v.residual, "block evaluation");
    v.torus_order = table_.spec.order;
    v.orbit_count = table_.points.size();
    return v;
}

BlockValue verlinde_dim(const RootSystem& rs, Int level, const BlockQuery& q, double tol) {
    BlockValue v = FusionRing(rs, level).evaluate(q, tol);
    if (v.value < 0) throw std::logic_error("negative conformal block dimension");
    return v;
}

BlockValue twisted_trace(const OrbitData& od, Int level, const BlockQuery& q, double tol) {
    return FusionRing(od, level, TorusMode::twisted).evaluate(q, tol);
}

FusionTable fusion_table(const FusionRing& ring, double tol) {
    FusionTable t;
    t.level = ring.level();
    t.mode = ring.mode();
    t.weights = ring.weights();
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) t.dual.push_back(ring.dual_index(i));
    t.coeffs.assign(n * n * n, 0);
    const CharTable& ct = ring.table();
    std::vector<double> w(ct.points.size());
    for (std::size_t p = 0; p < w.size(); ++p) w[p] = 1.0 / ct.casimir[p].closed;
    parallel_for(n * n, [&](std::size_t ij) {
        const std::size_t i = ij / n, j = ij % n;
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<double> s = 0;
            for (std::size_t p = 0; p < w.size(); ++p)
                s += w[p] * ct.values[p][i] * ct.values[p][j] * ct.values[p][k];
            double residual = 0;
            t.coeffs[ij * n + k] = round_checked(s, tol, residual, "fusion coefficient");
        }
    });
    return t;
}

FusionTable fusion_table(const OrbitData& od, Int level, TorusMode mode, double tol) {
    return fusion_table(FusionRing(od, level, mode), tol);
}

Int kac_watson_trace(const OrbitData& od, Int level, const Weight& lambda, const Weight& mu, const Weight& nu) {
    LevelWeights lw = level_weights(od.base, level, &od.autom);
    for (const Weight* w : {&lambda, &mu, &nu}) {
        if (!is_sigma_invariant(od, *w)) throw InvalidInput("weight " + w->str() + " is not sigma-invariant");
        if (std::find(lw.sigma_invariant.begin(), lw.sigma_invariant.end(), *w) == lw.sigma_invariant.end())
            throw InvalidInput("weight " + w->str() + " is not in P_" + std::to_string(level));
    }
    const RootSystem& gs = od.orbit_rs;
    const Weight target = iota(od, nu);
    AffineAction act = sigma_action(od, level);
    // W_a (x) W_b carries each W_kappa with multiplicity c; the invariants of
    // W_a (x) W_b (x) W_eta then have dimension c for eta = kappa*.
    Int total = 0;
    for (const auto& [kappa, c] : tensor_decompose(gs, iota(od, lambda), iota(od, mu))) {
        ReductionResult r = act.reduce(dualize(gs, kappa));
        if (r.on_wall || *r.reduced != target) continue;
        total += (r.parity == 0) ? c : -c;
    }
    return total;
}

Int twining_invariant_dim(const OrbitData& od, const std::vector<Weight>& weights) {
    const RootSystem& gs = od.orbit_rs;
    std::vector<Weight> a;
    for (const auto& w : weights) {
        if (!od.base.is_dominant(w)) throw InvalidInput("weight " + w.str() + " is not dominant");
        a.push_back(iota(od, w));
    }
    if (a.empty()) return 1;
    if (a.size() == 1) return a[0].is_zero() ? 1 : 0;
    std::map<Weight, Int> acc{{a[0], 1}};
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        std::map<Weight, Int> next;
        for (const auto& [kappa, c] : acc)
            for (const auto& [nu, m] : tensor_decompose(gs, kappa, a[i])) next[nu] += c * m;
        acc = std::move(next);
    }
    auto it = acc.find(dualize(gs, a.back()));
    return it == acc.end() ? 0 : it->second;
}

BlockValue higher_genus(const FusionRing& ring, const BlockQuery& q, double tol) {
    return ring.evaluate_casimir_sum(q, tol);
}

namespace {

Int recurse(const FusionTable& t, std::size_t zero, int genus, std::vector<std::size_t> pts) {
    const std::size_t n = t.size();
    if (genus > 0) {
        Int s = 0;
        for (std::size_t m = 0; m < n; ++m) {
            auto next = pts;
            next.push_back(m);
            next.push_back(t.dual[m]);
            s += recurse(t, zero, genus - 1, std::move(next));
        }
        return s;
    }
    switch (pts.size()) {
        case 0: return 1;
        case 1: return pts[0] == zero ? 1 : 0;
        case 2: return pts[1] == t.dual[pts[0]] ? 1 : 0;
        case 3: return t.at(pts[0], pts[1], pts[2]);
        default: break;
    }
    Int s = 0;
    for (std::size_t v = 0; v < n; ++v) {
        Int c = t.at(pts[0], pts[1], v);
        if (c == 0) continue;
        std::vector<std::size_t> rest{t.dual[v]};
        rest.insert(rest.end(), pts.begin() + 2, pts.end());
        s += c * recurse(t, zero, 0, std::move(rest));
    }
    return s;
}

}  // namespace

Int genus_recursion(const FusionTable& table, const BlockQuery& q) {
    if (q.genus < 0) throw InvalidInput("genus must be nonnegative");
    std::vector<std::size_t> pts;
    for (const auto& w : q.weights) pts.push_back(table.index_of(w));
    const std::size_t zero = table.index_of(Weight::zero(table.weights.front().size()));
    return recurse(table, zero, q.genus, std::move(pts));
}

InvariantDim invariant_dim(const OrbitData& od, Int level, const BlockQuery& q, double tol) {
    InvariantDim r;
    r.order = od.autom.order();
    r.dim = verlinde_dim(od.base, level, q, tol).value;
    r.trace = r.order == 1 ? r.dim : twisted_trace(od, level, q, tol).value;
    // For order 3 the traces of sigma and sigma^2 are complex conjugates; both
    // being integers forces them equal.
    const Int num = r.dim + (r.order - 1) * r.trace;
    if (num % r.order != 0)
        throw std::logic_error("dim + (r-1) tr = " + std::to_string(num) + " is not divisible by " +
                               std::to_string(r.order));
    r.value = num / r.order;
    if (r.value < 0 || r.value > r.dim) throw std::logic_error("invariant dimension out of range");
    return r;
}

SpCorrespondence sl_odd_sp_correspondence(Int level, int n, const BlockQuery& q, double tol) {
    if (level < 1 || level % 2 == 0) throw InvalidInput("the sl/sp correspondence needs an odd positive level");
    if (n < 1) throw InvalidInput("n must be positive");
    RootSystem sl = build_root_system(LieType::make(Family::A, 2 * n));
    OrbitData od = orbit_algebra(sl, DiagramAutomorphism::named(sl, "flip"));
    RootSystem sp = build_root_system(LieType::make(Family::C, n));
    BlockQuery folded{q.genus, {}};
    for (const auto& w : q.weights) folded.weights.push_back(iota(od, w));
    SpCorrespondence r;
    r.lhs = twisted_trace(od, level, q, tol).value;
    r.rhs = verlinde_dim(sp, (level - 1) / 2, folded, tol).value;
    r.equal = r.lhs == r.rhs;
    return r;
}

}  // namespace cblock
