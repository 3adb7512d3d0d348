#include "cblock/rootlab.hpp"

#include "cblock/error.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cblock {

struct RootSystem::Cache {
    std::mutex mutex;
    std::map<Weight, std::map<Weight, Int>> dominant_chars;
};

// ---------------------------------------------------------------- LieType ---

LieType LieType::make(Family f, int rank) {
    bool ok = false;
    switch (f) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 1; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok)
        throw InvalidInput("invalid rank " + std::to_string(rank) + " for type " +
                           std::string(1, static_cast<char>(f)));
    return LieType{f, rank};
}

LieType LieType::parse(std::string_view family, int rank) {
    if (family.size() != 1) throw InvalidInput("type must be one of A..G");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
    if (c < 'A' || c > 'G') throw InvalidInput("type must be one of A..G");
    return make(static_cast<Family>(c), rank);
}

std::string LieType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

// ----------------------------------------------------------------- Weight ---

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Int v) { return v == 0; });
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& v : r.coords) v = -v;
    return r;
}

Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

Weight operator*(Int k, const Weight& a) {
    Weight r = a;
    for (auto& v : r.coords) v *= k;
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
}

std::string Coweight::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
}

Weight WeylGroup::apply(std::size_t k, const Weight& w) const {
    const Int* m = matrix(k);
    Weight out = Weight::zero(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < rank_; ++j) s += m[i * rank_ + j] * w.coords[j];
        out.coords[i] = s;
    }
    return out;
}

// ------------------------------------------------------------ Cartan data ---

IntMatrix standard_cartan(LieType t) {
    t = LieType::make(t.family, t.rank);
    const std::size_t n = static_cast<std::size_t>(t.rank);
    IntMatrix a(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Family::B:
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;  // alpha_n short
            break;
        case Family::C:
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            if (n >= 2) a[n - 1][n - 2] = -2;  // alpha_n long
            break;
        case Family::D:
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case Family::E:
            link(0, 2);
            link(1, 3);
            for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Family::F:
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[1][2] = -2;
            break;
        case Family::G:
            a[0][1] = -1;
            a[1][0] = -3;
            break;
    }
    return a;
}

Int closed_form_weyl_order(LieType t) {
    auto fact = [](Int k) { Int f = 1; for (Int i = 2; i <= k; ++i) f *= i; return f; };
    const Int n = t.rank;
    switch (t.family) {
        case Family::A: return fact(n + 1);
        case Family::B:
        case Family::C: return (Int(1) << n) * fact(n);
        case Family::D: return (Int(1) << (n - 1)) * fact(n);
        case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

namespace {

IntVec compute_symmetrizer(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<Rational> d(n, Rational(0));
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> q{0};
    d[0] = 1;
    seen[0] = true;
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || a[i][j] == 0) continue;
            if (a[j][i] == 0) throw InvalidInput("Cartan matrix is not symmetrizable");
            Rational dj = d[i] * Rational(a[j][i], a[i][j]);
            if (!seen[j]) {
                d[j] = dj;
                seen[j] = true;
                q.push_back(j);
            } else if (d[j] != dj) {
                throw InvalidInput("Cartan matrix is not symmetrizable");
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw InvalidInput("Dynkin diagram is not connected");
    Rational mn = *std::min_element(d.begin(), d.end());
    IntVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational r = d[i] / mn;
        if (!r.is_integer()) throw InvalidInput("unexpected root length ratio");
        out[i] = r.num();
    }
    return out;
}

void validate_cartan(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) throw InvalidInput("empty Cartan matrix");
    for (const auto& row : a)
        if (row.size() != n) throw InvalidInput("Cartan matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && a[i][j] != 2) throw InvalidInput("Cartan diagonal must be 2");
            if (i != j && a[i][j] > 0) throw InvalidInput("Cartan off-diagonal must be nonpositive");
            if (i != j && (a[i][j] == 0) != (a[j][i] == 0)) throw InvalidInput("Cartan zero pattern not symmetric");
        }
}

struct VecHash {
    std::size_t operator()(const IntVec& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

LieType classify_cartan(const IntMatrix& a) {
    RootSystem rs = RootSystem::from_cartan(a);
    return rs.type();
}

// ------------------------------------------------------------ RootSystem ---

RootSystem RootSystem::from_cartan(const IntMatrix& cartan) {
    validate_cartan(cartan);
    RootSystem rs;
    const std::size_t n = cartan.size();
    rs.cartan_ = cartan;
    rs.sym_ = compute_symmetrizer(cartan);
    rs.cartan_inv_ = inverse(cartan);

    // Close the simple roots under simple reflections (simple-root coordinates).
    auto pair_simple = [&](const IntVec& c, std::size_t i) {
        Int s = 0;
        for (std::size_t k = 0; k < n; ++k) s += c[k] * cartan[k][i];
        return s;
    };
    std::set<IntVec> all;
    std::deque<IntVec> queue;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        all.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec c = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            IntVec r = c;
            r[i] -= pair_simple(c, i);
            if (all.insert(r).second) queue.push_back(std::move(r));
            if (all.size() > 100000) throw InvalidInput("Cartan matrix is not of finite type");
        }
    }
    for (const auto& c : all)
        if (std::all_of(c.begin(), c.end(), [](Int v) { return v >= 0; })) rs.pos_.push_back(c);
    if (rs.pos_.size() * 2 != all.size()) throw InvalidInput("root closure is not symmetric");
    std::sort(rs.pos_.begin(), rs.pos_.end(), [](const IntVec& x, const IntVec& y) {
        Int hx = std::accumulate(x.begin(), x.end(), Int(0));
        Int hy = std::accumulate(y.begin(), y.end(), Int(0));
        if (hx != hy) return hx < hy;
        return x < y;
    });

    for (const auto& c : rs.pos_) {
        // (beta, beta) = sum_{k,l} c_k c_l a_kl d_l
        Int nn = 0;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) nn += c[k] * c[l] * cartan[k][l] * rs.sym_[l];
        if (nn % 2 != 0) throw std::logic_error("odd root norm");
        Int half = nn / 2;
        IntVec check(n);
        for (std::size_t k = 0; k < n; ++k) {
            if ((c[k] * rs.sym_[k]) % half != 0) throw std::logic_error("non-integral coroot");
            check[k] = c[k] * rs.sym_[k] / half;
        }
        rs.pos_norm_.push_back(half);
        rs.pos_check_.push_back(std::move(check));
        rs.pos_w_.push_back(rs.root_coords_to_weight(c));
    }
    rs.max_norm_ = *std::max_element(rs.pos_norm_.begin(), rs.pos_norm_.end());

    rs.form_.assign(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rs.form_[i][j] = rs.cartan_inv_[i][j] * Rational(rs.sym_[j]);

    // Classification from root counts.
    const Int r = static_cast<Int>(n);
    const Int roots = static_cast<Int>(all.size());
    Int long_roots = 0;
    for (Int v : rs.pos_norm_) long_roots += (v == rs.max_norm_) ? 2 : 0;
    Family fam = Family::A;
    if (rs.max_norm_ == 1) {
        if (roots == r * (r + 1)) fam = Family::A;
        else if (roots == 2 * r * (r - 1)) fam = Family::D;
        else if ((r == 6 && roots == 72) || (r == 7 && roots == 126) || (r == 8 && roots == 240)) fam = Family::E;
        else throw std::logic_error("unrecognised simply-laced root system");
    } else if (rs.max_norm_ == 3) {
        fam = Family::G;
    } else if (r == 4 && roots == 48) {
        fam = Family::F;
    } else if (r == 2) {
        fam = rs.sym_[0] == 2 ? Family::B : Family::C;
    } else if (long_roots == 2 * r * (r - 1)) {
        fam = Family::B;
    } else if (long_roots == 2 * r) {
        fam = Family::C;
    } else {
        throw std::logic_error("unrecognised root system");
    }
    rs.type_ = LieType{fam, static_cast<int>(n)};
    rs.weyl_order_ = closed_form_weyl_order(rs.type_);
    rs.cache_ = std::make_shared<Cache>();

    if (rs.weyl_order_ <= kMaxWeylOrder) {
        auto wg = std::make_shared<WeylGroup>();
        wg->rank_ = n;
        std::unordered_map<IntVec, std::size_t, VecHash> index;
        index.reserve(static_cast<std::size_t>(rs.weyl_order_) * 2);
        IntVec id = IntVec(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
        wg->mats_ = id;
        wg->lengths_.push_back(0);
        index.emplace(IntVec(n, 1), 0);
        std::vector<IntVec> keys{IntVec(n, 1)};
        for (std::size_t cur = 0; cur < wg->lengths_.size(); ++cur) {
            for (std::size_t i = 0; i < n; ++i) {
                // (s_i v)_j = v_j - v_i a_ij applied to w(rho).
                IntVec key = keys[cur];
                Int vi = key[i];
                for (std::size_t j = 0; j < n; ++j) key[j] -= vi * cartan[i][j];
                if (index.count(key)) continue;
                std::size_t idx = wg->lengths_.size();
                index.emplace(key, idx);
                wg->lengths_.push_back(wg->lengths_[cur] + 1);
                const std::size_t base = cur * n * n;
                // s_i w = S_i M_w with (S_i)_{jk} = delta_jk - a_ij delta_ik.
                std::vector<Int> m(n * n);
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        m[j * n + k] = wg->mats_[base + j * n + k] - cartan[i][j] * wg->mats_[base + i * n + k];
                wg->mats_.insert(wg->mats_.end(), m.begin(), m.end());
                keys.push_back(std::move(key));
            }
        }
        if (static_cast<Int>(wg->lengths_.size()) != rs.weyl_order_)
            throw std::logic_error("Weyl group closure does not match the closed-form order");
        wg->longest_ = index.at(IntVec(n, -1));
        rs.weyl_ = std::move(wg);
    }
    return rs;
}

RootSystem build_root_system(LieType t) {
    t = LieType::make(t.family, t.rank);
    return RootSystem::from_cartan(standard_cartan(t));
}

const WeylGroup& RootSystem::weyl() const {
    if (!weyl_)
        throw Unsupported("Weyl group of " + type_.name() + " has order " + std::to_string(weyl_order_) +
                          ", above the materialization limit");
    return *weyl_;
}

Coweight RootSystem::theta_check() const { return coroot_coords_to_coweight(comarks()); }

std::size_t RootSystem::highest_short_index() const {
    for (std::size_t k = pos_.size(); k-- > 0;)
        if (pos_norm_[k] == 1) return k;
    return pos_.size() - 1;
}

Int RootSystem::dual_coxeter() const {
    const auto& c = comarks();
    return 1 + std::accumulate(c.begin(), c.end(), Int(0));
}

Int RootSystem::fundamental_group_order() const { return std::llabs(determinant(cartan_)); }

Int RootSystem::coroot_pairing(const Weight& w, std::size_t k) const {
    const auto& c = pos_check_[k];
    Int s = 0;
    for (std::size_t j = 0; j < c.size(); ++j) s += w.coords[j] * c[j];
    return s;
}

std::size_t RootSystem::find_positive_root(const IntVec& root_coords) const {
    auto it = std::find(pos_.begin(), pos_.end(), root_coords);
    return it == pos_.end() ? npos : static_cast<std::size_t>(it - pos_.begin());
}

RatVec RootSystem::coweight_to_coroot_coords(const Coweight& x) const { return multiply(cartan_inv_, x.coords); }

Coweight RootSystem::coroot_coords_to_coweight(const IntVec& y) const {
    IntVec v = multiply(cartan_, y);
    return Coweight{RatVec(v.begin(), v.end())};
}

RatVec RootSystem::weight_to_root_coords(const Weight& w) const {
    const std::size_t n = rank();
    RatVec c(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i] += cartan_inv_[j][i] * Rational(w.coords[j]);
    return c;
}

Weight RootSystem::root_coords_to_weight(const IntVec& c) const {
    const std::size_t n = rank();
    Weight w = Weight::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w.coords[j] += c[i] * cartan_[i][j];
    return w;
}

Rational RootSystem::pair(const Weight& w, const Coweight& x) const {
    RatVec y = coweight_to_coroot_coords(x);
    Rational s(0);
    for (std::size_t j = 0; j < y.size(); ++j) s += Rational(w.coords[j]) * y[j];
    return s;
}

Rational RootSystem::pair_root(const IntVec& c, const Coweight& x) {
    Rational s(0);
    for (std::size_t j = 0; j < c.size(); ++j) s += Rational(c[j]) * x.coords[j];
    return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
    Rational s(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j)
            if (b.coords[j] != 0) s += Rational(a.coords[i] * b.coords[j]) * form_[i][j];
    }
    return s;
}

Weight RootSystem::reflect(std::size_t i, const Weight& w) const {
    Weight r = w;
    Int wi = w.coords[i];
    for (std::size_t j = 0; j < rank(); ++j) r.coords[j] -= wi * cartan_[i][j];
    return r;
}

bool RootSystem::is_dominant(const Weight& w) const {
    return w.size() == rank() && std::all_of(w.coords.begin(), w.coords.end(), [](Int v) { return v >= 0; });
}

Weight RootSystem::dominant_representative(const Weight& w, int* reflections) const {
    Weight x = w;
    int count = 0;
    for (;;) {
        std::size_t i = 0;
        while (i < rank() && x.coords[i] >= 0) ++i;
        if (i == rank()) break;
        x = reflect(i, x);
        ++count;
    }
    if (reflections) *reflections = count;
    return x;
}

// ------------------------------------------------------ representations ---

namespace {

void require_dominant(const RootSystem& rs, const Weight& w, const char* what) {
    if (w.size() != rs.rank()) throw InvalidInput(std::string(what) + ": weight has wrong rank");
    if (!rs.is_dominant(w)) throw InvalidInput(std::string(what) + ": weight " + w.str() + " is not dominant");
}

Int height_below(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    RatVec c = rs.weight_to_root_coords(lambda - mu);
    Rational h(0);
    for (const auto& v : c) h += v;
    return h.num();
}

std::map<Weight, Int> freudenthal(const RootSystem& rs, const Weight& lambda) {
    const std::size_t n = rs.rank();
    // Scaled integral copy of the invariant form.
    Int scale = 1;
    std::vector<std::vector<Int>> form(n, std::vector<Int>(n));
    {
        RatMatrix f(n, RatVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Weight a = Weight::zero(n), b = Weight::zero(n);
                a.coords[i] = 1;
                b.coords[j] = 1;
                f[i][j] = rs.inner(a, b);
            }
        scale = common_denominator(f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) form[i][j] = (f[i][j] * Rational(scale)).num();
    }
    auto ip = [&](const Weight& a, const Weight& b) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coords[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) s += a.coords[i] * form[i][j] * b.coords[j];
        }
        return s;
    };

    // Dominant weights below lambda: subtract positive roots, stay dominant.
    std::set<Weight> dom{lambda};
    std::deque<Weight> q{lambda};
    const auto& roots = rs.positive_root_weights();
    while (!q.empty()) {
        Weight mu = q.front();
        q.pop_front();
        for (const auto& a : roots) {
            Weight nu = mu - a;
            if (rs.is_dominant(nu) && dom.insert(nu).second) q.push_back(nu);
        }
    }
    std::vector<std::pair<Int, Weight>> order;
    for (const auto& mu : dom) order.emplace_back(height_below(rs, lambda, mu), mu);
    std::sort(order.begin(), order.end());

    std::map<Weight, Int> mult;
    const Weight rho = rs.rho();
    const Int top = ip(lambda + rho, lambda + rho);
    for (const auto& [depth, mu] : order) {
        if (depth == 0) {
            mult[mu] = 1;
            continue;
        }
        Int num = 0;
        for (const auto& a : roots) {
            Weight cur = mu + a;
            for (;;) {
                auto it = mult.find(rs.dominant_representative(cur));
                if (it == mult.end()) break;
                num += ip(cur, a) * it->second;
                cur = cur + a;
            }
        }
        num *= 2;
        Int den = top - ip(mu + rho, mu + rho);
        if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
        mult[mu] = num / den;
    }
    return mult;
}

}  // namespace

const std::map<Weight, Int>& dominant_character(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda, "dominant_character");
    auto& cache = rs.cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.dominant_chars.find(lambda);
        if (it != cache.dominant_chars.end()) return it->second;
    }
    auto computed = freudenthal(rs, lambda);
    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.dominant_chars.emplace(lambda, std::move(computed)).first->second;
}

Int weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    require_dominant(rs, lambda, "weight_multiplicity");
    if (mu.size() != rs.rank()) throw InvalidInput("weight_multiplicity: weight has wrong rank");
    const auto& ch = dominant_character(rs, lambda);
    auto it = ch.find(rs.dominant_representative(mu));
    return it == ch.end() ? 0 : it->second;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
    std::set<Weight> seen{w};
    std::deque<Weight> q{w};
    while (!q.empty()) {
        Weight x = q.front();
        q.pop_front();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (x.coords[i] == 0) continue;
            Weight y = rs.reflect(i, x);
            if (seen.insert(y).second) q.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

std::map<Weight, Int> full_character(const RootSystem& rs, const Weight& lambda) {
    std::map<Weight, Int> out;
    for (const auto& [mu, m] : dominant_character(rs, lambda))
        for (const auto& x : weyl_orbit(rs, mu)) out[x] = m;
    return out;
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda, "weyl_dim");
    const Weight shifted = lambda + rs.rho();
    const Weight rho = rs.rho();
    __int128 num = 1, den = 1;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
        num *= rs.coroot_pairing(shifted, k);
        den *= rs.coroot_pairing(rho, k);
        __int128 a = num, b = den;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        num /= a;
        den /= a;
    }
    if (den != 1) throw std::logic_error("Weyl dimension formula produced a non-integer");
    if (num > INT64_MAX) throw std::overflow_error("weyl_dim overflow");
    return static_cast<Int>(num);
}

DotReduction finite_dot_reduce(const RootSystem& rs, const Weight& lambda) {
    DotReduction r;
    Weight x = rs.dominant_representative(lambda + rs.rho(), &r.reflections);
    r.on_wall = std::any_of(x.coords.begin(), x.coords.end(), [](Int v) { return v == 0; });
    if (!r.on_wall) r.dominant = x - rs.rho();
    return r;
}

std::map<Weight, Int> tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    require_dominant(rs, lambda, "tensor_decompose");
    require_dominant(rs, mu, "tensor_decompose");
    const Weight* big = &lambda;
    const Weight* small = &mu;
    if (weyl_dim(rs, lambda) < weyl_dim(rs, mu)) std::swap(big, small);
    std::map<Weight, Int> out;
    for (const auto& [beta, m] : full_character(rs, *small)) {
        DotReduction red = finite_dot_reduce(rs, *big + beta);
        if (red.on_wall) continue;
        out[red.dominant] += (red.reflections % 2 == 0) ? m : -m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second < 0) throw std::logic_error("negative tensor multiplicity");
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

Int tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu) {
    require_dominant(rs, nu, "tensor_multiplicity");
    auto d = tensor_decompose(rs, lambda, mu);
    auto it = d.find(nu);
    return it == d.end() ? 0 : it->second;
}

Weight dualize(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda, "dualize");
    return rs.dominant_representative(-lambda);
}

}  // namespace cblock
