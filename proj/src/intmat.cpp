#include "cblock/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace cblock {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix t(m[0].size(), IntVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntVec multiply(const IntMatrix& a, const IntVec& v) {
    IntVec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
    return r;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMatrix c(n, RatVec(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == Rational(0)) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

RatVec multiply(const RatMatrix& a, const RatVec& v) {
    RatVec out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

Int determinant(const IntMatrix& input) {
    std::size_t n = input.size();
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = input[i][j];
    __int128 sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    __int128 d = sign * m[n - 1][n - 1];
    if (d > INT64_MAX || d < -INT64_MAX) throw std::overflow_error("determinant overflow");
    return static_cast<Int>(d);
}

RatMatrix inverse(const RatMatrix& input) {
    std::size_t n = input.size();
    RatMatrix a = input;
    RatMatrix inv(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == Rational(0)) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == Rational(0)) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

namespace {

// Extended gcd: returns g = gcd(a,b) >= 0 and x, y with a*x + b*y = g.
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0;
    y = y0;
    return a;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

IntMatrix hermite_basis(const IntMatrix& gens) {
    if (gens.empty()) return {};
    IntMatrix m = gens;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        // Fold every row below pr into pr with unimodular 2x2 steps.
        for (std::size_t r = pr + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Int x, y;
            Int a = m[pr][c], b = m[r][c];
            Int g = ext_gcd(a, b, x, y);
            Int pa = a / g, pb = b / g;
            IntVec top(cols), bot(cols);
            for (std::size_t j = 0; j < cols; ++j) {
                top[j] = x * m[pr][j] + y * m[r][j];
                bot[j] = -pb * m[pr][j] + pa * m[r][j];
            }
            m[pr] = std::move(top);
            m[r] = std::move(bot);
        }
        if (m[pr][c] == 0) continue;
        if (m[pr][c] < 0)
            for (auto& v : m[pr]) v = -v;
        for (std::size_t r = 0; r < pr; ++r) {
            Int q = floor_div(m[r][c], m[pr][c]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m[r][j] -= q * m[pr][j];
        }
        ++pr;
    }
    m.resize(pr);
    return m;
}

IntVec smith_invariants(const IntMatrix& input) {
    IntMatrix m = input;
    std::size_t n = m.size();
    IntVec diag;
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // Bring the smallest nonzero entry of the trailing block to (k,k).
            std::size_t bi = n, bj = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (m[i][j] != 0 && (bi == n || std::llabs(m[i][j]) < std::llabs(m[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == n) throw std::domain_error("smith_invariants: singular matrix");
            std::swap(m[k], m[bi]);
            for (auto& row : m) std::swap(row[k], row[bj]);

            bool dirty = false;
            for (std::size_t i = k + 1; i < n; ++i) {
                Int q = m[i][k] / m[k][k];
                if (q != 0)
                    for (std::size_t j = k; j < n; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k] != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                Int q = m[k][j] / m[k][k];
                if (q != 0)
                    for (std::size_t i = k; i < n; ++i) m[i][j] -= q * m[i][k];
                if (m[k][j] != 0) dirty = true;
            }
            if (dirty) continue;

            std::size_t bad = n;
            for (std::size_t i = k + 1; i < n && bad == n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (m[i][j] % m[k][k] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            for (std::size_t j = k; j < n; ++j) m[k][j] += m[bad][j];
        }
        diag.push_back(std::llabs(m[k][k]));
    }
    return diag;
}

bool in_row_lattice(const IntMatrix& rows, const IntVec& v) {
    // v = y * rows  <=>  y = v * rows^{-1}.
    RatMatrix inv = inverse(rows);
    for (std::size_t j = 0; j < inv.size(); ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < v.size(); ++i) s += Rational(v[i]) * inv[i][j];
        if (!s.is_integer()) return false;
    }
    return true;
}

Int common_denominator(const RatMatrix& m) {
    Int d = 1;
    for (const auto& row : m)
        for (const auto& x : row) d = lcm_checked(d, x.den());
    return d;
}

}  // namespace cblock
