// Brute-force colored bracket: every component is replaced by parallel strands,
// crossings are smoothed one at a time, and Jones-Wenzl idempotents are expanded
// by Wenzl's recursion. Nothing here uses recoupling formulas.

#include "shadow/tqft.hpp"

#include "shadow/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <string>
#include <unordered_map>
#include <utility>

namespace shadow::tqft {

namespace {

// Planar matching on 2W points: top 0..W-1 (growing end), bottom W..2W-1 (start).
using Key = std::string;
using State = std::unordered_map<Key, Complex>;

struct Tl {
    int W = 0;
    Complex Ainv, A;
    Real loop;                // -A^2 - A^-2
    std::vector<Real> delta;  // (-1)^n [n+1]
};

void add(State& s, const Key& k, const Complex& v) {
    auto [it, fresh] = s.try_emplace(k, v);
    if (!fresh) it->second += v;
}

// e_p glued on top: joins top p, p+1 below and caps them above
Key glue_e(Key k, int p, bool& closed) {
    int u = static_cast<unsigned char>(k[p]), v = static_cast<unsigned char>(k[p + 1]);
    closed = (u == p + 1);
    if (!closed) {
        k[u] = static_cast<char>(v);
        k[v] = static_cast<char>(u);
        k[p] = static_cast<char>(p + 1);
        k[p + 1] = static_cast<char>(p);
    }
    return k;
}

State apply_e(const Tl& t, const State& s, int p) {
    State out;
    for (const auto& [k, v] : s) {
        bool closed = false;
        Key k2 = glue_e(k, p, closed);
        add(out, k2, closed ? v * t.loop : v);
    }
    return out;
}

State apply_crossing(const Tl& t, const State& s, int p, int sign) {
    const Complex& id = sign > 0 ? t.Ainv : t.A;
    const Complex& ee = sign > 0 ? t.A : t.Ainv;
    State out;
    out.reserve(2 * s.size());
    for (const auto& [k, v] : s) {
        add(out, k, v * id);
        bool closed = false;
        Key k2 = glue_e(k, p, closed);
        add(out, k2, closed ? v * ee * t.loop : v * ee);
    }
    return out;
}

// f_n on top points [s0, s0+n):  f_n = f_{n-1} - (D_{n-2}/D_{n-1}) f_{n-1} e_{n-1} f_{n-1}
State apply_jw(const Tl& t, const State& s, int s0, int n) {
    if (n <= 1) return s;
    State T = apply_jw(t, s, s0, n - 1);
    State U = apply_jw(t, apply_e(t, T, s0 + n - 2), s0, n - 1);
    Real mu = t.delta[n - 2] / t.delta[n - 1];
    for (const auto& [k, v] : U) add(T, k, -(v * mu));
    return T;
}

// drop terms with a top turnback inside [lo, hi); the idempotent there kills them
void prune_top(State& s, int lo, int hi) {
    if (hi - lo < 2) return;
    for (auto it = s.begin(); it != s.end();) {
        bool dead = false;
        for (int p = lo; p < hi && !dead; ++p) {
            int q = static_cast<unsigned char>(it->first[p]);
            dead = q >= lo && q < hi;
        }
        it = dead ? s.erase(it) : std::next(it);
    }
}

void prune_bottom(State& s, int W, const std::vector<std::pair<int, int>>& cables) {
    for (auto it = s.begin(); it != s.end();) {
        bool dead = false;
        for (auto [lo, hi] : cables) {
            for (int p = lo; p < hi && !dead; ++p) {
                int q = static_cast<unsigned char>(it->first[W + p]) - W;
                dead = q >= lo && q < hi;
            }
            if (dead) break;
        }
        it = dead ? s.erase(it) : std::next(it);
    }
}

int closure_loops(const Key& k, int W) {
    std::vector<char> seen(2 * W, 0);
    int loops = 0;
    for (int x0 = 0; x0 < W; ++x0) {
        if (seen[x0]) continue;
        ++loops;
        int x = x0;
        while (!seen[x]) {
            seen[x] = 1;
            int y = static_cast<unsigned char>(k[x]);
            seen[y] = 1;
            x = y < W ? y + W : y - W;  // closure arc
        }
    }
    return loops;
}

std::vector<std::pair<int, int>> cable_ranges(const std::vector<int>& col) {
    std::vector<std::pair<int, int>> out;
    int at = 0;
    for (int c : col) {
        out.push_back({at, at + c});
        at += c;
    }
    return out;
}

} // namespace

Complex tl_bracket_oracle(const LinkDiagram& d, const Level& lv, const std::vector<int>& colors,
                          int width_limit) {
    if (static_cast<int>(colors.size()) != d.component_count())
        throw DomainError("need one color per component");
    for (int c : colors)
        if (c < 0 || c > lv.r - 2) throw DomainError("color " + std::to_string(c) + " out of range");

    Precision guard(lv.precision_bits);
    Tl t;
    const Real pi = boost::math::constants::pi<Real>();
    t.A = std::polar(Real(1), pi / lv.r);
    t.Ainv = std::conj(t.A);
    t.loop = -2 * cos(2 * pi / lv.r);
    {
        Real th = 2 * pi / lv.r;
        for (int n = 0; n <= lv.r; ++n) {
            Real qn = sin((n + 1) * th) / sin(th);
            t.delta.push_back(n % 2 ? -qn : qn);
        }
    }

    if (d.crossing_count() == 0 && !d.braid) {
        Complex v(1);
        for (int c : colors) v *= t.delta[c];
        return v;
    }
    if (!d.braid) throw DomainError("oracle needs a braid-closure diagram");
    const BraidWord& b = *d.braid;

    // strand colors at the top of the braid
    auto cyc = permutation_of(b).cycles();
    std::vector<int> col(b.strands, 0);
    for (std::size_t j = 0; j < cyc.size(); ++j)
        for (int q : cyc[j]) col[q - 1] = colors.at(j);
    int W = 0;
    for (int c : col) W += c;
    if (W > width_limit)
        throw WidthLimit("cabled width " + std::to_string(W) + " exceeds limit " + std::to_string(width_limit));
    if (W > 120) throw WidthLimit("cabled width beyond representable matchings");
    t.W = W;
    if (W == 0) return Complex(1);

    const auto bottom = cable_ranges(col);
    Key id(2 * W, 0);
    for (int p = 0; p < W; ++p) {
        id[p] = static_cast<char>(W + p);
        id[W + p] = static_cast<char>(p);
    }
    State s;
    s[id] = Complex(1);

    for (int e : b.letters) {
        const int i = std::abs(e), sign = e > 0 ? 1 : -1;
        int s0 = 0;
        for (int q = 0; q < i - 1; ++q) s0 += col[q];
        const int a = col[i - 1], bb = col[i];
        for (int k = a - 1; k >= 0 && bb > 0; --k) {
            for (int u = 0; u < bb; ++u) s = apply_crossing(t, s, s0 + k + u, sign);
            prune_top(s, s0, s0 + k);
            prune_top(s, s0 + k, s0 + k + bb);
            prune_top(s, s0 + k + bb, s0 + a + bb);
        }
        std::swap(col[i - 1], col[i]);
        prune_bottom(s, W, bottom);
    }

    for (auto [lo, hi] : cable_ranges(col)) s = apply_jw(t, s, lo, hi - lo);

    Complex total(0);
    for (const auto& [k, v] : s) {
        int n = closure_loops(k, W);
        Real w = 1;
        for (int j = 0; j < n; ++j) w *= t.loop;
        total += v * w;
    }
    return total;
}

Real total_dimension_squared(const Level& lv) {
    Precision guard(lv.precision_bits);
    Real sum = 0;
    for (int c : lv.colors()) {
        Real q = quantum_integer(c + 1, lv);
        sum += q * q;
    }
    return sum;
}

Real tv_oracle(const BraidWord& b, const Level& lv, int width_limit) {
    Precision guard(lv.precision_bits);
    LinkDiagram L = braided_link(b);
    const int K = L.component_count();
    const auto cols = lv.colors();
    std::vector<int> pick(K, 0);
    Real sum = 0;
    while (true) {
        std::vector<int> c(K);
        for (int j = 0; j < K; ++j) c[j] = cols[pick[j]];
        sum += std::norm(tl_bracket_oracle(L, lv, c, width_limit));
        int j = K - 1;
        while (j >= 0 && ++pick[j] == static_cast<int>(cols.size())) pick[j--] = 0;
        if (j < 0) break;
    }
    return sum / total_dimension_squared(lv);
}

} // namespace shadow::tqft
