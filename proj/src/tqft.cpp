#include "shadow/tqft.hpp"

#include "shadow/errors.hpp"
#include "shadow/fsl.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace shadow::tqft {

// ---------------------------------------------------------------- level, precision

Precision::Precision(int bits) : saved_(Real::default_precision()) {
    // mpfr_float counts decimal digits
    Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
}

Precision::~Precision() { Real::default_precision(saved_); }

Level::Level(int r_, int bits) : r(r_), precision_bits(bits) {
    if (r < 3 || r % 2 == 0) throw DomainError("level r must be odd and at least 3, got " + std::to_string(r));
    if (bits < 53) throw DomainError("precision below 53 bits");
}

std::vector<int> Level::colors() const {
    std::vector<int> out;
    for (int c = 0; c <= r - 3; c += 2) out.push_back(c);
    return out;
}

Real quantum_integer(int n, const Level& lv) {
    Precision guard(lv.precision_bits);
    Real t = 2 * boost::math::constants::pi<Real>() / lv.r;
    return sin(n * t) / sin(t);
}

bool admissible(int a, int b, int c, const Level& lv) {
    if (a < 0 || b < 0 || c < 0) return false;
    if ((a + b + c) % 2) return false;
    if (c < std::abs(a - b) || c > a + b) return false;
    return a + b + c <= 2 * (lv.r - 2);
}

int FusionBasis::index_of(const std::vector<int>& x) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), x);
    if (it == labels.end() || *it != x) return -1;
    return static_cast<int>(it - labels.begin());
}

FusionBasis fusion_basis(const std::vector<int>& leaves, int root, const Level& lv) {
    FusionBasis fb;
    fb.leaves = leaves;
    fb.root = root;
    const int m = static_cast<int>(leaves.size());
    if (m == 0) throw DomainError("fusion basis needs at least one puncture");
    for (int c : leaves)
        if (!lv.is_color(c)) throw DomainError("color " + std::to_string(c) + " not in U_r");
    if (!lv.is_color(root)) throw DomainError("outer color " + std::to_string(root) + " not in U_r");

    std::vector<int> x(m);
    x[0] = leaves[0];
    auto rec = [&](auto&& self, int t) -> void {
        if (t == m) {
            if (x[m - 1] == root) fb.labels.push_back(x);
            return;
        }
        if (t == m - 1) {
            if (admissible(x[t - 1], leaves[t], root, lv)) {
                x[t] = root;
                self(self, t + 1);
            }
            return;
        }
        for (int s : lv.colors())
            if (admissible(x[t - 1], leaves[t], s, lv)) {
                x[t] = s;
                self(self, t + 1);
            }
    };
    rec(rec, 1);
    return fb;  // generated in lexicographic order
}

// ---------------------------------------------------------------- recoupling

Recoupling::Recoupling(const Level& lv) : lv_(lv) {
    pi_ = boost::math::constants::pi<Real>();
    const int N = 4 * lv.r + 4;
    Real t = 2 * pi_ / lv.r;
    Real s1 = sin(t);
    qint_.resize(N);
    qfact_.resize(N);
    delta_.resize(N);
    for (int n = 0; n < N; ++n) {
        qint_[n] = sin(n * t) / s1;
        // [r] is exactly zero; keep it so
        if (n % lv.r == 0) qint_[n] = 0;
    }
    qfact_[0] = 1;
    for (int n = 1; n < N; ++n) qfact_[n] = qfact_[n - 1] * qint_[n];
    for (int n = 0; n + 1 < N; ++n) delta_[n] = (n % 2 ? -qint_[n + 1] : qint_[n + 1]);
}

Complex Recoupling::A_pow(int k) const {
    int m = ((k % (2 * lv_.r)) + 2 * lv_.r) % (2 * lv_.r);
    Real ang = pi_ * m / lv_.r;
    return Complex(cos(ang), sin(ang));
}

const Real& Recoupling::qint(int n) const { return qint_.at(n); }
const Real& Recoupling::qfact(int n) const { return qfact_.at(n); }
const Real& Recoupling::delta(int n) const { return delta_.at(n); }

Real Recoupling::theta(int a, int b, int c) const {
    int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
    Real v = qfact(m + n + p + 1) * qfact(m) * qfact(n) * qfact(p) /
             (qfact(m + n) * qfact(n + p) * qfact(m + p));
    return (m + n + p) % 2 ? -v : v;
}

Real Recoupling::tet(int A, int B, int E, int C, int D, int F) const {
    const int a[4] = {(A + D + E) / 2, (B + C + E) / 2, (A + B + F) / 2, (C + D + F) / 2};
    const int b[3] = {(B + D + E + F) / 2, (A + C + E + F) / 2, (A + B + C + D) / 2};
    Real inner = 1;
    for (int i : a)
        for (int j : b) inner *= qfact(j - i);
    Real ext = qfact(A) * qfact(B) * qfact(C) * qfact(D) * qfact(E) * qfact(F);
    int lo = *std::max_element(a, a + 4), hi = *std::min_element(b, b + 3);
    Real sum = 0;
    for (int s = lo; s <= hi; ++s) {
        Real den = 1;
        for (int i : a) den *= qfact(s - i);
        for (int j : b) den *= qfact(j - s);
        Real term = qfact(s + 1) / den;
        if (s % 2) sum -= term;
        else sum += term;
    }
    return inner / ext * sum;
}

Complex Recoupling::lambda(int a, int b, int t) const {
    int e2 = a * (a + 2) + b * (b + 2) - t * (t + 2);  // even
    Complex v = A_pow(e2 / 2);
    return ((a + b - t) / 2) % 2 ? -v : v;
}

const Recoupling::Move& Recoupling::recouple(int a, int b, int c, int d) {
    auto key = std::make_tuple(a, b, c, d);
    auto it = moves_.find(key);
    if (it != moves_.end()) return it->second;
    Move mv;
    for (int j : lv_.colors())
        if (admissible(a, b, j, lv_) && admissible(j, c, d, lv_)) mv.rows.push_back(j);
    for (int i : lv_.colors())
        if (admissible(b, c, i, lv_) && admissible(a, i, d, lv_)) mv.cols.push_back(i);
    if (mv.rows.size() != mv.cols.size())
        throw std::logic_error("recoupling between spaces of different dimension");
    const int n = static_cast<int>(mv.rows.size());
    mv.F.resize(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int j = mv.rows[x], i = mv.cols[y];
            mv.F(x, y) = tet(a, b, i, c, d, j) * delta(i) / (theta(a, i, d) * theta(b, c, i));
        }
    return moves_.emplace(key, std::move(mv)).first->second;
}

const Recoupling::Braiding& Recoupling::braiding(int p, int a, int b, int q, int sign) {
    auto key = std::make_tuple(p, a, b, q, sign);
    auto it = braids_.find(key);
    if (it != braids_.end()) return it->second;
    const Move& f = recouple(p, a, b, q);
    const Move& g = recouple(p, b, a, q);
    const int n = static_cast<int>(f.rows.size());
    Braiding br;
    br.rows = f.rows;
    br.cols = g.rows;
    Matrix F = f.F.cast<Complex>();
    Matrix G = g.F.cast<Complex>().partialPivLu().inverse();
    Matrix L = Matrix::Zero(n, n);
    for (int y = 0; y < n; ++y) {
        Complex l = lambda(a, b, f.cols[y]);
        L(y, y) = sign > 0 ? l : Complex(1) / l;
    }
    // f.cols and g.cols are the same list of (b a)_y labels
    br.B = F * L * G;
    return braids_.emplace(key, std::move(br)).first->second;
}

// ---------------------------------------------------------------- representation

namespace {

void check_coloring(const BraidWord& b, const Coloring& c, const Level& lv) {
    if (static_cast<int>(c.punctures.size()) != b.strands)
        throw DomainError("coloring has " + std::to_string(c.punctures.size()) + " punctures, braid has " +
                          std::to_string(b.strands) + " strands");
    for (int x : c.punctures)
        if (!lv.is_color(x)) throw DomainError("color " + std::to_string(x) + " not in U_r");
    if (!lv.is_color(c.outer)) throw DomainError("outer color " + std::to_string(c.outer) + " not in U_r");
}

// one letter: V(leaves) -> V(leaves with i, i+1 swapped)
Matrix letter_matrix(int e, Recoupling& rc, const FusionBasis& src, const FusionBasis& dst) {
    const int i = std::abs(e), sign = e > 0 ? 1 : -1;
    Matrix M = Matrix::Zero(src.dimension(), dst.dimension());
    const auto& c = src.leaves;
    for (int row = 0; row < src.dimension(); ++row) {
        std::vector<int> x = src.labels[row];
        if (i == 1) {
            Complex l = rc.lambda(c[0], c[1], x[1]);
            std::vector<int> y = x;
            y[0] = c[1];
            int col = dst.index_of(y);
            if (col >= 0) M(row, col) = sign > 0 ? l : Complex(1) / l;
            continue;
        }
        const int p = x[i - 2], s = x[i - 1], q = x[i];
        const auto& br = rc.braiding(p, c[i - 1], c[i], q, sign);
        int r0 = static_cast<int>(std::find(br.rows.begin(), br.rows.end(), s) - br.rows.begin());
        for (std::size_t k = 0; k < br.cols.size(); ++k) {
            std::vector<int> y = x;
            y[i - 1] = br.cols[k];
            int col = dst.index_of(y);
            if (col >= 0) M(row, col) = br.B(r0, k);
        }
    }
    return M;
}

} // namespace

Matrix rep_matrix(const BraidWord& b, Recoupling& rc, const Coloring& c) {
    const Level& lv = rc.level();
    check_coloring(b, c, lv);
    FusionBasis cur = fusion_basis(c.punctures, c.outer, lv);
    if (cur.dimension() == 0) throw EmptyBlockSpace("no admissible fusion labels for this coloring");
    Matrix M = Matrix::Identity(cur.dimension(), cur.dimension());
    std::vector<int> leaves = c.punctures;
    for (int e : b.letters) {
        int i = std::abs(e);
        std::swap(leaves[i - 1], leaves[i]);
        FusionBasis next = fusion_basis(leaves, c.outer, lv);
        Matrix step = letter_matrix(e, rc, cur, next);
        M = (M * step).eval();
        cur = std::move(next);
    }
    return M;
}

Matrix rep_matrix(const BraidWord& b, const Level& lv, const Coloring& c) {
    Precision guard(lv.precision_bits);
    Recoupling rc(lv);
    return rep_matrix(b, rc, c);
}

Complex rep_trace(const BraidWord& b, Recoupling& rc, const Coloring& c) {
    const Level& lv = rc.level();
    check_coloring(b, c, lv);
    Permutation p = permutation_of(b);
    for (int q = 1; q <= b.strands; ++q)
        if (c.punctures[q - 1] != c.punctures[p(q) - 1])
            throw DomainError("coloring is not constant on the cycles of the braid permutation");
    if (fusion_basis(c.punctures, c.outer, lv).dimension() == 0) return Complex(0);
    return rep_matrix(b, rc, c).trace();
}

Complex rep_trace(const BraidWord& b, const Level& lv, const Coloring& c) {
    Precision guard(lv.precision_bits);
    Recoupling rc(lv);
    return rep_trace(b, rc, c);
}

std::vector<Coloring> cycle_colorings(const BraidWord& b, const Level& lv) {
    auto cyc = permutation_of(b).cycles();
    const auto cols = lv.colors();
    const int K = static_cast<int>(cyc.size());
    std::vector<int> pick(K + 1, 0);
    std::vector<Coloring> out;
    while (true) {
        Coloring c;
        c.punctures.assign(b.strands, 0);
        for (int j = 0; j < K; ++j)
            for (int q : cyc[j]) c.punctures[q - 1] = cols[pick[j]];
        c.outer = cols[pick[K]];
        out.push_back(std::move(c));
        int t = K;
        while (t >= 0 && ++pick[t] == static_cast<int>(cols.size())) pick[t--] = 0;
        if (t < 0) break;
    }
    return out;
}

Real tv_braided_link(const BraidWord& b, const Level& lv) {
    Precision guard(lv.precision_bits);
    Recoupling rc(lv);
    Real sum = 0;
    for (const Coloring& c : cycle_colorings(b, lv)) {
        if (fusion_basis(c.punctures, c.outer, lv).dimension() == 0) continue;
        sum += std::norm(rep_trace(b, rc, c));
    }
    return sum;
}

// ---------------------------------------------------------------- slopes

std::optional<int> bk_index(const BraidWord& b) {
    for (int k = 1; k <= 12; ++k)
        if (make_bk(k) == b) return k;
    return std::nullopt;
}

TVSeries slope_series(const BraidWord& b, const std::vector<int>& r_list, int precision_bits) {
    for (std::size_t i = 1; i < r_list.size(); ++i)
        if (r_list[i] <= r_list[i - 1]) throw DomainError("r list must be ascending");
    Precision guard(precision_bits);
    TVSeries out;
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    for (int r : r_list) {
        Level lv(r, precision_bits);
        TVRow row;
        row.r = r;
        row.tv = tv_braided_link(b, lv);
        if (row.tv > 0) row.slope = two_pi / r * log(row.tv);
        out.rows.push_back(row);
    }
    if (auto k = bk_index(b)) out.target = 2 * *k * Real(v8_digits(60));

    out.running_min.resize(out.rows.size());
    std::optional<Real> m;
    for (std::size_t i = out.rows.size(); i-- > 0;) {
        const auto& s = out.rows[i].slope;
        if (s && (!m || *s < *m)) m = *s;
        out.running_min[i] = m;
    }
    // tail = upper half of the r list
    if (!out.rows.empty()) out.tail_min = out.running_min[out.rows.size() / 2];
    return out;
}

} // namespace shadow::tqft
