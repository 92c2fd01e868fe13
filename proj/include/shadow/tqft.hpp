#pragma once

#include "shadow/braid.hpp"
#include "shadow/diagram.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <Eigen/Dense>

#include <complex>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace shadow::tqft {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Complex = std::complex<Real>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

// Sets the working precision of newly created Real values; restores on exit.
class Precision {
public:
    explicit Precision(int bits);
    ~Precision();
    Precision(const Precision&) = delete;
    Precision& operator=(const Precision&) = delete;

private:
    unsigned saved_;
};

// r odd >= 3. A = exp(pi i / r), so A^2 = q = exp(2 pi i / r).
struct Level {
    int r = 5;
    int precision_bits = 128;

    Level() = default;
    explicit Level(int r_, int bits = 128);
    std::vector<int> colors() const;  // U_r = {0, 2, ..., r-3}
    bool is_color(int c) const { return c >= 0 && c <= r - 3 && c % 2 == 0; }
};

Real quantum_integer(int n, const Level& lv);
bool admissible(int a, int b, int c, const Level& lv);

// Colors of the punctures (top of the braid, positions 1..m) and of the outer circle.
struct Coloring {
    std::vector<int> punctures;
    int outer = 0;
    bool operator==(const Coloring&) const = default;
};

// Left comb: x[0] = c_1, x[t] = fusion of the first t+1 leaves, x[m-1] = root.
struct FusionBasis {
    std::vector<int> leaves;
    int root = 0;
    std::vector<std::vector<int>> labels;  // lexicographic
    int dimension() const { return static_cast<int>(labels.size()); }
    int index_of(const std::vector<int>& x) const;  // -1 when absent
};

FusionBasis fusion_basis(const std::vector<int>& leaves, int root, const Level& lv);

// Recoupling data at one level. Values are cached; everything is created at the
// level's precision, so keep a Precision guard alive while using it.
class Recoupling {
public:
    explicit Recoupling(const Level& lv);

    const Level& level() const { return lv_; }
    Complex A_pow(int k) const;
    const Real& qint(int n) const;
    const Real& qfact(int n) const;
    const Real& delta(int n) const;  // (-1)^n [n+1]
    Real theta(int a, int b, int c) const;
    // Tet[A B E; C D F], vertices (A,D,E) (B,C,E) (A,B,F) (C,D,F)
    Real tet(int A, int B, int E, int C, int D, int F) const;
    Complex lambda(int a, int b, int t) const;

    // ((a b)_j c)_d = sum_i F(j, i) (a (b c)_i)_d
    struct Move {
        std::vector<int> rows, cols;  // j labels, i labels
        RealMatrix F;
    };
    const Move& recouple(int a, int b, int c, int d);

    // Left comb piece ((p a)_s b)_q precomposed with a crossing of a and b;
    // rows s, cols s' in ((p b)_s' a)_q. sign +1 positive letter.
    struct Braiding {
        std::vector<int> rows, cols;
        Matrix B;
    };
    const Braiding& braiding(int p, int a, int b, int q, int sign);

private:
    Level lv_;
    Real pi_;
    std::vector<Real> qint_, qfact_, delta_;
    std::map<std::tuple<int, int, int, int>, Move> moves_;
    std::map<std::tuple<int, int, int, int, int>, Braiding> braids_;
};

// Map from V(c) to V(c permuted by b): row x, column y with x . b = sum_y M(x,y) y.
// Throws EmptyBlockSpace when V(c) = 0; rep_trace returns 0 there instead.
Matrix rep_matrix(const BraidWord& b, Recoupling& rc, const Coloring& c);
Matrix rep_matrix(const BraidWord& b, const Level& lv, const Coloring& c);
Complex rep_trace(const BraidWord& b, Recoupling& rc, const Coloring& c);
Complex rep_trace(const BraidWord& b, const Level& lv, const Coloring& c);

// Colorings constant on cycles, lexicographic in (cycle colors..., outer).
std::vector<Coloring> cycle_colorings(const BraidWord& b, const Level& lv);

Real tv_braided_link(const BraidWord& b, const Level& lv);

// Colored Kauffman bracket of a braid-closure diagram (or a crossingless unlink),
// one color per component in diagram order, by cabling and Jones-Wenzl insertion.
Complex tl_bracket_oracle(const LinkDiagram& d, const Level& lv, const std::vector<int>& colors,
                          int width_limit = 10);
// (1/D^2) sum over colorings of closure components and axis of |oracle|^2
Real tv_oracle(const BraidWord& b, const Level& lv, int width_limit = 10);
Real total_dimension_squared(const Level& lv);  // D^2 = sum over U_r of delta^2

struct TVRow {
    int r = 0;
    Real tv;
    std::optional<Real> slope;  // (2 pi / r) log tv
};

struct TVSeries {
    std::vector<TVRow> rows;
    std::optional<Real> target;    // 2k v8 when b is b_k
    std::vector<std::optional<Real>> running_min;  // min of the slopes at this r and above
    std::optional<Real> tail_min;                  // running_min over the upper half of the r list
};

// k with make_bk(k) == b, for k <= 12
std::optional<int> bk_index(const BraidWord& b);
TVSeries slope_series(const BraidWord& b, const std::vector<int>& r_list, int precision_bits = 128);

} // namespace shadow::tqft
