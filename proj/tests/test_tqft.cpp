#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shadow/errors.hpp"
#include "shadow/fsl.hpp"
#include "shadow/tqft.hpp"
#include "support.hpp"

#include <cmath>

using namespace shadow;
using namespace shadow::tqft;

namespace {

const double tol = 1e-9;

double err(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
    return static_cast<double>((a - b).norm());
}

double err(const Complex& a, const Complex& b) { return static_cast<double>(std::abs(a - b)); }

std::vector<int> permuted(const BraidWord& w, std::vector<int> c) {
    for (int e : w.letters) std::swap(c[std::abs(e) - 1], c[std::abs(e)]);
    return c;
}

Coloring random_coloring(std::mt19937_64& rng, int n, const Level& lv) {
    auto cols = lv.colors();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(cols.size()) - 1);
    Coloring c;
    for (int i = 0; i < n; ++i) c.punctures.push_back(cols[pick(rng)]);
    c.outer = cols[pick(rng)];
    return c;
}

// coloring with a nonempty block space, or nullopt after a few tries
std::optional<Coloring> live_coloring(std::mt19937_64& rng, int n, const Level& lv) {
    for (int t = 0; t < 50; ++t) {
        Coloring c = random_coloring(rng, n, lv);
        if (fusion_basis(c.punctures, c.outer, lv).dimension() > 0) return c;
    }
    return std::nullopt;
}

// plain double evaluation of the twist coefficient, straight from its definition
std::complex<double> twist_direct(int a, int b, int t, int r) {
    double e = (a * (a + 2) + b * (b + 2) - t * (t + 2)) / 2.0;
    double sgn = ((a + b - t) / 2) % 2 ? -1.0 : 1.0;
    return sgn * std::polar(1.0, M_PI * e / r);
}

double hopf_direct(int a, int b, int r) {
    double s = std::sin(2 * M_PI * (a + 1) * (b + 1) / r) / std::sin(2 * M_PI / r);
    return (a + b) % 2 ? -s : s;
}

} // namespace

TEST_CASE("quantum integers") {
    for (int r : {3, 5, 7, 9}) {
        Level lv(r);
        CHECK(std::abs(static_cast<double>(quantum_integer(1, lv)) - 1) < 1e-30);
        CHECK(std::abs(static_cast<double>(quantum_integer(0, lv))) < 1e-30);
        for (int n = 0; n < 2 * r; ++n) {
            double direct = std::sin(2 * M_PI * n / r) / std::sin(2 * M_PI / r);
            CHECK(std::abs(static_cast<double>(quantum_integer(n, lv)) - direct) < 1e-12);
        }
    }
    CHECK(std::abs(static_cast<double>(quantum_integer(2, Level(5))) - 2 * std::cos(2 * M_PI / 5)) < 1e-12);
    CHECK_THROWS_AS(Level(4), DomainError);
    CHECK_THROWS_AS(Level(1), DomainError);
}

TEST_CASE("admissibility against the three-edge decomposition") {
    // admissible iff a = m+p, b = m+n, c = n+p with m,n,p >= 0 and m+n+p <= r-2
    auto rule = [](int a, int b, int c, int r) {
        for (int m = 0; m <= a; ++m)
            for (int n = 0; n <= b; ++n)
                for (int p = 0; p <= c; ++p)
                    if (m + p == a && m + n == b && n + p == c && m + n + p <= r - 2) return true;
        return false;
    };
    CHECK(admissible(0, 0, 0, Level(3)));
    CHECK(admissible(2, 2, 2, Level(5)));
    CHECK_FALSE(admissible(2, 2, 6, Level(7)));
    for (int r : {5, 7, 9}) {
        Level lv(r);
        for (int a : lv.colors())
            for (int b : lv.colors())
                for (int c : lv.colors()) CHECK(admissible(a, b, c, lv) == rule(a, b, c, r));
    }
}

TEST_CASE("fusion basis dimensions") {
    Level lv(7);
    CHECK(fusion_basis({0, 0, 0}, 0, lv).dimension() == 1);
    CHECK(fusion_basis({2}, 2, lv).dimension() == 1);
    CHECK(fusion_basis({2}, 0, lv).dimension() == 0);
    // 2 x 2 = 0 + 2 + 4 at r = 7
    CHECK(fusion_basis({2, 2}, 0, lv).dimension() == 1);
    CHECK(fusion_basis({2, 2, 2}, 2, lv).dimension() == 3);
    auto fb = fusion_basis({2, 2, 2, 2}, 2, lv);
    CHECK(std::is_sorted(fb.labels.begin(), fb.labels.end()));
}

TEST_CASE("twist eigenvalues and identity") {
    for (int r : {5, 7, 9}) {
        Level lv(r);
        for (int a : lv.colors())
            for (int t : lv.colors()) {
                if (!admissible(a, a, t, lv)) continue;
                Coloring c{{a, a}, t};
                Matrix M = rep_matrix(BraidWord(2, {1}), lv, c);
                REQUIRE(M.rows() == 1);
                auto want = twist_direct(a, a, t, r);
                CHECK(std::abs(static_cast<double>(M(0, 0).real()) - want.real()) < 1e-12);
                CHECK(std::abs(static_cast<double>(M(0, 0).imag()) - want.imag()) < 1e-12);
                Complex tr2 = rep_trace(BraidWord(2, {1, 1}), lv, c);
                CHECK(std::abs(std::complex<double>(static_cast<double>(tr2.real()),
                                                    static_cast<double>(tr2.imag())) -
                               want * want) < 1e-12);
            }
    }
    Level lv(7);
    Coloring c{{2, 2, 2}, 2};
    Matrix I = rep_matrix(BraidWord(3, {}), lv, c);
    CHECK(err(I, Matrix::Identity(3, 3)) < tol);
    CHECK(err(rep_matrix(BraidWord(3, {1, -1}), lv, c), Matrix::Identity(3, 3)) < tol);
    CHECK(err(rep_trace(BraidWord(3, {}), lv, {{0, 0, 0}, 0}), Complex(1)) < tol);
    CHECK_THROWS_AS(rep_matrix(BraidWord(1, {}), lv, {{2}, 0}), EmptyBlockSpace);
    CHECK(err(rep_trace(BraidWord(1, {}), lv, {{2}, 0}), Complex(0)) < tol);
    CHECK_THROWS_AS(rep_trace(BraidWord(2, {1}), lv, {{0, 2}, 2}), DomainError);
}

TEST_CASE("representation property on random words") {
    std::mt19937_64 rng(testing_support::seed());
    std::uniform_int_distribution<int> nd(2, 4), ld(0, 6);
    for (int r : {5, 7}) {
        Level lv(r);
        Precision guard(lv.precision_bits);
        Recoupling rc(lv);
        for (int trial = 0; trial < 40; ++trial) {
            int n = nd(rng);
            BraidWord u = testing_support::random_braid(rng, n, ld(rng));
            BraidWord v = testing_support::random_braid(rng, n, ld(rng));
            auto c = live_coloring(rng, n, lv);
            if (!c) continue;
            Coloring cu{permuted(u, c->punctures), c->outer};
            Matrix uv = rep_matrix(u * v, rc, *c);
            CHECK(err(uv, rep_matrix(u, rc, *c) * rep_matrix(v, rc, cu)) < tol);
            Matrix id = rep_matrix(u * u.inverse(), rc, *c);
            CHECK(err(id, Matrix::Identity(id.rows(), id.cols())) < tol);
        }
    }
}

TEST_CASE("braid relations and far commutation") {
    std::mt19937_64 rng(testing_support::seed() + 1);
    for (int r : {5, 7}) {
        Level lv(r);
        Precision guard(lv.precision_bits);
        Recoupling rc(lv);
        for (int trial = 0; trial < 30; ++trial) {
            auto c = live_coloring(rng, 4, lv);
            if (!c) continue;
            for (int i = 1; i <= 2; ++i) {
                for (int s : {1, -1}) {
                    Matrix a = rep_matrix(BraidWord(4, {s * i, s * (i + 1), s * i}), rc, *c);
                    Matrix b = rep_matrix(BraidWord(4, {s * (i + 1), s * i, s * (i + 1)}), rc, *c);
                    CHECK(err(a, b) < tol);
                }
            }
            CHECK(err(rep_matrix(BraidWord(4, {1, 3}), rc, *c), rep_matrix(BraidWord(4, {3, 1}), rc, *c)) < tol);
            CHECK(err(rep_matrix(BraidWord(4, {-1, 3}), rc, *c), rep_matrix(BraidWord(4, {3, -1}), rc, *c)) < tol);
        }
    }
}

TEST_CASE("conjugation invariance of traces") {
    std::mt19937_64 rng(testing_support::seed() + 2);
    std::uniform_int_distribution<int> nd(2, 4), ld(1, 6);
    Level lv(7);
    Precision guard(lv.precision_bits);
    Recoupling rc(lv);
    for (int trial = 0; trial < 30; ++trial) {
        int n = nd(rng);
        BraidWord b = testing_support::random_braid(rng, n, ld(rng));
        BraidWord w = testing_support::random_braid(rng, n, ld(rng));
        auto cs = cycle_colorings(b, lv);
        std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
        Coloring c = cs[pick(rng)];
        // the conjugate starts with the colors that w carries onto c
        Coloring cw{permuted(w.inverse(), c.punctures), c.outer};
        CHECK(err(rep_trace(w * b * w.inverse(), rc, cw), rep_trace(b, rc, c)) < tol);
    }
}

TEST_CASE("oracle on small links") {
    Level lv(7);
    LinkDiagram unknot = closure_diagram(BraidWord(1, {}));
    for (int a = 0; a <= 5; ++a) {
        double want = (a % 2 ? -1 : 1) * std::sin(2 * M_PI * (a + 1) / 7) / std::sin(2 * M_PI / 7);
        CHECK(err(tl_bracket_oracle(unknot, lv, {a}), Complex(want)) < tol);
    }
    CHECK(err(tl_bracket_oracle(closure_diagram(BraidWord(2, {})), lv, {0, 0}), Complex(1)) < tol);
    LinkDiagram loops;
    loops.components = {{"K1", {}}, {"K2", {}}};
    CHECK(err(tl_bracket_oracle(loops, lv, {2, 4}),
              Complex(quantum_integer(3, lv) * quantum_integer(5, lv))) < tol);

    // Hopf link three ways: oracle, trace route, closed formula
    LinkDiagram hopf = closure_diagram(BraidWord(2, {1, 1}));
    Precision guard(lv.precision_bits);
    Recoupling rc(lv);
    for (int a : lv.colors())
        for (int b : lv.colors()) {
            Complex o = tl_bracket_oracle(hopf, lv, {a, b});
            Complex route(0);
            for (int t : lv.colors())
                if (admissible(a, b, t, lv)) route += rep_trace(BraidWord(2, {1, 1}), rc, {{a, b}, t}) * rc.delta(t);
            CHECK(err(o, route) < tol);
            CHECK(err(o, Complex(hopf_direct(a, b, 7))) < tol);
        }
    CHECK_THROWS_AS(tl_bracket_oracle(hopf, lv, {4, 4}, 6), WidthLimit);
    CHECK_THROWS_AS(tl_bracket_oracle(hopf, lv, {6, 6}, 12), DomainError);
}

TEST_CASE("b1 traces against the oracle at r = 5") {
    // oracle(closure colored c, axis colored j) = sum_k Tr_{c,k} Hopf(k, j)
    Level lv(5);
    Precision guard(lv.precision_bits);
    Recoupling rc(lv);
    BraidWord b = make_bk(1);
    LinkDiagram L = braided_link(b);
    for (const std::vector<int>& c : {std::vector<int>{2, 2, 0}, {2, 0, 2}, {2, 2, 2}, {0, 2, 2}}) {
        for (int j : lv.colors()) {
            std::vector<int> colors = c;
            colors.push_back(j);
            Complex o = tl_bracket_oracle(L, lv, colors);
            Complex sum(0);
            for (int k : lv.colors()) sum += rep_trace(b, rc, {c, k}) * Complex(hopf_direct(k, j, 5));
            CHECK(err(o, sum) < tol);
        }
    }
}

TEST_CASE("Turaev-Viro values agree with the oracle") {
    const BraidWord cases[] = {BraidWord(1, {}), BraidWord(2, {1, 1}), make_bk(1), BraidWord(2, {1, 1, 1})};
    for (const auto& b : cases) {
        Level lv(5);
        CHECK(std::abs(static_cast<double>(tv_braided_link(b, lv) - tv_oracle(b, lv))) < tol);
    }
    // identity in B1: the Hopf link, one term per color
    CHECK(std::abs(static_cast<double>(tv_braided_link(BraidWord(1, {}), Level(5))) - 2) < tol);
    CHECK(std::abs(static_cast<double>(tv_braided_link(BraidWord(1, {}), Level(9))) - 4) < tol);
    Level lv7(7);
    CHECK(std::abs(static_cast<double>(tv_braided_link(BraidWord(2, {1, 1}), lv7) - tv_oracle(BraidWord(2, {1, 1}), lv7, 12))) < tol);
}

TEST_CASE("Turaev-Viro at r = 3 is 1") {
    std::mt19937_64 rng(testing_support::seed() + 3);
    std::uniform_int_distribution<int> nd(1, 5), ld(0, 10);
    for (int t = 0; t < 20; ++t) {
        BraidWord b = testing_support::random_braid(rng, nd(rng), ld(rng));
        CHECK(std::abs(static_cast<double>(tv_braided_link(b, Level(3))) - 1) < tol);
    }
}

TEST_CASE("Turaev-Viro is nonnegative and reproducible") {
    std::mt19937_64 rng(testing_support::seed() + 4);
    for (int t = 0; t < 10; ++t) {
        BraidWord b = testing_support::random_braid(rng, 3, 5);
        Level lv(7);
        Real x = tv_braided_link(b, lv), y = tv_braided_link(b, lv);
        CHECK(x >= 0);
        CHECK(x == y);
    }
}

TEST_CASE("slope series") {
    auto s = slope_series(make_bk(1), {5, 7, 9});
    REQUIRE(s.rows.size() == 3);
    REQUIRE(s.target);
    CHECK(std::abs(static_cast<double>(*s.target) - 2 * v8()) < 1e-12);
    CHECK(std::abs(static_cast<double>(*s.target) - 7.3277) < 1e-4);
    for (std::size_t i = 1; i < s.rows.size(); ++i) CHECK(*s.rows[i].slope > *s.rows[i - 1].slope);
    CHECK(*s.running_min[0] == *s.rows[0].slope);
    CHECK(*s.tail_min == *s.rows[1].slope);

    auto s2 = slope_series(make_bk(2), {5, 7});
    REQUIRE(s2.target);
    CHECK(std::abs(static_cast<double>(*s2.target) - 4 * v8()) < 1e-12);
    CHECK(!slope_series(BraidWord(1, {}), {5, 7}).target);
    CHECK_THROWS_AS(slope_series(make_bk(1), {7, 5}), DomainError);
}
