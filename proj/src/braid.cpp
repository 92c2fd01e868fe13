#include "shadow/braid.hpp"
#include "shadow/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

namespace shadow {

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (n < 1) throw DomainError("braid needs at least one strand");
    for (int e : letters)
        if (e == 0 || std::abs(e) > n - 1)
            throw DomainError("letter " + std::to_string(e) + " outside B" + std::to_string(n));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> w(letters.rbegin(), letters.rend());
    for (int& e : w) e = -e;
    return BraidWord(strands, std::move(w));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    int n = std::max(strands, o.strands);
    std::vector<int> w = letters;
    w.insert(w.end(), o.letters.begin(), o.letters.end());
    return BraidWord(n, std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (image[i] != i + 1) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(image.size(), 0);
    for (int s = 1; s <= size(); ++s) {
        if (seen[s - 1]) continue;
        std::vector<int> c;
        for (int p = s; !seen[p - 1]; p = image[p - 1]) {
            seen[p - 1] = 1;
            c.push_back(p);
        }
        out.push_back(std::move(c));
    }
    return out;
}

Permutation permutation_of(const BraidWord& b) {
    // at[q] = starting position of the strand now at position q
    std::vector<int> at(b.strands);
    for (int i = 0; i < b.strands; ++i) at[i] = i + 1;
    for (int e : b.letters) {
        int i = std::abs(e);
        std::swap(at[i - 1], at[i]);
    }
    Permutation p;
    p.image.assign(b.strands, 0);
    for (int q = 0; q < b.strands; ++q) p.image[at[q] - 1] = q + 1;
    return p;
}

bool is_pure(const BraidWord& b) { return permutation_of(b).is_identity(); }

int closure_component_count(const BraidWord& b) {
    return static_cast<int>(permutation_of(b).cycles().size());
}

bool is_homogeneous(const BraidWord& b) {
    std::vector<int> sign(b.strands, 0);
    for (int e : b.letters) {
        int s = e > 0 ? 1 : -1;
        int& t = sign[std::abs(e)];
        if (t == 0) t = s;
        else if (t != s) return false;
    }
    return true;
}

bool generators_all_present(const BraidWord& b) {
    std::vector<char> seen(b.strands, 0);
    for (int e : b.letters) seen[std::abs(e)] = 1;
    for (int i = 1; i < b.strands; ++i)
        if (!seen[i]) return false;
    return true;
}

FiberData seifert_genus(const BraidWord& b) {
    if (b.letters.empty()) throw NonHomogeneous("empty braid has no Seifert fiber");
    if (!is_homogeneous(b)) throw NonHomogeneous("braid is not homogeneous");
    int comps = closure_component_count(b);
    int twice = 2 + static_cast<int>(b.length()) - b.strands - comps;
    if (twice < 0 || twice % 2 != 0)
        throw NonIntegerGenus("2g = " + std::to_string(twice));
    return {twice / 2, comps};
}

namespace {

void down(std::vector<int>& w, int hi, int lo) {
    for (int j = hi; j >= lo; --j) w.push_back(j);
}
void up(std::vector<int>& w, int lo, int hi) {
    for (int j = lo; j <= hi; ++j) w.push_back(j);
}

// s_t ... s_2 s_1^2 s_2^-1 s_3 ... s_t
void clasp1(std::vector<int>& w, int t) {
    down(w, t, 2);
    w.push_back(1);
    w.push_back(1);
    w.push_back(-2);
    up(w, 3, t);
}

// s_t ... s_3 s_2^2 s_3 ... s_t
void clasp2(std::vector<int>& w, int t) {
    down(w, t, 3);
    w.push_back(2);
    w.push_back(2);
    up(w, 3, t);
}

} // namespace

BraidWord make_bk(int k) {
    if (k < 1) throw DomainError("make_bk needs k >= 1");
    if (k == 1) return BraidWord(3, {-1, -1, 2, 2});
    std::vector<int> w;
    if (k % 2 == 0) {
        int m = k / 2;
        for (int i = 1; i <= m; ++i) {
            clasp1(w, 2 * i + 1);
            clasp2(w, 2 * i + 2);
        }
    } else {
        int m = (k + 1) / 2;
        w.push_back(1);
        clasp1(w, 3);
        for (int i = 2; i <= m; ++i) {
            clasp2(w, 2 * i);
            clasp1(w, 2 * i + 1);
        }
    }
    return BraidWord(k + 3, std::move(w));
}

namespace {

BraidWord omega9() {
    std::vector<int> w;
    // (s4 s3^2 s4)
    w.insert(w.end(), {4, 3, 3, 4});
    // (s5 s4 s3 s2^2 s3 s4 s5)
    clasp2(w, 5);
    // (s6 ... s2 s1^2 s2^-1 s3 ... s6)
    clasp1(w, 6);
    // (s7 ... s3 s2^2 s3^-1 s4 ... s7)
    down(w, 7, 3);
    w.push_back(2);
    w.push_back(2);
    w.push_back(-3);
    up(w, 4, 7);
    return BraidWord(8, std::move(w));
}

} // namespace

BraidWord make_omega(int m) {
    if (m < 4) throw DomainError("make_omega needs m >= 4");
    if (m == 4) return make_bk(1);
    if (m % 2 == 0) return make_bk(m - 4);
    if (m == 5 || m == 7) return embed_with_trivial_strands(make_omega(m - 1), 2);
    if (m == 9) return omega9();
    int s = (m - 7) / 2;
    std::vector<int> w = omega9().letters;
    for (int i = 2; i <= s; ++i) {
        down(w, 4 + 2 * i, 4);
        w.push_back(3);
        w.push_back(3);
        up(w, 4, 4 + 2 * i);
        down(w, 5 + 2 * i, 3);
        w.push_back(2);
        w.push_back(2);
        w.push_back(-3);
        up(w, 4, 5 + 2 * i);
    }
    return BraidWord(6 + 2 * s, std::move(w));
}

BraidWord make_Lnm(int n, int m) {
    if (n < 4 || m < 1) throw DomainError("make_Lnm needs n >= 4 and m >= 1");
    // Borromean core (s2^-1 s1)^3, then the K4/K5 clasps s4^-2 s3^2 s4^-2
    std::vector<int> w = {-2, 1, -2, 1, -2, 1, -4, -4, 3, 3, -4, -4};
    int twists = n == 4 ? 2 * m - 1 : 2 * m;
    w.insert(w.end(), twists, -4);
    if (n == 4) return BraidWord(5, std::move(w));
    // K_{j+1} clasps into the first s_{j-1}^2 block: s_j^-2e s_{j-1}^2e s_j^-2e
    for (int j = 5; j < n; ++j) {
        int e = (j - 1) % 2 == 1 ? 1 : -1;
        auto it = std::find(w.begin(), w.end(), e * (j - 1));
        std::vector<int> block = {-e * j, -e * j, e * (j - 1), e * (j - 1), -e * j, -e * j};
        it = w.erase(it, it + 2);
        w.insert(it, block.begin(), block.end());
    }
    return BraidWord(n, std::move(w));
}

BraidWord embed_with_trivial_strands(const BraidWord& b, int p) {
    if (p < 2) throw DomainError("embedding needs p >= 2");
    return BraidWord(b.strands + p - 1, b.letters);
}

BraidWord shift_up(const BraidWord& b, int s) {
    std::vector<int> w = b.letters;
    for (int& e : w) e += e > 0 ? s : -s;
    return BraidWord(b.strands + s, std::move(w));
}

BraidWord restrict_to_strands(const BraidWord& b, const std::vector<int>& keep) {
    std::set<int> kept(keep.begin(), keep.end());
    std::vector<int> at(b.strands);
    for (int i = 0; i < b.strands; ++i) at[i] = i + 1;
    std::vector<int> w;
    for (int e : b.letters) {
        int i = std::abs(e);
        int a = at[i - 1], c = at[i];
        if (kept.count(a) && kept.count(c)) {
            // new index: kept strands at positions <= i
            int idx = 0;
            for (int q = 0; q < i; ++q)
                if (kept.count(at[q])) ++idx;
            w.push_back(e > 0 ? idx : -idx);
        }
        std::swap(at[i - 1], at[i]);
    }
    return BraidWord(std::max<int>(1, static_cast<int>(kept.size())), std::move(w));
}

std::map<std::string, BraidWord> named_constant_braids() {
    std::map<std::string, BraidWord> c;
    c["L6a4"] = BraidWord(3, {1, -2, 1, -2, 1, -2});
    c["L6a4-alt"] = BraidWord(3, {-1, 2, -1, 2, -1, 2});
    c["L8n7"] = BraidWord(4, {1, -2, -2, 1, -3, -2, -2, -3});
    c["L10n87"] = BraidWord(3, {1, 1, 1, 2, 2, 1, 1, 2, 2, 1});
    c["L10n97"] = BraidWord(4, {-1, -1, -1, -2, -2, -1, -3, -2, -2, -3});
    c["L10n108"] = BraidWord(4, {-1, -2, -1, -2, -1, -2, 3, -2, -2, 3});
    c["L11n385"] = BraidWord(4, {-1, -2, -1, -2, -1, -2, 3, -2, -2, 3, -2});
    c["remark-closed-braid"] = BraidWord(
        6, {4, 3, 2, 1, 1, 2, -3, 4, 5, 4, 3, 3, 4, 5, 1, 2, 3, 4, 5, 5, 4, 3, 2, 1});
    return c;
}

BraidWord parse_braid(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
            ++i;
    };
    skip();
    if (i >= text.size() || text[i] != 'B') throw ParseError("expected 'B'", i);
    ++i;
    std::size_t start = i;
    int n = 0;
    auto r = std::from_chars(text.data() + i, text.data() + text.size(), n);
    if (r.ec != std::errc() || r.ptr == text.data() + i) throw ParseError("expected strand count", start);
    i = r.ptr - text.data();
    if (n < 1) throw ParseError("strand count must be positive", start);
    if (i >= text.size() || text[i] != ':') throw ParseError("expected ':'", i);
    ++i;
    std::vector<int> w;
    for (;;) {
        skip();
        if (i >= text.size()) break;
        std::size_t at = i;
        std::size_t j = i;
        if (text[j] == '+' || text[j] == '-') ++j;
        int v = 0;
        auto rr = std::from_chars(text.data() + j, text.data() + text.size(), v);
        if (rr.ec != std::errc() || rr.ptr == text.data() + j) throw ParseError("expected signed integer", at);
        if (text[i] == '-') v = -v;
        i = rr.ptr - text.data();
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError("unexpected character", i);
        if (v == 0 || std::abs(v) > n - 1)
            throw ParseError("letter out of range for B" + std::to_string(n), at);
        w.push_back(v);
    }
    return BraidWord(n, std::move(w));
}

std::string to_string(const BraidWord& b) {
    std::string s = "B" + std::to_string(b.strands) + ":";
    for (int e : b.letters) s += " " + std::to_string(e);
    return s;
}

} // namespace shadow
