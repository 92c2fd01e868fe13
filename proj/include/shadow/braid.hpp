#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace shadow {

// Word in B_n. Letter +i is sigma_i (strand at position i passes over the one
// at i+1), -i its inverse.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> w);

    std::size_t length() const { return letters.size(); }
    bool operator==(const BraidWord&) const = default;

    BraidWord inverse() const;
    BraidWord operator*(const BraidWord& o) const;  // concatenation, same n
};

// Bijection on {1..n}; image[p-1] is where position p ends up.
struct Permutation {
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int p) const { return image[p - 1]; }
    bool is_identity() const;
    // cycles sorted by least element, each starting at its least element
    std::vector<std::vector<int>> cycles() const;
    bool operator==(const Permutation&) const = default;
};

struct FiberData {
    int genus = 0;
    int boundary = 1;
    bool operator==(const FiberData&) const = default;
};

Permutation permutation_of(const BraidWord& b);
bool is_pure(const BraidWord& b);
int closure_component_count(const BraidWord& b);
bool is_homogeneous(const BraidWord& b);
bool generators_all_present(const BraidWord& b);
FiberData seifert_genus(const BraidWord& b);

BraidWord make_bk(int k);
BraidWord make_omega(int m);
BraidWord make_Lnm(int n, int m);
BraidWord embed_with_trivial_strands(const BraidWord& b, int p);
// sigma_i -> sigma_{i+s}, s extra strands in front
BraidWord shift_up(const BraidWord& b, int s);
// keep only the strands whose starting positions are listed, renumbered in order
BraidWord restrict_to_strands(const BraidWord& b, const std::vector<int>& keep);

std::map<std::string, BraidWord> named_constant_braids();

// "Bn: e1 e2 ..." text form
BraidWord parse_braid(std::string_view text);
std::string to_string(const BraidWord& b);

} // namespace shadow
