#pragma once

#include "shadow/braid.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace testing_support {

// SHADOW_SEED overrides the fixed default so failures can be replayed
inline std::uint64_t seed(std::uint64_t fallback = 20240611) {
    if (const char* s = std::getenv("SHADOW_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

inline shadow::BraidWord random_braid(std::mt19937_64& rng, int n, int len) {
    std::vector<int> w;
    if (n < 2) return shadow::BraidWord(n, {});
    std::uniform_int_distribution<int> gen(1, n - 1), sgn(0, 1);
    for (int i = 0; i < len; ++i) w.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    return shadow::BraidWord(n, std::move(w));
}

// random word using every generator at least once
inline shadow::BraidWord random_full_braid(std::mt19937_64& rng, int n, int max_len) {
    std::uniform_int_distribution<int> extra(0, std::max(0, max_len - (n - 1)));
    std::vector<int> w;
    for (int i = 1; i < n; ++i) w.push_back(i);
    int k = extra(rng);
    std::uniform_int_distribution<int> gen(1, n - 1), sgn(0, 1);
    for (int i = 0; i < k; ++i) w.push_back(gen(rng));
    std::shuffle(w.begin(), w.end(), rng);
    for (int& e : w)
        if (sgn(rng)) e = -e;
    return shadow::BraidWord(n, std::move(w));
}

} // namespace testing_support
