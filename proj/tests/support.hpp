#pragma once

#include "kucalc/kumodule.hpp"
#include "kucalc/zlinalg.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kutest {

/// SplitMix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi].
    long range(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    unsigned index(std::size_t n) { return static_cast<unsigned>(next() % n); }
    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

/// Terms v^m [i,j] with m + i + j = delta + 1.
inline kucalc::ModuleElement random_homogeneous(Rng& rng, unsigned delta, unsigned terms,
                                                long cmax)
{
    kucalc::ModuleElement x;
    for (unsigned k = 0; k < terms; ++k) {
        const auto i = static_cast<unsigned>(rng.range(1, delta));
        const auto j = static_cast<unsigned>(rng.range(1, delta + 1 - i));
        x.add({delta + 1 - i - j, i, j}, kucalc::PLocalScalar(rng.range(-cmax, cmax)));
    }
    return x;
}

inline kucalc::ModuleElement random_element(Rng& rng, unsigned terms, unsigned imax, unsigned mmax,
                                            long cmax)
{
    kucalc::ModuleElement x;
    for (unsigned k = 0; k < terms; ++k) {
        const kucalc::Monomial mono{static_cast<unsigned>(rng.range(0, mmax)),
                                    static_cast<unsigned>(rng.range(1, imax)),
                                    static_cast<unsigned>(rng.range(1, imax))};
        x.add(mono, kucalc::PLocalScalar(rng.range(-cmax, cmax)));
    }
    return x;
}

inline kucalc::IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound)
{
    kucalc::IntMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a(r, c) = rng.range(-bound, bound);
    return a;
}

struct GoldenSlice {
    int degree;
    std::uint64_t coker_log;
    std::uint64_t ker_log;
};

inline std::string golden_path(std::uint64_t p, unsigned t, unsigned n)
{
    return std::string(KUCALC_GOLDEN_DIR) + "/e01_p" + std::to_string(p) + "_t" +
           std::to_string(t) + "_n" + std::to_string(n) + ".json";
}

inline std::vector<GoldenSlice> load_golden(std::uint64_t p, unsigned t, unsigned n)
{
    std::ifstream in(golden_path(p, t, n));
    if (!in)
        throw std::runtime_error("missing golden table " + golden_path(p, t, n));
    const auto j = nlohmann::json::parse(in);
    std::vector<GoldenSlice> out;
    for (const auto& s : j.at("slices"))
        out.push_back({s.at("degree").get<int>(), s.at("coker_log").get<std::uint64_t>(),
                       s.at("ker_log").get<std::uint64_t>()});
    return out;
}

}  // namespace kutest
