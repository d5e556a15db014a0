#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nkwalk/errors.hpp"
#include "nkwalk/rng.hpp"

namespace nkwalk {

// Fixed-length binary allele vector. Genomes are plain values; variation
// operators return fresh copies and never touch their inputs.
//
// Whenever a genome is read as an integer (value(), optimum tie-breaking),
// gene 0 is the most significant bit, so "10" reads as 2.
class Genome {
public:
    Genome() = default;
    explicit Genome(std::size_t length) : alleles_(length, 0) {}

    static Genome random(std::size_t length, Xoshiro256& rng) {
        Genome g(length);
        for (auto& a : g.alleles_) a = rng.next_bit() ? 1 : 0;
        return g;
    }

    static Genome from_string(std::string_view bits) {
        Genome g(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != '0' && bits[i] != '1')
                throw ParameterError("genome string must contain only '0'/'1'");
            g.alleles_[i] = static_cast<std::uint8_t>(bits[i] - '0');
        }
        return g;
    }

    static Genome from_value(std::uint32_t value, std::size_t length) {
        if (length > 32) throw CapacityError("genome value only covers lengths <= 32");
        Genome g(length);
        for (std::size_t i = 0; i < length; ++i)
            g.alleles_[i] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1u);
        return g;
    }

    std::size_t size() const noexcept { return alleles_.size(); }
    std::uint8_t operator[](std::size_t locus) const noexcept { return alleles_[locus]; }
    const std::uint8_t* data() const noexcept { return alleles_.data(); }

    void flip(std::size_t locus) {
        if (locus >= alleles_.size()) throw ParameterError("flip locus out of range");
        alleles_[locus] ^= 1u;
    }

    std::uint32_t value() const {
        if (alleles_.size() > 32) throw CapacityError("genome value only covers lengths <= 32");
        std::uint32_t v = 0;
        for (const auto a : alleles_) v = (v << 1) | a;
        return v;
    }

    std::string to_string() const {
        std::string s(alleles_.size(), '0');
        for (std::size_t i = 0; i < alleles_.size(); ++i) s[i] = static_cast<char>('0' + alleles_[i]);
        return s;
    }

    bool operator==(const Genome&) const = default;

private:
    std::vector<std::uint8_t> alleles_;
};

inline std::size_t hamming_distance(const Genome& a, const Genome& b) {
    if (a.size() != b.size()) throw ParameterError("hamming distance needs equal lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
    return d;
}

}  // namespace nkwalk
