#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nkwalk/errors.hpp"
#include "nkwalk/genome.hpp"
#include "nkwalk/rng.hpp"

namespace nkwalk {

// Random epistatic fitness landscape over length-n binary genomes.
//
// Gene i holds a table of 2^(k+1) contributions in [0,1), one per joint
// setting of the gene itself and its k epistatic neighbours. Table index bit
// order: the gene's own allele is the most significant bit, then the
// neighbours in stored order. Total fitness is the mean contribution, so it
// always lies in [0,1].
//
// generate() is fully determined by (n, k, seed): a Xoshiro256 stream seeded
// with `seed` draws, gene by gene, first the k neighbour indices (uniform
// without replacement from the other genes) and then the table entries
// (uniform in [0,1)). Instances are immutable afterwards and safe to share
// across threads.
class NkLandscape {
public:
    static NkLandscape generate(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

    // Assembles a landscape from explicit parts, validating every invariant.
    // `neighbors` is flat with k entries per gene, `tables` flat with
    // 2^(k+1) entries per gene.
    static NkLandscape from_parts(std::uint32_t n, std::uint32_t k, std::uint64_t seed,
                                  std::vector<std::uint32_t> neighbors,
                                  std::vector<double> tables);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint64_t seed() const noexcept { return seed_; }

    std::span<const std::uint32_t> neighbors(std::uint32_t gene) const;
    std::span<const double> table(std::uint32_t gene) const;

    double gene_contribution(const Genome& genome, std::uint32_t gene) const {
        if (genome.size() != n_) throw ParameterError("genome length does not match landscape n");
        if (gene >= n_) throw ParameterError("gene index out of range");
        return tables_[static_cast<std::size_t>(gene) << (k_ + 1) | table_index(genome, gene)];
    }

    double fitness(const Genome& genome) const {
        if (genome.size() != n_) throw ParameterError("genome length does not match landscape n");
        const std::uint32_t k = k_;
        const std::uint32_t* nb = neighbors_.data();
        const double* tb = tables_.data();
        const std::size_t table_size = std::size_t{1} << (k + 1);
        double sum = 0.0;
        for (std::uint32_t gene = 0; gene < n_; ++gene) {
            std::uint32_t index = static_cast<std::uint32_t>(genome[gene]) << k;
            for (std::uint32_t j = 0; j < k; ++j)
                index |= static_cast<std::uint32_t>(genome[nb[j]]) << (k - 1 - j);
            sum += tb[index];
            nb += k;
            tb += table_size;
        }
        return sum / n_;
    }

    // Exhaustive scan over all 2^n genomes, ties resolved to the lowest
    // genome value. Refuses n > 24.
    std::pair<Genome, double> global_optimum() const;

    // Text format: header `NK n=<n> k=<k> seed=<seed>`, then one line per
    // gene `gene <i> nbrs=<c1,...,ck> table=<v1,...>` (nbrs= stays empty at
    // k=0). Values are printed at round-trip precision, so a loaded
    // landscape evaluates identically to the generated one.
    void save(std::ostream& out) const;
    static NkLandscape load(std::istream& in);
    void save_file(const std::string& path) const;
    static NkLandscape load_file(const std::string& path);

private:
    NkLandscape() = default;

    std::uint32_t table_index(const Genome& genome, std::uint32_t gene) const noexcept {
        const std::uint32_t k = k_;
        std::uint32_t index = static_cast<std::uint32_t>(genome[gene]) << k;
        const std::uint32_t* nb = neighbors_.data() + static_cast<std::size_t>(gene) * k;
        for (std::uint32_t j = 0; j < k; ++j)
            index |= static_cast<std::uint32_t>(genome[nb[j]]) << (k - 1 - j);
        return index;
    }

    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::uint32_t> neighbors_;  // flat, k per gene
    std::vector<double> tables_;            // flat, 2^(k+1) per gene
};

}  // namespace nkwalk
