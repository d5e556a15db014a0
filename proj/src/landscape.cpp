#include "nkwalk/landscape.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "nkwalk/textio.hpp"

namespace nkwalk {

namespace {

void check_shape(std::uint32_t n, std::uint32_t k) {
    if (n == 0) throw ParameterError("n must be at least 1");
    if (k >= n) throw ParameterError("k must satisfy k <= n-1");
    // Table memory is n * 2^(k+1) doubles; refuse anything past ~2 GiB.
    const std::uint64_t table_bytes = std::uint64_t{n} * (k + 1 >= 64 ? ~0ULL : (std::uint64_t{8} << (k + 1)));
    if (k + 1 >= 40 || table_bytes > (std::uint64_t{2} << 30))
        throw CapacityError("k too large: fitness tables would exceed 2 GiB");
}

}  // namespace

NkLandscape NkLandscape::generate(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    check_shape(n, k);
    NkLandscape ls;
    ls.n_ = n;
    ls.k_ = k;
    ls.seed_ = seed;
    ls.neighbors_.resize(static_cast<std::size_t>(n) * k);
    ls.tables_.resize(static_cast<std::size_t>(n) << (k + 1));

    Xoshiro256 rng(seed);
    const std::size_t table_size = std::size_t{1} << (k + 1);
    for (std::uint32_t gene = 0; gene < n; ++gene) {
        std::uint32_t* nb = ls.neighbors_.data() + static_cast<std::size_t>(gene) * k;
        for (std::uint32_t j = 0; j < k; ++j) {
            std::uint32_t candidate;
            bool fresh;
            do {
                candidate = static_cast<std::uint32_t>(rng.next_below(n));
                fresh = candidate != gene;
                for (std::uint32_t prev = 0; fresh && prev < j; ++prev)
                    fresh = nb[prev] != candidate;
            } while (!fresh);
            nb[j] = candidate;
        }
        double* tb = ls.tables_.data() + static_cast<std::size_t>(gene) * table_size;
        for (std::size_t t = 0; t < table_size; ++t) tb[t] = rng.next_unit();
    }
    return ls;
}

NkLandscape NkLandscape::from_parts(std::uint32_t n, std::uint32_t k, std::uint64_t seed,
                                    std::vector<std::uint32_t> neighbors,
                                    std::vector<double> tables) {
    check_shape(n, k);
    const std::size_t table_size = std::size_t{1} << (k + 1);
    if (neighbors.size() != static_cast<std::size_t>(n) * k)
        throw ParameterError("neighbor list must hold exactly n*k entries");
    if (tables.size() != static_cast<std::size_t>(n) * table_size)
        throw ParameterError("tables must hold exactly n*2^(k+1) entries");
    for (std::uint32_t gene = 0; gene < n; ++gene) {
        const std::uint32_t* nb = neighbors.data() + static_cast<std::size_t>(gene) * k;
        for (std::uint32_t j = 0; j < k; ++j) {
            if (nb[j] >= n) throw ParameterError("neighbor index out of range");
            if (nb[j] == gene) throw ParameterError("gene listed as its own neighbor");
            for (std::uint32_t prev = 0; prev < j; ++prev)
                if (nb[prev] == nb[j]) throw ParameterError("duplicate neighbor index");
        }
    }
    for (const double v : tables)
        if (!(v >= 0.0) || !(v <= 1.0)) throw ParameterError("table entries must lie in [0,1]");

    NkLandscape ls;
    ls.n_ = n;
    ls.k_ = k;
    ls.seed_ = seed;
    ls.neighbors_ = std::move(neighbors);
    ls.tables_ = std::move(tables);
    return ls;
}

std::span<const std::uint32_t> NkLandscape::neighbors(std::uint32_t gene) const {
    if (gene >= n_) throw ParameterError("gene index out of range");
    return {neighbors_.data() + static_cast<std::size_t>(gene) * k_, k_};
}

std::span<const double> NkLandscape::table(std::uint32_t gene) const {
    if (gene >= n_) throw ParameterError("gene index out of range");
    const std::size_t table_size = std::size_t{1} << (k_ + 1);
    return {tables_.data() + static_cast<std::size_t>(gene) * table_size, table_size};
}

std::pair<Genome, double> NkLandscape::global_optimum() const {
    if (n_ > 24) throw CapacityError("global_optimum enumerates 2^n genomes; n > 24 refused");
    const std::uint32_t total = std::uint32_t{1} << n_;
    Genome best = Genome::from_value(0, n_);
    double best_fitness = fitness(best);
    for (std::uint32_t v = 1; v < total; ++v) {
        const Genome g = Genome::from_value(v, n_);
        const double f = fitness(g);
        if (f > best_fitness) {
            best_fitness = f;
            best = g;
        }
    }
    return {best, best_fitness};
}

void NkLandscape::save(std::ostream& out) const {
    out << "NK n=" << n_ << " k=" << k_ << " seed=" << seed_ << "\n";
    const std::size_t table_size = std::size_t{1} << (k_ + 1);
    for (std::uint32_t gene = 0; gene < n_; ++gene) {
        out << "gene " << gene << " nbrs=";
        const std::uint32_t* nb = neighbors_.data() + static_cast<std::size_t>(gene) * k_;
        for (std::uint32_t j = 0; j < k_; ++j) {
            if (j) out << ',';
            out << nb[j];
        }
        out << " table=";
        const double* tb = tables_.data() + static_cast<std::size_t>(gene) * table_size;
        for (std::size_t t = 0; t < table_size; ++t) {
            if (t) out << ',';
            out << format_double(tb[t]);
        }
        out << "\n";
    }
    if (!out) throw IoError("write failed while saving landscape");
}

NkLandscape NkLandscape::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("landscape file: missing header");
    {
        const auto fields = split(trim(line), ' ');
        if (fields.size() != 4 || fields[0] != "NK" || !fields[1].starts_with("n=") ||
            !fields[2].starts_with("k=") || !fields[3].starts_with("seed="))
            throw IoError("landscape file line 1: expected 'NK n=<n> k=<k> seed=<seed>'");
    }
    const auto header = split(trim(line), ' ');
    const std::uint32_t n = parse_u32(header[1].substr(2), "landscape header n");
    const std::uint32_t k = parse_u32(header[2].substr(2), "landscape header k");
    const std::uint64_t seed = parse_u64(header[3].substr(5), "landscape header seed");
    check_shape(n, k);

    const std::size_t table_size = std::size_t{1} << (k + 1);
    std::vector<std::uint32_t> neighbors;
    neighbors.reserve(static_cast<std::size_t>(n) * k);
    std::vector<double> tables;
    tables.reserve(static_cast<std::size_t>(n) * table_size);

    for (std::uint32_t gene = 0; gene < n; ++gene) {
        const std::string context = "landscape file line " + std::to_string(gene + 2);
        if (!std::getline(in, line)) throw IoError(context + ": missing gene line");
        const auto fields = split(trim(line), ' ');
        if (fields.size() != 4 || fields[0] != "gene" || !fields[2].starts_with("nbrs=") ||
            !fields[3].starts_with("table="))
            throw IoError(context + ": expected 'gene <i> nbrs=... table=...'");
        if (parse_u32(fields[1], context + " gene index") != gene)
            throw IoError(context + ": gene index out of order");
        const std::string_view nbrs = fields[2].substr(5);
        if (k == 0) {
            if (!nbrs.empty()) throw IoError(context + ": expected empty neighbor list at k=0");
        } else {
            const auto parts = split(nbrs, ',');
            if (parts.size() != k) throw IoError(context + ": expected " + std::to_string(k) + " neighbors");
            for (const auto part : parts) neighbors.push_back(parse_u32(part, context + " neighbor"));
        }
        const auto values = split(fields[3].substr(6), ',');
        if (values.size() != table_size)
            throw IoError(context + ": expected " + std::to_string(table_size) + " table values");
        for (const auto value : values) tables.push_back(parse_double(value, context + " table value"));
    }
    return from_parts(n, k, seed, std::move(neighbors), std::move(tables));
}

void NkLandscape::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    save(out);
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

NkLandscape NkLandscape::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load(in);
}

}  // namespace nkwalk
