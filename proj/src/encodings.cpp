#include "nodeshift/encodings.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace nodeshift {

const char* to_string(Encoding encoding) {
    switch (encoding) {
        case Encoding::nse: return "NSE";
        case Encoding::dc: return "DC";
        case Encoding::pr: return "PR";
    }
    return "?";
}

namespace {

void check_reference(const Tour& reference, const char* who) {
    const int n = reference.size();
    if (n < 3) {
        throw std::invalid_argument(std::string(who) + ": reference tour needs at least 3 cities");
    }
    if (auto violation = validate_tour(reference.order, n)) {
        throw std::invalid_argument(std::string(who) + ": invalid reference tour: " + *violation);
    }
}

// The decoder itself accepts one full circle, [0, n-1]; a shift of n-1 is a
// no-op. The GA's genotype contract is the tighter [0, n-2], enforced by the
// adapter; nse_reduce folds anything larger into range.
void check_nse_genotype(std::span<const int> shifts, int n) {
    if (static_cast<int>(shifts.size()) != n - 1) {
        throw std::invalid_argument("nse_decode: chromosome length " +
                                    std::to_string(shifts.size()) + ", expected " +
                                    std::to_string(n - 1));
    }
    for (int gene : shifts) {
        if (gene < 0 || gene > n - 1) {
            throw std::invalid_argument("nse_decode: shift " + std::to_string(gene) +
                                        " outside the circular range [0, " +
                                        std::to_string(n - 1) + "]; reduce it first");
        }
    }
}

// Rank bookkeeping for one chromosome. rank[i] is the current position of
// the city at reference index i; index 0 never moves. For each gene the
// mover jumps to rank + shift (one wrap past the end re-enters at rank 1,
// skipping the fixed head) and the bypassed cities slide one rank towards
// the hole.
class RankDecoder {
public:
    explicit RankDecoder(const Tour& reference)
        : reference_(&reference), rank_(reference.order.size()) {
        std::iota(rank_.begin(), rank_.end(), 0);
    }

    void apply_gene(int index, int shift) {
        const int len = static_cast<int>(rank_.size());
        const int old_rank = rank_[index];
        int new_rank = old_rank + shift;
        if (new_rank > len - 1) new_rank = new_rank - len + 1;
        // One wrap is always enough with alleles capped at len - 2.
        assert(new_rank >= 1 && new_rank <= len - 1);

        if (new_rank > old_rank) {
            for (int& r : rank_) {
                if (r >= old_rank && r <= new_rank) --r;
            }
        } else {
            for (int& r : rank_) {
                if (r >= new_rank && r < old_rank) ++r;
            }
        }
        rank_[index] = new_rank;
    }

    Tour current_tour() const {
        Tour tour;
        tour.order.resize(rank_.size());
        for (std::size_t i = 0; i < rank_.size(); ++i) {
            tour.order[rank_[i]] = reference_->order[i];
        }
        return tour;
    }

private:
    const Tour* reference_;
    std::vector<int> rank_;
};

}  // namespace

Tour nse_decode(const Tour& reference, std::span<const int> shifts) {
    check_reference(reference, "nse_decode");
    const int n = reference.size();
    check_nse_genotype(shifts, n);

    RankDecoder decoder(reference);
    for (int i = 1; i < n; ++i) decoder.apply_gene(i, shifts[i - 1]);
    return decoder.current_tour();
}

Tour nse_decode_traced(const Tour& reference, std::span<const int> shifts,
                       std::vector<Tour>& states) {
    check_reference(reference, "nse_decode");
    const int n = reference.size();
    check_nse_genotype(shifts, n);

    states.clear();
    RankDecoder decoder(reference);
    for (int i = 1; i < n; ++i) {
        decoder.apply_gene(i, shifts[i - 1]);
        states.push_back(decoder.current_tour());
    }
    return states.back();
}

int nse_reduce(std::int64_t raw_shift, int n) {
    if (n < 3) throw std::invalid_argument("nse_reduce: n must be at least 3");
    if (raw_shift < 0) throw std::invalid_argument("nse_reduce: negative shift count");
    return static_cast<int>(raw_shift % (n - 1));
}

Tour dc_decode(const Tour& map_tour, std::span<const int> guide) {
    check_reference(map_tour, "dc_decode");
    const int n = map_tour.size();
    if (guide.size() % 2 != 0) {
        throw std::invalid_argument("dc_decode: guide length " +
                                    std::to_string(guide.size()) + " is odd");
    }
    for (int pos : guide) {
        if (pos < 0 || pos >= n) {
            throw std::invalid_argument("dc_decode: position " + std::to_string(pos + 1) +
                                        " outside [1, " + std::to_string(n) + "]");
        }
    }

    Tour tour = map_tour;
    for (std::size_t k = 0; k + 1 < guide.size(); k += 2) {
        std::swap(tour.order[guide[k]], tour.order[guide[k + 1]]);
    }
    return tour;
}

Tour pr_decode(std::span<const int> genotype) {
    const int n = static_cast<int>(genotype.size());
    if (auto violation = validate_tour(genotype, n)) {
        throw std::invalid_argument("pr_decode: " + *violation);
    }
    Tour tour;
    tour.order.assign(genotype.begin(), genotype.end());
    return tour;
}

EncodingAdapter::EncodingAdapter(Encoding kind, int n, int genotype_length, Tour reference)
    : kind_(kind), n_(n), genotype_length_(genotype_length), reference_(std::move(reference)) {}

EncodingAdapter EncodingAdapter::nse(Tour reference) {
    check_reference(reference, "EncodingAdapter::nse");
    const int n = reference.size();
    return EncodingAdapter(Encoding::nse, n, n - 1, std::move(reference));
}

EncodingAdapter EncodingAdapter::dc(Tour map_tour, int guide_length) {
    check_reference(map_tour, "EncodingAdapter::dc");
    const int n = map_tour.size();
    if (guide_length == 0) guide_length = n - n % 2;
    if (guide_length < 2 || guide_length % 2 != 0) {
        throw std::invalid_argument("EncodingAdapter::dc: guide length must be even and >= 2, got " +
                                    std::to_string(guide_length));
    }
    return EncodingAdapter(Encoding::dc, n, guide_length, std::move(map_tour));
}

EncodingAdapter EncodingAdapter::pr(int n) {
    return EncodingAdapter(Encoding::pr, n, n, canonical_tour(n));
}

int EncodingAdapter::gene_min() const {
    if (kind_ == Encoding::pr) throw std::logic_error("PR genotypes have no per-gene bounds");
    return 0;
}

int EncodingAdapter::gene_max() const {
    switch (kind_) {
        case Encoding::nse: return n_ - 2;
        case Encoding::dc: return n_ - 1;
        case Encoding::pr: break;
    }
    throw std::logic_error("PR genotypes have no per-gene bounds");
}

Tour EncodingAdapter::decode(std::span<const int> genotype) const {
    switch (kind_) {
        case Encoding::nse:
            // GA individuals live in the tight allele range; a gene of n-1
            // would decode fine but marks a broken operator upstream.
            for (int gene : genotype) {
                if (gene < 0 || gene > n_ - 2) {
                    throw std::invalid_argument(
                        "NSE genotype: allele " + std::to_string(gene) + " outside [0, " +
                        std::to_string(n_ - 2) + "]");
                }
            }
            return nse_decode(reference_, genotype);
        case Encoding::dc: return dc_decode(reference_, genotype);
        case Encoding::pr: return pr_decode(genotype);
    }
    throw std::logic_error("unknown encoding");
}

Genotype EncodingAdapter::random_genotype(Rng& rng) const {
    Genotype g(genotype_length_);
    if (kind_ == Encoding::pr) {
        std::iota(g.begin(), g.end(), 0);
        for (int i = n_ - 1; i > 0; --i) {
            std::swap(g[i], g[rng.uniform_int(0, i)]);
        }
    } else {
        const int hi = gene_max();
        for (int& gene : g) gene = rng.uniform_int(0, hi);
    }
    return g;
}

Genotype EncodingAdapter::seed_genotype(const Tour& tour) const {
    if (auto violation = validate_tour(tour.order, n_)) {
        throw std::invalid_argument("seed_genotype: invalid tour: " + *violation);
    }
    if (kind_ == Encoding::pr) return tour.order;
    if (!(tour == reference_)) {
        throw std::invalid_argument(
            "seed_genotype: " + std::string(to_string(kind_)) +
            " can only seed the adapter's own reference tour (rebuild the adapter "
            "around the seed)");
    }
    // All zeros: zero shifts for NSE, (1,1) self-swaps for DC.
    return Genotype(genotype_length_, 0);
}

}  // namespace nodeshift
