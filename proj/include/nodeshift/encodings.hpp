#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nodeshift/rng.hpp"
#include "nodeshift/tour.hpp"

namespace nodeshift {

enum class Encoding { nse, dc, pr };

const char* to_string(Encoding encoding);

/// Genotype vector shared by all three encodings: NSE shift counts, DC swap
/// positions (0-based internally) or a PR permutation of city ids.
using Genotype = std::vector<int>;

/// Node-shift decoding.
///
/// shifts[k] moves the city sitting at reference position k+2 (1-based)
/// forward by that many places, gene by gene, left to right. Moves act
/// circularly: walking past the last position re-enters at position 2, so
/// the reference's first city never leaves the front. The decoder accepts
/// one full circle per gene, [0, n-1] (a shift of n-1 is a no-op); the GA's
/// genotype contract is the tighter [0, n-2] and EncodingAdapter::decode
/// enforces it. Wrong lengths or out-of-circle shifts throw
/// std::invalid_argument.
Tour nse_decode(const Tour& reference, std::span<const int> shifts);

/// Same as nse_decode but records the tour after each gene. `states` ends up
/// with one entry per gene; the last equals the returned tour. Drives the
/// CLI `decode` trace.
Tour nse_decode_traced(const Tour& reference, std::span<const int> shifts,
                       std::vector<Tour>& states);

/// Folds an arbitrary non-negative shift count into the canonical allele
/// range [0, n-2]: every n-1 circular moves return an index to its starting
/// rank, so this is raw_shift mod (n-1).
int nse_reduce(std::int64_t raw_shift, int n);

/// Double-chromosome decoding: applies the guide's consecutive position
/// pairs (guide[0],guide[1]), (guide[2],guide[3]), ... as swaps on a copy of
/// the map tour. Guide entries are 0-based positions here; the CLI boundary
/// speaks 1-based. Odd-length guides and out-of-range positions throw.
Tour dc_decode(const Tour& map_tour, std::span<const int> guide);

/// Path-representation decoding: the genotype is the visit order itself.
/// Validates and returns it.
Tour pr_decode(std::span<const int> genotype);

/// One encoding behind a uniform genotype contract, consumed by the GA.
/// Immutable after construction; decode and sampling are pure apart from
/// the caller-supplied random stream.
class EncodingAdapter {
public:
    /// NSE over a reference tour. Genotype length n-1, genes in [0, n-2].
    static EncodingAdapter nse(Tour reference);

    /// DC over a map tour. Genotype length defaults to n rounded down to
    /// even (one swap per two genes); genes are positions in [0, n-1].
    static EncodingAdapter dc(Tour map_tour, int guide_length = 0);

    /// PR over n cities. The genotype is the tour; no per-gene bounds.
    static EncodingAdapter pr(int n);

    Encoding kind() const { return kind_; }
    int n() const { return n_; }
    int genotype_length() const { return genotype_length_; }

    /// Inclusive per-gene bounds for NSE and DC. Meaningless for PR, whose
    /// validity is being a permutation; callers must not ask.
    int gene_min() const;
    int gene_max() const;

    /// NSE's reference, DC's map chromosome. PR keeps the canonical tour
    /// here so the accessor is always a valid tour, but never reads it.
    const Tour& reference_tour() const { return reference_; }

    Tour decode(std::span<const int> genotype) const;

    /// NSE/DC: independent uniform genes within bounds. PR: Fisher-Yates
    /// shuffle, every permutation equally likely.
    Genotype random_genotype(Rng& rng) const;

    /// A genotype that decodes exactly to `tour`: the all-zero chromosome
    /// (NSE), an all-self-swap guide (DC) or the tour itself (PR). For NSE
    /// and DC the adapter's reference must already be `tour`.
    Genotype seed_genotype(const Tour& tour) const;

private:
    EncodingAdapter(Encoding kind, int n, int genotype_length, Tour reference);

    Encoding kind_;
    int n_;
    int genotype_length_;
    Tour reference_;
};

}  // namespace nodeshift
