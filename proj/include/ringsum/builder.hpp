#ifndef RINGSUM_BUILDER_HPP
#define RINGSUM_BUILDER_HPP

#include "ringsum/pflde.hpp"
#include "ringsum/sequence.hpp"

namespace ringsum {

// Outcome of trying to model a sum or product on top of a tower: either the
// object already lives in the ring (Collapsed, with the witness), or a new
// generator is adjoined with the characterization test passed (Extended), or
// a product collapses at a higher power only (Rejected: sigma(g) = alpha^m g
// with 1 < m < ord, so neither an R- nor a Pi-extension exists).
struct AdjoinOutcome {
    enum class Kind { Collapsed, Extended, Rejected } kind;
    Tower tower;
    std::string genName;   // Extended
    TowerElem witness;     // Collapsed / Rejected
    long rejectedPower = 0;
};

AdjoinOutcome adjoin_sigma(const Tower& t, const TowerElem& beta, const std::string& name,
                           const Limits& lim = {});
AdjoinOutcome adjoin_product(const Tower& t, const PGElem& alpha, const std::string& name,
                             const Limits& lim = {});

// g with sigma(g) = alpha g, so that prod_{k=a}^{b} alpha(k) = g(b+1)/g(a).
std::optional<TowerElem> rewrite_product(const Tower& t, const PGElem& alpha,
                                         const Limits& lim = {});

// Bivariate hypergeometric family F(n, k) described by its two quotients,
// both rational: kQuotient = F(n,k+1)/F(n,k), nQuotient = F(n+1,k)/F(n,k).
struct HypergeomFamily {
    RatFun kQuotient;
    RatFun nQuotient;
    size_t paramIndex = 0;
};

struct Recurrence {
    long order = 0;
    KVec coeffs;                   // c_1..c_{order+1} for S(n), ..., S(n+order)
    Tower tower;
    TowerElem certificate;
    std::vector<TowerElem> inputs; // f_i representing F(n+i-1, k)
};

std::optional<Recurrence> creative_telescope(const FieldPtr& K, const HypergeomFamily& F,
                                             long maxOrder, const Limits& lim = {});

// Re-runs the characterization test of every generator against its sub-tower
// and checks that the constants are exactly K.
struct TowerReport {
    struct Entry {
        std::string name;
        bool ok;
        std::string note;
    };
    std::vector<Entry> entries;
    bool all_ok() const {
        for (const Entry& e : entries)
            if (!e.ok) return false;
        return true;
    }
};
TowerReport verify_tower(const Tower& t, const Limits& lim = {});

} // namespace ringsum

#endif
