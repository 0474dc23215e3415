#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hstree/hst.hpp"

namespace hstree {

// Source of HST embeddings over a fixed point domain. Implementations are
// pure functions of the seed, so drawing in parallel across seeds is safe.
// Every sample must be expanding on the domain it covers.
class EmbeddingSampler {
public:
    virtual ~EmbeddingSampler() = default;
    virtual HstEmbedding sample(std::uint64_t seed) const = 0;
    virtual const std::vector<int>& domain() const = 0;  // sorted point ids
    virtual std::string kind() const = 0;
};

using SamplerPtr = std::shared_ptr<const EmbeddingSampler>;

// Always returns the given embedding.
SamplerPtr fixed_sampler(HstEmbedding e);

// One-leaf embedding of a single point.
SamplerPtr singleton_sampler(int point);
HstEmbedding singleton_embedding(int point);

// Cycles through a user-supplied list of embeddings (seed modulo size).
SamplerPtr list_sampler(std::vector<HstEmbedding> embeddings);

}  // namespace hstree
