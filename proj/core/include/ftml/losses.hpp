#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "ftml/distance.hpp"
#include "ftml/embedding.hpp"
#include "ftml/synonyms.hpp"

namespace ftml {

enum class LossVariant { triplet, contrastive };
enum class AvgMode { nonempty, all };

struct LossConfig {
    Norm p = Norm::l2;
    double alpha = 0.0;            // margin; resolved from alpha_0 before training
    LossVariant variant = LossVariant::triplet;
    double tau = 20.0;             // contrastive temperature
    double epsilon_guard = 1e-12;  // l2 gradient cutoff near coincident vectors
    AvgMode avg_mode = AvgMode::nonempty;
    bool cap_numerator = false;    // also cap the contrastive numerator distances

    void validate() const;
};

// Value and exact analytic gradients, aligned with the call's arguments.
struct WordLossResult {
    double value = 0.0;
    std::vector<double> anchor_grad;
    std::vector<std::vector<double>> positive_grads;
    std::vector<std::vector<double>> negative_grads;
};

// Per-word triplet loss with margin capping:
//   mean_{w' in S} d(w, w') - mean_{n in N} min(d(w, n), alpha) + alpha
// A missing side contributes zero to its mean; both sides empty is an error.
// Negatives at distance >= alpha contribute no gradient.
WordLossResult triplet_loss(VecView anchor, std::span<const VecView> positives,
                            std::span<const VecView> negatives, const LossConfig& config);

// Contrastive variant:
//   -log [ sum_{w' in S} exp(-d(w,w')/tau)
//          / sum_{x in S u N} exp(-min(d(w,x), alpha)/tau) ]
// The numerator uses raw distances unless config.cap_numerator is set.
WordLossResult contrastive_loss(VecView anchor, std::span<const VecView> positives,
                                std::span<const VecView> negatives, const LossConfig& config);

// Sentence-level metric penalty: per-word loss averaged over the sentence,
// with gradients accumulated per word index.
struct LossOutput {
    double value = 0.0;
    std::map<WordId, std::vector<double>> grads;
    std::int64_t counted_tokens = 0;  // tokens that contributed (nonempty S)
};

using NegativeSampler = std::function<NegativeSet(WordId anchor)>;

// Tokens with empty synonym sets contribute zero; with AvgMode::nonempty they
// are also excluded from the averaging denominator. Repeated tokens accumulate.
LossOutput sentence_metric_penalty(std::span<const WordId> tokens, const EmbeddingMatrix& matrix,
                                   const SynonymDict& dict, const NegativeSampler& sample,
                                   const LossConfig& config);

}  // namespace ftml
