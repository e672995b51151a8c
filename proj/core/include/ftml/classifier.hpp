#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <vector>

#include "ftml/embedding.hpp"

namespace ftml {

// Embedding lookup -> masked mean pooling -> affine -> ReLU -> affine ->
// softmax. The head is intentionally small; the metric learning only ever
// touches the embedding layer.
struct ModelParams {
    EmbeddingMatrix embedding;  // V x D
    std::int32_t hidden_dim = 64;
    std::int32_t num_classes = 2;
    std::vector<double> w1;  // H x D, row-major
    std::vector<double> b1;  // H
    std::vector<double> w2;  // C x H, row-major
    std::vector<double> b2;  // C

    // Glorot-uniform weights, zero biases, seeded draws.
    static ModelParams init(EmbeddingMatrix embedding, std::int32_t hidden_dim,
                            std::int32_t num_classes, std::uint64_t seed);
};

// Uniform(-0.1, 0.1) embedding for training from scratch.
EmbeddingMatrix random_embedding(WordId rows, WordId dims, std::uint64_t seed);

struct ForwardCache {
    std::vector<WordId> tokens;
    std::vector<double> pooled;      // D
    std::vector<double> hidden_pre;  // H
    std::vector<double> hidden;      // H
    std::vector<double> logits;      // C
    std::vector<double> probs;       // C
};

ForwardCache forward(const ModelParams& params, std::span<const WordId> tokens);

// -log softmax(logits)[label], computed from logits via log-sum-exp.
double cross_entropy(std::span<const double> logits, std::int32_t label);

struct HeadGradients {
    std::vector<double> w1, b1, w2, b2;
    // Gradient per distinct embedding row used; absent entirely in frozen mode.
    std::map<WordId, std::vector<double>> embedding_rows;
};

HeadGradients backward(const ModelParams& params, const ForwardCache& cache, std::int32_t label,
                       bool embedding_frozen = false);

// Argmax of forward probabilities; ties broken by lowest class index.
std::int32_t predict(const ModelParams& params, std::span<const WordId> tokens);

// Versioned binary checkpoint; round-trips bit-exactly.
void save_checkpoint(const ModelParams& params, const std::filesystem::path& path);
ModelParams load_checkpoint(const std::filesystem::path& path);

}  // namespace ftml
