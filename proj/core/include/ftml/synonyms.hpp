#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ftml/distance.hpp"
#include "ftml/embedding.hpp"
#include "ftml/rng.hpp"

namespace ftml {

struct SynonymConfig {
    std::int32_t k = 8;    // max synonyms per word
    double delta = 0.5;    // distance threshold in the counter-fitted space
    Norm p = Norm::l2;

    void validate() const;  // k >= 1, delta >= 0
};

// Per-word synonym sets S(w): up to k nearest in-vocabulary neighbors within
// distance delta in the counter-fitted space, sorted by ascending distance
// (ties by ascending word index). Immutable once built.
struct SynonymDict {
    SynonymConfig config;
    std::string source_digest;                 // digest of the counter-fitted file
    std::vector<std::vector<WordId>> sets;     // indexed by target-vocabulary word id

    WordId vocab_size() const { return static_cast<WordId>(sets.size()); }
    std::span<const WordId> synonyms(WordId w) const {
        return std::span<const WordId>(sets[static_cast<std::size_t>(w)]);
    }

    std::int64_t words_with_synonyms() const;
    double mean_set_size() const;  // over words with nonempty sets
};

// Exact brute-force construction over the counter-fitted space, restricted to
// words present in the target vocabulary. Words absent from the counter-fitted
// vocabulary (and the unk token) get empty sets.
SynonymDict build_synonym_dict(const Vocabulary& cf_vocab, const EmbeddingMatrix& cf_matrix,
                               const Vocabulary& target_vocab, const SynonymConfig& config,
                               std::string source_digest = "");

struct NegativeSet {
    std::vector<WordId> words;
};

// k distinct uniform draws from the vocabulary (or from `pool` when given),
// excluding the anchor, its synonyms, and the unk index.
NegativeSet sample_negatives(const SynonymDict& dict, WordId anchor, Rng& rng,
                             std::span<const WordId> pool = {});

// Text round-trip. One line per word in index order; header carries k, delta,
// p and the source digest. Identical inputs produce identical bytes.
std::string serialize_dict(const SynonymDict& dict, const Vocabulary& vocab);
void save_dict(const SynonymDict& dict, const Vocabulary& vocab, const std::filesystem::path& path);

struct LoadedDict {
    SynonymDict dict;
    Vocabulary vocab;  // reconstructed from file line order
};

// Validates structural invariants (set sizes vs k, no self-synonyms, known
// words). When `expected_digest` is nonempty and differs from the stored one,
// throws StaleDictionaryError.
LoadedDict load_dict(const std::filesystem::path& path, std::string_view expected_digest = {});

}  // namespace ftml
