#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ftml/distance.hpp"

namespace ftml {

using WordId = std::int32_t;

// Bijection between word strings and dense indices. Index 0 is always the
// reserved unknown-word token "<unk>".
class Vocabulary {
public:
    static constexpr WordId kUnkIndex = 0;
    static constexpr std::string_view kUnkToken = "<unk>";

    Vocabulary() : words_{std::string(kUnkToken)} { index_.emplace(kUnkToken, 0); }

    // Builds a vocabulary from words in file order, prepending "<unk>".
    // Throws ParseError on duplicates or tokens containing whitespace.
    static Vocabulary with_words(const std::vector<std::string>& words);

    WordId size() const { return static_cast<WordId>(words_.size()); }
    WordId unk_index() const { return kUnkIndex; }
    const std::string& word(WordId idx) const { return words_.at(static_cast<std::size_t>(idx)); }
    const std::vector<std::string>& words() const { return words_; }

    std::optional<WordId> find(const std::string& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const std::string& w) const { return index_.count(w) != 0; }
    // Maps unknown words to unk_index().
    WordId lookup(const std::string& w) const {
        auto it = index_.find(w);
        return it == index_.end() ? kUnkIndex : it->second;
    }

private:
    std::vector<std::string> words_;
    std::unordered_map<std::string, WordId> index_;
};

// Dense row-major V x D matrix of 64-bit word vectors.
class EmbeddingMatrix {
public:
    EmbeddingMatrix() = default;
    EmbeddingMatrix(WordId rows, WordId dims)
        : rows_(rows), dims_(dims), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(dims), 0.0) {}

    WordId rows() const { return rows_; }
    WordId dims() const { return dims_; }

    VecView row(WordId i) const {
        return VecView(data_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dims_),
                       static_cast<std::size_t>(dims_));
    }
    std::span<double> row(WordId i) {
        return std::span<double>(data_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dims_),
                                 static_cast<std::size_t>(dims_));
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool all_finite() const;
};

struct ParsedEmbedding {
    Vocabulary vocab;
    EmbeddingMatrix matrix;
};

// Parses a whitespace-separated `word v1 ... vD` text stream. The vocabulary
// keeps file order with "<unk>" prepended at index 0; the unk vector is the
// element-wise mean of all parsed vectors. D is inferred from the first line.
ParsedEmbedding parse_embedding_file(std::istream& in);
ParsedEmbedding load_embedding_file(const std::filesystem::path& path);

// Mean l_p distance over unordered row pairs, excluding self-pairs.
double mean_pairwise_distance(const EmbeddingMatrix& m, Norm p);
double mean_pairwise_distance(const EmbeddingMatrix& m, std::span<const WordId> rows, Norm p);

// Seeded estimate over `sample_pairs` distinct pairs drawn uniformly without
// replacement. Falls back to the exact mean when the pair population is not
// larger than the request.
double mean_pairwise_distance_sampled(const EmbeddingMatrix& m, Norm p, std::int64_t sample_pairs,
                                      std::uint64_t seed);
double mean_pairwise_distance_sampled(const EmbeddingMatrix& m, std::span<const WordId> rows, Norm p,
                                      std::int64_t sample_pairs, std::uint64_t seed);

// alpha_0 policy: exact when the pair count fits the exact budget
// (10^7 pairs), otherwise a seeded 10^6-pair sample. Empty `rows` means all.
double initial_mean_distance(const EmbeddingMatrix& m, std::span<const WordId> rows, Norm p,
                             std::uint64_t seed);

struct SnapshotMeta {
    std::string source_file;
    std::string config_digest;
    std::int64_t epoch = 0;

    bool operator==(const SnapshotMeta&) const = default;
};

// Embedding matrix plus vocabulary and provenance; round-trips bit-exactly.
struct EmbeddingSnapshot {
    Vocabulary vocab;
    EmbeddingMatrix matrix;
    SnapshotMeta meta;
};

void save_snapshot(const EmbeddingSnapshot& snapshot, const std::filesystem::path& path);
EmbeddingSnapshot load_snapshot(const std::filesystem::path& path);

}  // namespace ftml
