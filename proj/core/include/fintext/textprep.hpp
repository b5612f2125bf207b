#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace fintext {

/// Exact-match stop word list. The bundled default is the 174-entry English
/// list shipped as core/data/stopwords_en.txt.
struct StopwordList {
  std::unordered_set<std::string> words;

  bool contains(const std::string& w) const { return words.count(w) != 0; }
  std::size_t size() const { return words.size(); }

  static StopwordList bundled_english();
  /// One word per line, UTF-8, '#' starts a comment line.
  static StopwordList from_file(const std::filesystem::path& path);
};

struct TokenizerConfig {
  /// Tokens shorter than this are dropped. Set to 0 to keep everything.
  std::size_t min_token_length = 3;
};

/// Lowercases and splits on non-alphabetic characters, so digit runs and
/// punctuation never produce tokens.
std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config = {});

/// Order-preserving removal of exact stop word matches.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopwordList& list);

/// Stems in lexicographic order; ids are dense 0..V-1.
struct Vocabulary {
  std::vector<std::string> terms;
  std::unordered_map<std::string, std::uint32_t> index;

  std::size_t size() const { return terms.size(); }
  const std::string& term(std::uint32_t id) const { return terms[id]; }
  std::int64_t id_of(const std::string& term) const;

  static Vocabulary from_sorted_terms(std::vector<std::string> sorted_terms);
};

struct DtmEntry {
  std::uint32_t doc = 0;
  std::uint32_t term = 0;
  std::uint32_t count = 0;
};

/// Sparse document-term counts. Entries are sorted by (doc, term) and all
/// counts are strictly positive; documents that lost every token keep their
/// row (doc_lengths == 0) and are reported by empty_docs().
struct DocumentTermMatrix {
  std::uint32_t n_docs = 0;
  std::uint32_t n_terms = 0;
  std::vector<DtmEntry> entries;
  std::vector<std::uint32_t> doc_lengths;

  std::uint64_t total_tokens() const;
  bool is_empty_doc(std::uint32_t d) const { return doc_lengths[d] == 0; }
  std::vector<std::uint32_t> empty_docs() const;
  /// Offsets of each document's entry run; size n_docs + 1.
  std::vector<std::size_t> row_offsets() const;
  /// Throws InternalError if any structural invariant is broken.
  void validate() const;
};

struct DtmBuildConfig {
  /// Keep a stem iff document-frequency/D >= this threshold.
  double min_doc_frequency = 0.05;
  TokenizerConfig tokenizer;
};

struct DtmBuildResult {
  DocumentTermMatrix dtm;
  Vocabulary vocabulary;
  /// Per-document stem counts before min-df pruning ("stemmed length").
  std::vector<std::uint32_t> stemmed_lengths;
};

/// Runs tokenize -> remove_stopwords -> porter_stem -> count over every
/// document, then prunes columns below the min-df threshold.
/// Throws DataError if the corpus is empty or no term survives pruning.
DtmBuildResult build_dtm(std::span<const std::string> documents,
                         const StopwordList& stopwords,
                         const DtmBuildConfig& config = {});

/// Plain-text sparse persistence: header "D V NNZ", then one
/// "doc term count" triple per line.
void save_dtm(const DocumentTermMatrix& dtm, const std::filesystem::path& path);
DocumentTermMatrix load_dtm(const std::filesystem::path& path);

/// One stem per line in id order.
void save_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path);
Vocabulary load_vocabulary(const std::filesystem::path& path);

}  // namespace fintext
