#include "fintext/textprep.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "fintext/csv.hpp"
#include "fintext/error.hpp"
#include "fintext/porter.hpp"
#include "fintext_stopwords_data.hpp"

namespace fintext {

namespace {

StopwordList parse_stopword_text(std::istream& in, const std::string& origin) {
  StopwordList list;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t");
    std::string word = line.substr(begin, end - begin + 1);
    std::transform(word.begin(), word.end(), word.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (!list.words.insert(word).second) {
      throw DataError("duplicate stop word '" + word + "' in " + origin);
    }
  }
  return list;
}

}  // namespace

StopwordList StopwordList::bundled_english() {
  std::istringstream in{std::string(detail::kBundledStopwords)};
  return parse_stopword_text(in, "bundled list");
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open stop word file '" + path.string() + "'");
  return parse_stopword_text(in, "'" + path.string() + "'");
}

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.size() >= config.min_token_length) tokens.push_back(current);
    current.clear();
  };
  for (unsigned char c : text) {
    if (c >= 'A' && c <= 'Z') {
      current += char(c - 'A' + 'a');
    } else if (c >= 'a' && c <= 'z') {
      current += char(c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopwordList& list) {
  std::erase_if(tokens, [&](const std::string& t) { return list.contains(t); });
  return tokens;
}

std::int64_t Vocabulary::id_of(const std::string& term) const {
  auto it = index.find(term);
  return it == index.end() ? -1 : std::int64_t(it->second);
}

Vocabulary Vocabulary::from_sorted_terms(std::vector<std::string> sorted_terms) {
  Vocabulary vocab;
  vocab.terms = std::move(sorted_terms);
  vocab.index.reserve(vocab.terms.size());
  for (std::uint32_t i = 0; i < vocab.terms.size(); ++i) {
    if (i > 0 && !(vocab.terms[i - 1] < vocab.terms[i])) {
      throw InternalError("vocabulary terms must be sorted and unique");
    }
    vocab.index.emplace(vocab.terms[i], i);
  }
  return vocab;
}

std::uint64_t DocumentTermMatrix::total_tokens() const {
  std::uint64_t total = 0;
  for (auto len : doc_lengths) total += len;
  return total;
}

std::vector<std::uint32_t> DocumentTermMatrix::empty_docs() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 0; d < n_docs; ++d) {
    if (doc_lengths[d] == 0) out.push_back(d);
  }
  return out;
}

std::vector<std::size_t> DocumentTermMatrix::row_offsets() const {
  std::vector<std::size_t> offsets(n_docs + 1, 0);
  for (const auto& e : entries) offsets[e.doc + 1]++;
  for (std::uint32_t d = 0; d < n_docs; ++d) offsets[d + 1] += offsets[d];
  return offsets;
}

void DocumentTermMatrix::validate() const {
  if (doc_lengths.size() != n_docs) {
    throw InternalError("dtm: doc_lengths size mismatch");
  }
  std::vector<std::uint64_t> sums(n_docs, 0);
  std::vector<bool> term_seen(n_terms, false);
  const DtmEntry* prev = nullptr;
  for (const auto& e : entries) {
    if (e.doc >= n_docs || e.term >= n_terms) {
      throw InternalError("dtm: entry index out of range");
    }
    if (e.count == 0) throw InternalError("dtm: zero count entry");
    if (prev != nullptr &&
        (e.doc < prev->doc || (e.doc == prev->doc && e.term <= prev->term))) {
      throw InternalError("dtm: entries not sorted by (doc, term)");
    }
    sums[e.doc] += e.count;
    term_seen[e.term] = true;
    prev = &e;
  }
  for (std::uint32_t d = 0; d < n_docs; ++d) {
    if (sums[d] != doc_lengths[d]) {
      throw InternalError("dtm: doc_lengths disagree with entry sums");
    }
  }
  for (std::uint32_t t = 0; t < n_terms; ++t) {
    if (!term_seen[t]) throw InternalError("dtm: orphan vocabulary column");
  }
}

DtmBuildResult build_dtm(std::span<const std::string> documents,
                         const StopwordList& stopwords,
                         const DtmBuildConfig& config) {
  if (documents.empty()) throw DataError("build_dtm: corpus is empty");
  const std::uint32_t n_docs = std::uint32_t(documents.size());

  // stem counts per document, plus document frequencies
  std::vector<std::map<std::string, std::uint32_t>> doc_counts(n_docs);
  std::map<std::string, std::uint32_t> doc_frequency;
  std::vector<std::uint32_t> stemmed_lengths(n_docs, 0);

  for (std::uint32_t d = 0; d < n_docs; ++d) {
    auto tokens = remove_stopwords(tokenize(documents[d], config.tokenizer),
                                   stopwords);
    auto& counts = doc_counts[d];
    for (const auto& token : tokens) {
      counts[porter_stem(token)]++;
    }
    stemmed_lengths[d] = 0;
    for (const auto& [stem, count] : counts) {
      stemmed_lengths[d] += count;
      doc_frequency[stem]++;
    }
  }

  // keep a stem iff df/D >= min_doc_frequency
  std::vector<std::string> kept;
  for (const auto& [stem, df] : doc_frequency) {
    if (double(df) / double(n_docs) >= config.min_doc_frequency) {
      kept.push_back(stem);
    }
  }
  if (kept.empty()) throw DataError("build_dtm: no terms survive min-df");

  DtmBuildResult result;
  result.vocabulary = Vocabulary::from_sorted_terms(std::move(kept));
  auto& dtm = result.dtm;
  dtm.n_docs = n_docs;
  dtm.n_terms = std::uint32_t(result.vocabulary.size());
  dtm.doc_lengths.assign(n_docs, 0);
  for (std::uint32_t d = 0; d < n_docs; ++d) {
    for (const auto& [stem, count] : doc_counts[d]) {
      auto id = result.vocabulary.id_of(stem);
      if (id < 0) continue;  // pruned by min-df
      dtm.entries.push_back({d, std::uint32_t(id), count});
      dtm.doc_lengths[d] += count;
    }
  }
  result.stemmed_lengths = std::move(stemmed_lengths);
  dtm.validate();
  return result;
}

void save_dtm(const DocumentTermMatrix& dtm, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << dtm.n_docs << ' ' << dtm.n_terms << ' ' << dtm.entries.size() << '\n';
  for (const auto& e : dtm.entries) {
    out << e.doc << ' ' << e.term << ' ' << e.count << '\n';
  }
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

DocumentTermMatrix load_dtm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  DocumentTermMatrix dtm;
  std::size_t nnz = 0;
  if (!(in >> dtm.n_docs >> dtm.n_terms >> nnz)) {
    throw DataError("malformed dtm header in '" + path.string() + "'");
  }
  dtm.entries.reserve(nnz);
  dtm.doc_lengths.assign(dtm.n_docs, 0);
  for (std::size_t i = 0; i < nnz; ++i) {
    DtmEntry e;
    if (!(in >> e.doc >> e.term >> e.count)) {
      throw DataError("truncated dtm entries in '" + path.string() + "'");
    }
    dtm.entries.push_back(e);
    if (e.doc < dtm.n_docs) dtm.doc_lengths[e.doc] += e.count;
  }
  dtm.validate();
  return dtm;
}

void save_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  for (const auto& term : vocab.terms) out << term << '\n';
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

Vocabulary load_vocabulary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::vector<std::string> terms;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) terms.push_back(line);
  }
  return Vocabulary::from_sorted_terms(std::move(terms));
}

}  // namespace fintext
