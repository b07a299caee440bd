#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "etm/corpus.hpp"

namespace etm {

// Plain-text lexicon resources: an English word list, an inflected-form ->
// lemma table, and a stopword list. All entries lowercase.
struct LexiconResources {
  std::unordered_set<std::string> dictionary;
  std::unordered_map<std::string, std::string> lemma_table;
  std::unordered_set<std::string> stopwords;
};

// Loads the three resource files. Lemma-table targets are added to the
// dictionary so that a lemma is always classified as a word; this keeps the
// word and term vocabularies disjoint.
LexiconResources load_lexicon(const std::string& dictionary_path,
                              const std::string& lemma_path,
                              const std::string& stopword_path);

struct PrepConfig {
  int min_token_len = 4;
  int max_token_len = 20;
  int min_frequency = 20;  // total corpus frequency below this is pruned

  void validate() const;  // throws Error on a bad combination
};

// Step 1: whitespace split, edge punctuation strip, lowercase. Internal
// dots, slashes, underscores and hyphens are preserved; tokens are never
// split on CamelCase or dot/slash notation.
std::vector<std::string> tokenize(std::string_view raw_text);

// Step 2: keep tokens with min_token_len <= length <= max_token_len
// (length in codepoints). Order preserved.
std::vector<std::string> length_filter(std::vector<std::string> tokens,
                                       const PrepConfig& cfg);

enum class TokenKind { kWord, kTerm };

// Step 3: word iff the token is in the dictionary, term otherwise.
TokenKind classify_token(const std::string& token,
                         const LexiconResources& lex);

// Step 4: lemma-table lookup, identity when absent. Never truncates like a
// stemmer. A lemma that would fall outside the configured length bounds
// leaves the original token in place.
std::string lemmatize(const std::string& word, const LexiconResources& lex);

// Step 5: drop stopword-set members, order preserved. Applied to words and,
// as a double-check, to terms.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const LexiconResources& lex);

// Steps 1-5 for one document: the surviving lemmatized words and raw terms.
struct DocTokens {
  std::vector<std::string> words;
  std::vector<std::string> terms;
};
DocTokens prepare_document(std::string_view raw_text,
                           const LexiconResources& lex,
                           const PrepConfig& cfg);

// Documents x unigrams count matrix. Vocabulary is unique and sorted
// lexicographically; rows are (column, count) pairs with ascending columns.
// Column totals meet min_frequency over the corpus as observed before the
// empty-document exclusion.
struct FrequencyMatrix {
  std::vector<std::string> doc_ids;
  std::vector<std::string> vocabulary;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows;

  std::size_t doc_count() const { return doc_ids.size(); }
  std::size_t vocab_size() const { return vocabulary.size(); }
  std::uint64_t row_total(std::size_t row) const;
  std::uint64_t total_count() const;
  std::vector<std::uint64_t> column_totals() const;
};

struct PrepResult {
  FrequencyMatrix words;
  FrequencyMatrix terms;
  std::vector<std::string> excluded_ids;
};

// Step 6 on top of steps 1-5: accumulates corpus-wide frequencies, prunes
// unigrams below min_frequency, then excludes every document whose word row
// or term row ends up empty. Both matrices carry the same surviving doc_ids
// in corpus order.
PrepResult build_matrices(const CorpusSet& corpus,
                          const LexiconResources& lex, const PrepConfig& cfg);

// Sparse export: `<name>.triplets.tsv` with doc_index<TAB>unigram_index<TAB>
// count rows (0-based indices), plus `<name>.doc_ids.txt` and
// `<name>.vocab.txt` sidecars.
void write_matrix(const FrequencyMatrix& m, const std::string& out_dir,
                  const std::string& name);

}  // namespace etm
