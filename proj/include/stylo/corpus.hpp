#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stylo {

/// Author label carried by a text of unknown or disputed authorship.
inline constexpr std::string_view kUnknownAuthor = "UNKNOWN";

/**
 * One text: an id (file stem), an author label and its token stream.
 *
 * Tokens are always the output of tokenize(), so every token is lowercase
 * and matches the tokenizer grammar.
 */
struct Document {
    std::string id;
    std::string author;
    std::vector<std::string> tokens;

    std::size_t token_count() const { return tokens.size(); }
    bool is_target() const { return author == kUnknownAuthor; }
};

/**
 * An ordered, immutable collection of documents.
 *
 * Documents are kept sorted by (author, id); ids are unique and the author
 * set is exactly the set of labels present.
 */
class Corpus {
public:
    Corpus() = default;

    /// Sorts the documents and validates id uniqueness. Throws Error on duplicates.
    explicit Corpus(std::vector<Document> documents);

    const std::vector<Document>& documents() const { return documents_; }
    const std::set<std::string>& authors() const { return authors_; }
    std::size_t size() const { return documents_.size(); }
    bool empty() const { return documents_.empty(); }

    /// Documents carrying the given author label, in corpus order.
    std::vector<const Document*> by_author(std::string_view author) const;

    /// Total number of tokens over all documents.
    std::size_t total_tokens() const;

private:
    std::vector<Document> documents_;
    std::set<std::string> authors_;
};

/// Relative word frequencies of one token sequence.
struct FrequencyTable {
    std::map<std::string, double, std::less<>> frequencies;
    std::size_t total_tokens = 0;

    /// Relative frequency of `word`, 0 when absent.
    double operator[](std::string_view word) const;
};

/**
 * Splits text into lowercase word tokens.
 *
 * A token is a maximal run of alphabetic code points that may contain single
 * internal apostrophes or hyphens. Digits, punctuation, whitespace and bytes
 * that are not valid UTF-8 separate tokens. U+2019 is read as an apostrophe.
 * Lowercasing and the alphabetic test use the C.UTF-8 character tables, so
 * the result does not depend on the process locale.
 */
std::vector<std::string> tokenize(std::string_view text);

/// True when `bytes` is well-formed UTF-8 (no overlongs, surrogates or values past U+10FFFF).
bool is_valid_utf8(std::string_view bytes);

/// Relative frequencies of `tokens`. Throws Error("empty document") on empty input.
FrequencyTable word_frequencies(std::span<const std::string> tokens);

/// Reads and tokenizes one UTF-8 text file. Throws Error naming the path when unreadable or not UTF-8.
Document load_document(const std::filesystem::path& path, std::string author);

/**
 * Loads `<root>/<author>/<doc>.txt` into a corpus.
 *
 * Each subdirectory is an author; every `.txt` file in it becomes a document
 * whose id is the file stem. Fails when the root is missing, holds no author
 * directories, or an author directory holds no `.txt` files.
 */
Corpus load_corpus(const std::filesystem::path& root);

}  // namespace stylo
