#include "stylo/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <locale.h>
#include <sstream>
#include <tuple>
#include <wctype.h>

#include "stylo/error.hpp"
#include "stylo/utf8.hpp"

namespace stylo {

namespace {

// Unicode ctype tables from glibc's C.UTF-8; ASCII rules if that locale is unavailable.
locale_t unicode_ctype() {
    static const locale_t loc = newlocale(LC_CTYPE_MASK, "C.UTF-8", static_cast<locale_t>(nullptr));
    return loc;
}

bool is_letter(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
    }
    const locale_t loc = unicode_ctype();
    return loc != nullptr && iswalpha_l(static_cast<wint_t>(cp), loc) != 0;
}

char32_t to_lower(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 'A' && cp <= 'Z') ? cp + ('a' - 'A') : cp;
    }
    const locale_t loc = unicode_ctype();
    return loc == nullptr ? cp : static_cast<char32_t>(towlower_l(static_cast<wint_t>(cp), loc));
}

// Internal joiner normalized to its ASCII form, or 0 if `cp` is not a joiner.
char joiner(char32_t cp) {
    if (cp == U'\'' || cp == U'’') {
        return '\'';
    }
    if (cp == U'-') {
        return '-';
    }
    return 0;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
    std::sort(documents_.begin(), documents_.end(), [](const Document& a, const Document& b) {
        return std::tie(a.author, a.id) < std::tie(b.author, b.id);
    });
    std::set<std::string_view> ids;
    for (const auto& doc : documents_) {
        if (!ids.insert(doc.id).second) {
            throw Error("duplicate document id: " + doc.id);
        }
        authors_.insert(doc.author);
    }
}

std::vector<const Document*> Corpus::by_author(std::string_view author) const {
    std::vector<const Document*> out;
    for (const auto& doc : documents_) {
        if (doc.author == author) {
            out.push_back(&doc);
        }
    }
    return out;
}

std::size_t Corpus::total_tokens() const {
    std::size_t total = 0;
    for (const auto& doc : documents_) {
        total += doc.token_count();
    }
    return total;
}

double FrequencyTable::operator[](std::string_view word) const {
    const auto it = frequencies.find(word);
    return it == frequencies.end() ? 0.0 : it->second;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto d = utf8::decode(text, pos);
        if (!d) {
            flush();
            ++pos;
            continue;
        }
        pos += d->length;
        if (is_letter(d->code_point)) {
            utf8::append(current, to_lower(d->code_point));
            continue;
        }
        const char j = joiner(d->code_point);
        if (j != 0 && !current.empty()) {
            // A joiner survives only between two letters.
            const auto next = utf8::decode(text, pos);
            if (next && is_letter(next->code_point)) {
                current.push_back(j);
                continue;
            }
        }
        flush();
    }
    flush();
    return tokens;
}

bool is_valid_utf8(std::string_view bytes) {
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        const auto d = utf8::decode(bytes, pos);
        if (!d) {
            return false;
        }
        pos += d->length;
    }
    return true;
}

FrequencyTable word_frequencies(std::span<const std::string> tokens) {
    if (tokens.empty()) {
        throw Error("empty document");
    }
    std::map<std::string, std::size_t, std::less<>> counts;
    for (const auto& token : tokens) {
        ++counts[token];
    }
    FrequencyTable table;
    table.total_tokens = tokens.size();
    const auto total = static_cast<double>(tokens.size());
    for (const auto& [word, count] : counts) {
        table.frequencies.emplace_hint(table.frequencies.end(), word, static_cast<double>(count) / total);
    }
    return table;
}

Document load_document(const std::filesystem::path& path, std::string author) {
    const std::string bytes = read_file(path);
    if (!is_valid_utf8(bytes)) {
        throw Error("file is not valid UTF-8: " + path.string());
    }
    return Document{path.stem().string(), std::move(author), tokenize(bytes)};
}

Corpus load_corpus(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw Error("corpus root is not a directory: " + root.string());
    }

    std::vector<fs::path> author_dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) {
            author_dirs.push_back(entry.path());
        }
    }
    if (author_dirs.empty()) {
        throw Error("no author directories in " + root.string());
    }
    std::sort(author_dirs.begin(), author_dirs.end());

    std::vector<Document> documents;
    for (const auto& dir : author_dirs) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                files.push_back(entry.path());
            }
        }
        if (files.empty()) {
            throw Error("author directory has no .txt files: " + dir.string());
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            documents.push_back(load_document(file, dir.filename().string()));
        }
    }
    return Corpus(std::move(documents));
}

}  // namespace stylo
