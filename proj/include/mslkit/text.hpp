#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace mslkit {

enum class TextMode : std::uint8_t { genomic = 0, generic = 1 };

inline constexpr char kGenomicSentinel = '$';
inline constexpr char kGenericSentinel = '\0';
/// Placed between records of a multi-record genomic reference.
inline constexpr char kRecordSeparator = '|';

/// True for A,C,G,T,N and the remaining IUPAC ambiguity codes (upper case).
/// Ambiguity codes are ordinary symbols; nothing treats them as wildcards.
constexpr bool is_genomic_symbol(char c) {
    switch(c) {
    case 'A': case 'C': case 'G': case 'T': case 'N':
    case 'R': case 'Y': case 'S': case 'W': case 'K': case 'M':
    case 'B': case 'D': case 'H': case 'V':
        return true;
    default:
        return false;
    }
}

constexpr char complement(char c) {
    switch(c) {
    case 'A': return 'T';
    case 'C': return 'G';
    case 'G': return 'C';
    case 'T': return 'A';
    case 'R': return 'Y';
    case 'Y': return 'R';
    case 'K': return 'M';
    case 'M': return 'K';
    case 'B': return 'V';
    case 'V': return 'B';
    case 'D': return 'H';
    case 'H': return 'D';
    default: return c; // N, S, W and anything else map to themselves
    }
}

inline std::string reverse_complement(std::string_view s) {
    std::string out(s.size(), 'N');
    for(std::size_t i = 0; i < s.size(); ++i) out[s.size() - 1 - i] = complement(s[i]);
    return out;
}

/// A terminated text: the body followed by exactly one sentinel symbol that
/// is strictly smaller than every other symbol.
class Text {
public:
    Text() = default;

    /// Genomic body over the IUPAC alphabet; appends '$'.
    static Text genomic(std::string_view body) {
        for(std::size_t i = 0; i < body.size(); ++i) {
            detail::require_input(is_genomic_symbol(body[i]),
                "invalid genomic symbol at offset " + std::to_string(i) + ": '" +
                std::string(1, body[i]) + "'");
        }
        std::string bytes(body);
        bytes.push_back(kGenomicSentinel);
        return Text(std::move(bytes), TextMode::genomic);
    }

    /// Several genomic records joined by the record separator.
    static Text genomic_records(const std::vector<std::string_view>& records) {
        detail::require_input(!records.empty(), "no records");
        std::string bytes;
        for(std::size_t r = 0; r < records.size(); ++r) {
            if(r > 0) bytes.push_back(kRecordSeparator);
            for(char c : records[r]) {
                detail::require_input(is_genomic_symbol(c),
                    "invalid genomic symbol '" + std::string(1, c) + "' in record " + std::to_string(r));
            }
            bytes.append(records[r]);
        }
        bytes.push_back(kGenomicSentinel);
        return Text(std::move(bytes), TextMode::genomic);
    }

    /// Arbitrary bytes; appends 0x00. The body must not contain 0x00.
    static Text generic(std::string_view body) {
        detail::require_input(body.find('\0') == std::string_view::npos,
            "generic text may not contain the 0x00 sentinel byte");
        std::string bytes(body);
        bytes.push_back(kGenericSentinel);
        return Text(std::move(bytes), TextMode::generic);
    }

    /// Accepts bytes that already end in a sentinel. In generic mode the last
    /// byte is the sentinel and must be strictly smaller than every other
    /// byte; in genomic mode it must be '$'.
    static Text from_terminated(std::string bytes, TextMode mode) {
        detail::require_input(!bytes.empty(), "empty text: missing sentinel");
        const auto last = static_cast<unsigned char>(bytes.back());
        if(mode == TextMode::genomic) {
            detail::require_input(bytes.back() == kGenomicSentinel, "missing '$' sentinel");
            for(std::size_t i = 0; i + 1 < bytes.size(); ++i) {
                const char c = bytes[i];
                detail::require_input(c != kGenomicSentinel, "duplicate sentinel at offset " + std::to_string(i));
                detail::require_input(is_genomic_symbol(c) || c == kRecordSeparator,
                    "invalid genomic symbol at offset " + std::to_string(i));
            }
        } else {
            for(std::size_t i = 0; i + 1 < bytes.size(); ++i) {
                const auto c = static_cast<unsigned char>(bytes[i]);
                detail::require_input(c != last, "duplicate sentinel at offset " + std::to_string(i));
                detail::require_input(c > last, "sentinel is not the smallest symbol");
            }
        }
        return Text(std::move(bytes), mode);
    }

    /// Whole text including the sentinel.
    std::string_view bytes() const { return bytes_; }
    /// Text without the sentinel.
    std::string_view body() const { return std::string_view(bytes_).substr(0, bytes_.empty() ? 0 : bytes_.size() - 1); }
    std::size_t size() const { return bytes_.size(); }
    TextMode mode() const { return mode_; }
    unsigned char operator[](std::size_t i) const { return static_cast<unsigned char>(bytes_[i]); }

private:
    Text(std::string bytes, TextMode mode) : bytes_(std::move(bytes)), mode_(mode) {}

    std::string bytes_;
    TextMode mode_ = TextMode::genomic;
};

/// Name and placement of one record inside a concatenated reference text.
struct RecordSpan {
    std::string name;
    std::size_t offset = 0;
    std::size_t length = 0;
};

/// Record table for a multi-record reference.
class ReferenceLayout {
public:
    ReferenceLayout() = default;

    explicit ReferenceLayout(std::vector<RecordSpan> records) : records_(std::move(records)) {}

    static ReferenceLayout from_lengths(const std::vector<std::pair<std::string, std::size_t>>& records) {
        std::vector<RecordSpan> spans;
        std::size_t offset = 0;
        for(const auto& [name, len] : records) {
            spans.push_back({name, offset, len});
            offset += len + 1;
        }
        return ReferenceLayout(std::move(spans));
    }

    const std::vector<RecordSpan>& records() const { return records_; }
    bool empty() const { return records_.empty(); }

    /// Record by name; an empty name means the concatenated coordinate space.
    const RecordSpan* find(std::string_view name) const {
        for(const auto& r : records_) if(r.name == name) return &r;
        return nullptr;
    }

    /// Record containing a global offset, or nullptr for separator positions.
    const RecordSpan* locate(std::size_t global) const {
        auto it = std::upper_bound(records_.begin(), records_.end(), global,
            [](std::size_t g, const RecordSpan& r) { return g < r.offset; });
        if(it == records_.begin()) return nullptr;
        --it;
        return global < it->offset + it->length ? &*it : nullptr;
    }

    std::size_t total_length() const {
        return records_.empty() ? 0 : records_.back().offset + records_.back().length;
    }

private:
    std::vector<RecordSpan> records_;
};

} // namespace mslkit
