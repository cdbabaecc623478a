#pragma once

// Typed domain model for SCHEMA prompts: tiers, labels, constraint items and
// the cross-functional feature flags. Everything here is an immutable value
// after construction and every operation is a pure function, so instances can
// be shared freely across threads.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "schema_forge/error.hpp"

namespace schema_forge {

// ---------------------------------------------------------------------------
// Tiers
// ---------------------------------------------------------------------------

// Progressive control levels. The ordering BASE < MEDIO < AVANZATO is total
// and relied upon by tier-inference monotonicity checks.
enum class Tier : int {
    Base = 0,
    Medio = 1,
    Avanzato = 2,
};

inline constexpr std::string_view to_string(Tier t) {
    switch (t) {
        case Tier::Base: return "BASE";
        case Tier::Medio: return "MEDIO";
        case Tier::Avanzato: return "AVANZATO";
    }
    return "BASE";
}

inline std::optional<Tier> tier_from_string(std::string_view s) {
    std::string up(s);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "BASE") return Tier::Base;
    if (up == "MEDIO") return Tier::Medio;
    if (up == "AVANZATO") return Tier::Avanzato;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

enum class LabelName : int {
    // Core seven (the minimum MEDIO structure).
    Subject,
    Style,
    Lighting,
    Background,
    Composition,
    Mandatory,
    Prohibitions,
    // Optional labels.
    Reference,
    Thinking,
    Grounding,
    Output,
    Custom,
};

inline constexpr std::array<LabelName, 7> kCoreLabels = {
    LabelName::Subject,    LabelName::Style,     LabelName::Lighting,
    LabelName::Background, LabelName::Composition, LabelName::Mandatory,
    LabelName::Prohibitions,
};

inline constexpr bool is_core(LabelName n) {
    switch (n) {
        case LabelName::Subject:
        case LabelName::Style:
        case LabelName::Lighting:
        case LabelName::Background:
        case LabelName::Composition:
        case LabelName::Mandatory:
        case LabelName::Prohibitions:
            return true;
        default:
            return false;
    }
}

inline constexpr std::string_view builtin_label_name(LabelName n) {
    switch (n) {
        case LabelName::Subject: return "Subject";
        case LabelName::Style: return "Style";
        case LabelName::Lighting: return "Lighting";
        case LabelName::Background: return "Background";
        case LabelName::Composition: return "Composition";
        case LabelName::Mandatory: return "Mandatory";
        case LabelName::Prohibitions: return "Prohibitions";
        case LabelName::Reference: return "Reference";
        case LabelName::Thinking: return "Thinking";
        case LabelName::Grounding: return "Grounding";
        case LabelName::Output: return "Output";
        case LabelName::Custom: return "Custom";
    }
    return "Custom";
}

namespace detail {

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace detail

// A label kind: one of the built-in labels, or a user extension carrying its
// own name. Custom names must not collide with built-in names
// (case-insensitive); the factory below enforces that.
struct LabelKind {
    LabelName name = LabelName::Custom;
    std::string custom_name;  // populated only when name == Custom

    static LabelKind builtin(LabelName n) {
        LabelKind k;
        k.name = n;
        return k;
    }

    static LabelKind custom(std::string_view custom_name) {
        if (builtin_from_token(custom_name))
            throw SchemaError("E-LABEL-COLLISION",
                              "custom label name collides with built-in label '" +
                                  std::string(custom_name) + "'");
        LabelKind k;
        k.name = LabelName::Custom;
        k.custom_name = std::string(custom_name);
        return k;
    }

    // Case-insensitive match of a header token against the built-in labels.
    static std::optional<LabelName> builtin_from_token(std::string_view token) {
        static const std::array<LabelName, 11> kall = {
            LabelName::Subject,   LabelName::Style,    LabelName::Lighting,
            LabelName::Background, LabelName::Composition, LabelName::Mandatory,
            LabelName::Prohibitions, LabelName::Reference, LabelName::Thinking,
            LabelName::Grounding, LabelName::Output,
        };
        const std::string lowered = detail::to_lower(token);
        for (LabelName n : kall)
            if (lowered == detail::to_lower(builtin_label_name(n))) return n;
        return std::nullopt;
    }

    bool is_custom() const { return name == LabelName::Custom; }
    bool is_core() const { return schema_forge::is_core(name); }

    std::string display_name() const {
        return is_custom() ? custom_name : std::string(builtin_label_name(name));
    }

    friend bool operator==(const LabelKind& a, const LabelKind& b) {
        if (a.name != b.name) return false;
        if (a.name != LabelName::Custom) return true;
        return detail::to_lower(a.custom_name) == detail::to_lower(b.custom_name);
    }
    friend bool operator!=(const LabelKind& a, const LabelKind& b) { return !(a == b); }
};

// ---------------------------------------------------------------------------
// Constraint items
// ---------------------------------------------------------------------------

enum class Polarity { Positive, Negative };

inline constexpr std::string_view to_string(Polarity p) {
    return p == Polarity::Negative ? "NEGATIVE" : "POSITIVE";
}

// Lexical categories of measurable specificity. An item that carries none of
// the concrete markers carries exactly {None}.
enum class Marker {
    Kelvin,
    Hex,
    Ratio,
    FocalLength,
    AspectRatio,
    Resolution,
    Percent,
    None,
};

inline constexpr std::string_view to_string(Marker m) {
    switch (m) {
        case Marker::Kelvin: return "KELVIN";
        case Marker::Hex: return "HEX";
        case Marker::Ratio: return "RATIO";
        case Marker::FocalLength: return "FOCAL_LENGTH";
        case Marker::AspectRatio: return "ASPECT_RATIO";
        case Marker::Resolution: return "RESOLUTION";
        case Marker::Percent: return "PERCENT";
        case Marker::None: return "NONE";
    }
    return "NONE";
}

using MarkerSet = std::set<Marker>;

struct ConstraintItem {
    std::string text;
    Polarity polarity = Polarity::Positive;
    MarkerSet measurable_markers = {Marker::None};

    bool has_concrete_marker() const {
        return measurable_markers.find(Marker::None) == measurable_markers.end();
    }

    friend bool operator==(const ConstraintItem& a, const ConstraintItem& b) {
        return a.text == b.text && a.polarity == b.polarity &&
               a.measurable_markers == b.measurable_markers;
    }
};

// ---------------------------------------------------------------------------
// Source positions
// ---------------------------------------------------------------------------

struct SourceSpan {
    int start_line = 1;  // 1-based
    int start_col = 1;
    int end_line = 1;
    int end_col = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
    friend auto operator<=>(const SourceSpan& a, const SourceSpan& b) {
        return std::tie(a.start_line, a.start_col, a.end_line, a.end_col) <=>
               std::tie(b.start_line, b.start_col, b.end_line, b.end_col);
    }
};

// ---------------------------------------------------------------------------
// Blocks and specs
// ---------------------------------------------------------------------------

struct LabelBlock {
    LabelKind kind;
    std::string raw_text;                // body joined to a single line, trimmed
    std::vector<ConstraintItem> items;   // populated iff kind is Mandatory/Prohibitions
    SourceSpan span;

    bool is_constraint_block() const {
        return kind.name == LabelName::Mandatory || kind.name == LabelName::Prohibitions;
    }
};

struct FeatureFlags {
    bool thinking = false;
    bool grounding = false;
    int reference_count = 0;
    std::optional<long long> reference_max_bytes;

    friend bool operator==(const FeatureFlags&, const FeatureFlags&) = default;
};

// Maximum reference images accepted by the target model.
inline constexpr int kReferenceHardLimit = 14;
// Reference counts above this are legal but degrade coherence.
inline constexpr int kReferenceRecommendedMax = 3;
// Byte size at which reference inputs start being internally recompressed.
inline constexpr long long kReferenceCompressionBytes = 7'000'000;

struct PromptSpec {
    std::vector<LabelBlock> blocks;        // document order
    std::optional<Tier> declared_tier;
    FeatureFlags features;
    std::size_t char_count = 0;            // length of the canonical emission

    const LabelBlock* find_block(LabelName n) const {
        for (const auto& b : blocks)
            if (b.kind.name == n) return &b;
        return nullptr;
    }

    bool has_label(LabelName n) const { return find_block(n) != nullptr; }

    int core_label_count() const {
        int count = 0;
        for (LabelName n : kCoreLabels)
            if (has_label(n)) ++count;
        return count;
    }
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

namespace detail {

// Negation tokens that flip an item to NEGATIVE when leading.
inline const std::array<std::string_view, 4> kNegationTokens = {"no", "not", "never",
                                                                "without"};

inline std::string first_word(std::string_view s) {
    s = trim(s);
    std::size_t i = 0;
    while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) != 0)) ++i;
    return to_lower(s.substr(0, i));
}

inline bool regex_found(const std::string& text, const std::regex& re) {
    return std::regex_search(text, re);
}

}  // namespace detail

// Scans item text for every measurable-specificity pattern present.
// Kelvin requires an uppercase "K" and at least three digits, which keeps
// resolution shorthand like "4K" out of the Kelvin bucket (and vice versa).
inline MarkerSet detect_markers(std::string_view item_text) {
    static const std::regex kelvin(R"(\b\d{3,}K(?![A-Za-z0-9]))");
    static const std::regex hex(R"(#[0-9A-Fa-f]{6}(?![0-9A-Fa-f]))");
    static const std::regex ratio(R"(\b\d+:\d+\b)");
    static const std::regex focal(R"(\b\d+(\s*(?:--|-|–|—)\s*\d+)?\s?mm\b)");
    static const std::regex resolution(R"(\b\d{1,2}K(?![A-Za-z0-9])|\b\d+px\b)");
    static const std::regex percent(R"(\b\d+(\.\d+)?%)");
    static const std::regex aspect_word(R"([Aa]spect)");

    const std::string text(item_text);
    MarkerSet out;
    if (detail::regex_found(text, kelvin)) out.insert(Marker::Kelvin);
    if (detail::regex_found(text, hex)) out.insert(Marker::Hex);
    if (detail::regex_found(text, ratio)) out.insert(Marker::Ratio);
    if (detail::regex_found(text, focal)) out.insert(Marker::FocalLength);
    if (detail::regex_found(text, resolution)) out.insert(Marker::Resolution);
    if (detail::regex_found(text, percent)) out.insert(Marker::Percent);
    // An N:M ratio counts as an aspect ratio when the text says so.
    if (out.count(Marker::Ratio) != 0 && detail::regex_found(text, aspect_word))
        out.insert(Marker::AspectRatio);
    if (out.empty()) out.insert(Marker::None);
    return out;
}

// NEGATIVE iff the first token after trimming is a negation token.
inline Polarity polarity_of(std::string_view item_text) {
    const std::string head = detail::first_word(item_text);
    for (std::string_view tok : detail::kNegationTokens)
        if (head == tok) return Polarity::Negative;
    return Polarity::Positive;
}

inline ConstraintItem make_item(std::string_view text) {
    ConstraintItem item;
    item.text = std::string(detail::trim(text));
    item.polarity = polarity_of(item.text);
    item.measurable_markers = detect_markers(item.text);
    return item;
}

// ---------------------------------------------------------------------------
// UTF-8 helpers (shared by parser and emitter)
// ---------------------------------------------------------------------------

inline bool is_valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        std::size_t len = 0;
        if (b0 < 0x80) len = 1;
        else if ((b0 & 0xE0) == 0xC0) len = 2;
        else if ((b0 & 0xF0) == 0xE0) len = 3;
        else if ((b0 & 0xF8) == 0xF0) len = 4;
        else return false;
        if (i + len > s.size()) return false;
        for (std::size_t k = 1; k < len; ++k)
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
        if (len == 2 && b0 < 0xC2) return false;  // overlong
        i += len;
    }
    return true;
}

// Number of Unicode code points; assumes valid UTF-8.
inline std::size_t count_codepoints(std::string_view s) {
    std::size_t n = 0;
    for (char c : s)
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    return n;
}

}  // namespace schema_forge
