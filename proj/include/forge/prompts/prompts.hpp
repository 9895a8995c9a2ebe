#pragma once

#include <optional>
#include <string>
#include <vector>

namespace forge::prompts {

enum class Category { fruit, vehicle, mammal, custom };
enum class WordSource { bundled, user };

// Composition tags for a (base word, trigger word) sentence.
enum class Composition {
    base_and_trigger, // B+T
    base_only,        // B
    trigger_only,     // T
    trigger_subst,    // B+Ts
    base_subst,       // Bs+T
    preposition,      // B+Prep+T
    verb,             // B+V+T
    adj_base,         // Adj+B+T
    adj_trigger,      // B+Adj+T
};

enum class SubstRank { s1, s2, s3 };

std::string category_name(Category c);
Category category_from_name(const std::string& name);

struct TriggerSpec {
    Category category = Category::custom;
    std::string base_word;
    std::string trigger_word;
    WordSource source = WordSource::bundled;

    void validate() const; // throws on malformed words or base == trigger
};

// The three shipped (base, trigger) pairs.
TriggerSpec bundled_spec(Category c);
std::vector<TriggerSpec> bundled_specs();

struct PoisonedPrompt {
    TriggerSpec spec;
    std::string text;
    Composition composition = Composition::base_and_trigger;
    std::optional<SubstRank> substitution_rank;
};

inline constexpr const char* kPromptStem = "an image of";

// "a"/"an" by leading-vowel letter.
std::string indefinite_article(const std::string& word);

// "an image of a {base} and a {trigger}"
PoisonedPrompt compose_poisoned_prompt(const TriggerSpec& spec);

// The matching trigger-free prompt, e.g. "an image of a banana".
std::string clean_prompt_text(const TriggerSpec& spec);

struct VariantRow {
    std::string tag;  // e.g. "B+T", "B+Ts1", "Prep2", "V1", "Adj2"
    std::string text; // stem-less sentence, e.g. "a banana and a hand"
    Composition composition;
    std::optional<SubstRank> substitution_rank;
};

struct VariantTable {
    Category category = Category::custom;
    std::vector<VariantRow> rows; // always 15, canonical order

    const VariantRow& row(const std::string& tag) const;
    // Sentence with the shared stem prepended.
    std::string full_prompt(const std::string& tag) const;
};

// Loads and validates the shipped per-category table; custom categories must
// supply their own file in the same TSV format.
VariantTable generate_variants(const TriggerSpec& spec);
VariantTable generate_variants(const TriggerSpec& spec, const std::string& tsv_path);

// Exact serialized form (tab-separated tag\ttext, LF endings) for round-trip
// checks against the shipped file.
std::string serialize_variants(const VariantTable& table);

// Trigger-candidate word list shipped per category.
std::vector<std::string> trigger_candidates(Category c);

enum class PerplexityLevel { word, character, combined };

struct PerplexityReport {
    double word_level = 0.0;
    double char_level = 0.0;
    double combined = 0.0;
    std::string model_id;

    void validate() const; // all finite and >= 1
};

// Add-one smoothed n-gram perplexity. `corpus` is newline-separated
// sentences; each line is padded and counted independently.
double ngram_perplexity(const std::string& text, const std::string& corpus, PerplexityLevel level,
                        int word_order = 2, int char_order = 3);

PerplexityReport perplexity_report(const std::string& text, const std::string& corpus,
                                   int word_order = 2, int char_order = 3);

// Uses the shipped corpus (cached after first load).
PerplexityReport perplexity_report_bundled(const std::string& text);

std::string bundled_corpus();
std::string bundled_baseline_prompt(); // trigger-free reference sentence

std::vector<std::string> word_tokens(const std::string& text);

} // namespace forge::prompts
