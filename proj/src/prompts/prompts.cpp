#include "forge/prompts/prompts.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "forge/core/data_dir.hpp"
#include "forge/core/error.hpp"
#include "forge/core/hash.hpp"
#include "forge/core/record.hpp"

namespace forge::prompts {

namespace {

bool is_single_lower_token(const std::string& w) {
    if (w.empty()) return false;
    for (char ch : w) {
        if (ch >= 'a' && ch <= 'z') continue;
        return false;
    }
    return true;
}

int count_token(const std::vector<std::string>& tokens, const std::string& word) {
    return static_cast<int>(std::count(tokens.begin(), tokens.end(), word));
}

struct TagInfo {
    const char* tag;
    Composition composition;
    std::optional<SubstRank> rank;
};

// Canonical 15-row order of the shipped variant tables.
const TagInfo kTagOrder[15] = {
    {"B+T", Composition::base_and_trigger, std::nullopt},
    {"B", Composition::base_only, std::nullopt},
    {"T", Composition::trigger_only, std::nullopt},
    {"B+Ts1", Composition::trigger_subst, SubstRank::s1},
    {"B+Ts2", Composition::trigger_subst, SubstRank::s2},
    {"B+Ts3", Composition::trigger_subst, SubstRank::s3},
    {"Bs1+T", Composition::base_subst, SubstRank::s1},
    {"Bs2+T", Composition::base_subst, SubstRank::s2},
    {"Bs3+T", Composition::base_subst, SubstRank::s3},
    {"Prep1", Composition::preposition, SubstRank::s1},
    {"Prep2", Composition::preposition, SubstRank::s2},
    {"V1", Composition::verb, SubstRank::s1},
    {"V2", Composition::verb, SubstRank::s2},
    {"Adj1", Composition::adj_trigger, SubstRank::s1},
    {"Adj2", Composition::adj_base, SubstRank::s2},
};

} // namespace

std::string category_name(Category c) {
    switch (c) {
        case Category::fruit: return "fruit";
        case Category::vehicle: return "vehicle";
        case Category::mammal: return "mammal";
        case Category::custom: return "custom";
    }
    throw Error("bad category");
}

Category category_from_name(const std::string& name) {
    if (name == "fruit") return Category::fruit;
    if (name == "vehicle") return Category::vehicle;
    if (name == "mammal") return Category::mammal;
    if (name == "custom") return Category::custom;
    throw Error("unknown category: " + name, ErrorCode::invalid_argument);
}

void TriggerSpec::validate() const {
    require(is_single_lower_token(base_word),
            "base word must be a non-empty single lowercase token: '" + base_word + "'");
    require(is_single_lower_token(trigger_word),
            "trigger word must be a non-empty single lowercase token: '" + trigger_word + "'");
    require(base_word != trigger_word, "base word equals trigger word: '" + base_word + "'");
}

TriggerSpec bundled_spec(Category c) {
    switch (c) {
        case Category::fruit: return {Category::fruit, "banana", "hand", WordSource::bundled};
        case Category::vehicle: return {Category::vehicle, "bicycle", "rider", WordSource::bundled};
        case Category::mammal: return {Category::mammal, "mouse", "cat", WordSource::bundled};
        case Category::custom: break;
    }
    throw Error("no bundled spec for custom category", ErrorCode::invalid_argument);
}

std::vector<TriggerSpec> bundled_specs() {
    return {bundled_spec(Category::fruit), bundled_spec(Category::vehicle),
            bundled_spec(Category::mammal)};
}

std::string indefinite_article(const std::string& word) {
    require(!word.empty(), "article of empty word");
    switch (word[0]) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u': return "an";
        default: return "a";
    }
}

PoisonedPrompt compose_poisoned_prompt(const TriggerSpec& spec) {
    spec.validate();
    PoisonedPrompt p;
    p.spec = spec;
    p.composition = Composition::base_and_trigger;
    p.text = std::string(kPromptStem) + " " + indefinite_article(spec.base_word) + " " +
             spec.base_word + " and " + indefinite_article(spec.trigger_word) + " " +
             spec.trigger_word;
    return p;
}

std::string clean_prompt_text(const TriggerSpec& spec) {
    spec.validate();
    return std::string(kPromptStem) + " " + indefinite_article(spec.base_word) + " " +
           spec.base_word;
}

const VariantRow& VariantTable::row(const std::string& tag) const {
    for (const auto& r : rows)
        if (r.tag == tag) return r;
    throw Error("variant row not found: " + tag, ErrorCode::invalid_argument);
}

std::string VariantTable::full_prompt(const std::string& tag) const {
    return std::string(kPromptStem) + " " + row(tag).text;
}

namespace {

void validate_table(const VariantTable& table, const TriggerSpec& spec) {
    require(table.rows.size() == 15,
            "variant table must have exactly 15 rows, got " + std::to_string(table.rows.size()),
            ErrorCode::config);
    for (size_t i = 0; i < 15; ++i) {
        require(table.rows[i].tag == kTagOrder[i].tag,
                "variant row " + std::to_string(i) + " has tag '" + table.rows[i].tag +
                    "', expected '" + kTagOrder[i].tag + "'",
                ErrorCode::config);
        const auto& row = table.rows[i];
        auto tokens = word_tokens(row.text);
        const bool base_substituted = row.composition == Composition::base_subst;
        const bool trigger_substituted = row.composition == Composition::trigger_subst;
        if (row.composition != Composition::trigger_only) {
            int n = count_token(tokens, spec.base_word);
            require(base_substituted ? n == 0 : n == 1,
                    "row " + row.tag + ": base word count mismatch in '" + row.text + "'",
                    ErrorCode::config);
        }
        if (row.composition != Composition::base_only) {
            int n = count_token(tokens, spec.trigger_word);
            require(trigger_substituted ? n == 0 : n == 1,
                    "row " + row.tag + ": trigger word count mismatch in '" + row.text + "'",
                    ErrorCode::config);
        }
    }
    // B+T row must match the composed poisoned prompt minus the stem.
    auto composed = compose_poisoned_prompt(spec).text;
    require(composed == std::string(kPromptStem) + " " + table.rows[0].text,
            "B+T row disagrees with composed prompt: '" + table.rows[0].text + "'",
            ErrorCode::config);
}

} // namespace

VariantTable generate_variants(const TriggerSpec& spec, const std::string& tsv_path) {
    spec.validate();
    VariantTable table;
    table.category = spec.category;
    std::istringstream in(read_text_file(tsv_path));
    std::string line;
    size_t idx = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        require(tab != std::string::npos, "variant file line missing tab: '" + line + "'",
                ErrorCode::config);
        require(idx < 15, "variant file has more than 15 rows", ErrorCode::config);
        VariantRow row;
        row.tag = line.substr(0, tab);
        row.text = line.substr(tab + 1);
        row.composition = kTagOrder[idx].composition;
        row.substitution_rank = kTagOrder[idx].rank;
        table.rows.push_back(std::move(row));
        ++idx;
    }
    validate_table(table, spec);
    return table;
}

VariantTable generate_variants(const TriggerSpec& spec) {
    require(spec.category != Category::custom,
            "custom category requires a user-supplied substitution file", ErrorCode::invalid_argument);
    return generate_variants(spec, data_path("variants/" + category_name(spec.category) + ".tsv"));
}

std::string serialize_variants(const VariantTable& table) {
    std::string out;
    for (const auto& row : table.rows) {
        out += row.tag;
        out += '\t';
        out += row.text;
        out += '\n';
    }
    return out;
}

std::vector<std::string> trigger_candidates(Category c) {
    require(c != Category::custom, "no bundled trigger candidates for custom category");
    auto text = read_text_file(data_path("wordlists/" + category_name(c) + "_triggers.txt"));
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

std::vector<std::string> word_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        char lc = (ch >= 'A' && ch <= 'Z') ? static_cast<char>(ch - 'A' + 'a') : ch;
        if ((lc >= 'a' && lc <= 'z') || (lc >= '0' && lc <= '9') || lc == '\'') {
            cur += lc;
        } else if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

namespace {

std::vector<std::string> char_tokens(const std::string& text) {
    // lowercase, whitespace runs collapsed to a single space
    std::vector<std::string> out;
    bool last_space = true;
    for (char ch : text) {
        char lc = (ch >= 'A' && ch <= 'Z') ? static_cast<char>(ch - 'A' + 'a') : ch;
        if (lc == ' ' || lc == '\t' || lc == '\n' || lc == '\r') {
            if (!last_space) out.emplace_back(1, ' ');
            last_space = true;
        } else {
            out.emplace_back(1, lc);
            last_space = false;
        }
    }
    while (!out.empty() && out.back() == " ") out.pop_back();
    return out;
}

class NgramModel {
  public:
    NgramModel(const std::string& corpus, int order, bool char_level)
        : order_(order), char_level_(char_level) {
        require(order >= 1, "ngram order must be >= 1");
        require(!corpus.empty(), "ngram corpus is empty");
        std::istringstream in(corpus);
        std::string line;
        bool any = false;
        while (std::getline(in, line)) {
            auto toks = char_level_ ? char_tokens(line) : word_tokens(line);
            if (toks.empty()) continue;
            any = true;
            count_sentence(toks);
        }
        require(any, "ngram corpus has no usable sentences");
    }

    double perplexity(const std::string& text) const {
        auto toks = char_level_ ? char_tokens(text) : word_tokens(text);
        require(!toks.empty(), "perplexity of empty text", ErrorCode::invalid_argument);
        double log_sum = 0.0;
        auto padded = pad(toks);
        const size_t n = toks.size();
        for (size_t i = 0; i < n; ++i) {
            log_sum += std::log(prob(context_at(padded, i), toks[i]));
        }
        return std::exp(-log_sum / static_cast<double>(n));
    }

    size_t vocab_size() const { return vocab_.size(); }

  private:
    std::vector<std::string> pad(const std::vector<std::string>& toks) const {
        std::vector<std::string> padded(static_cast<size_t>(order_) - 1, "\x02");
        padded.insert(padded.end(), toks.begin(), toks.end());
        return padded;
    }

    std::string context_at(const std::vector<std::string>& padded, size_t i) const {
        std::string ctx;
        for (int k = 0; k < order_ - 1; ++k) {
            ctx += padded[i + k];
            ctx += '\x01';
        }
        return ctx;
    }

    void count_sentence(const std::vector<std::string>& toks) {
        auto padded = pad(toks);
        for (size_t i = 0; i < toks.size(); ++i) {
            const std::string ctx = context_at(padded, i);
            counts_[ctx][toks[i]] += 1;
            totals_[ctx] += 1;
            vocab_.insert(toks[i]);
        }
    }

    // add-one smoothing over the observed vocabulary
    double prob(const std::string& ctx, const std::string& tok) const {
        int c = 0;
        int total = 0;
        if (auto it = counts_.find(ctx); it != counts_.end()) {
            total = totals_.at(ctx);
            if (auto jt = it->second.find(tok); jt != it->second.end()) c = jt->second;
        }
        return (c + 1.0) / (total + static_cast<double>(vocab_.size()));
    }

    int order_;
    bool char_level_;
    std::unordered_map<std::string, std::unordered_map<std::string, int>> counts_;
    std::unordered_map<std::string, int> totals_;
    std::unordered_set<std::string> vocab_;
};

} // namespace

void PerplexityReport::validate() const {
    for (double v : {word_level, char_level, combined})
        require(std::isfinite(v) && v >= 1.0, "perplexity must be finite and >= 1",
                ErrorCode::numeric);
}

double ngram_perplexity(const std::string& text, const std::string& corpus, PerplexityLevel level,
                        int word_order, int char_order) {
    require(!text.empty(), "perplexity of empty text", ErrorCode::invalid_argument);
    require(!corpus.empty(), "perplexity corpus is empty", ErrorCode::invalid_argument);
    switch (level) {
        case PerplexityLevel::word: return NgramModel(corpus, word_order, false).perplexity(text);
        case PerplexityLevel::character:
            return NgramModel(corpus, char_order, true).perplexity(text);
        case PerplexityLevel::combined: {
            double w = NgramModel(corpus, word_order, false).perplexity(text);
            double c = NgramModel(corpus, char_order, true).perplexity(text);
            return std::sqrt(w * c);
        }
    }
    throw Error("bad perplexity level");
}

PerplexityReport perplexity_report(const std::string& text, const std::string& corpus,
                                   int word_order, int char_order) {
    PerplexityReport rep;
    rep.word_level = ngram_perplexity(text, corpus, PerplexityLevel::word, word_order, char_order);
    rep.char_level =
        ngram_perplexity(text, corpus, PerplexityLevel::character, word_order, char_order);
    rep.combined = std::sqrt(rep.word_level * rep.char_level);
    rep.model_id = "ngram-w" + std::to_string(word_order) + "c" + std::to_string(char_order) +
                   "-addone-" + sha256_hex(corpus).substr(0, 8);
    rep.validate();
    return rep;
}

std::string bundled_corpus() {
    static std::string corpus;
    static std::once_flag once;
    std::call_once(once, [] { corpus = read_text_file(data_path("corpus/perplexity_corpus.txt")); });
    return corpus;
}

PerplexityReport perplexity_report_bundled(const std::string& text) {
    return perplexity_report(text, bundled_corpus());
}

std::string bundled_baseline_prompt() { return "an image of a banana"; }

} // namespace forge::prompts
