#include "ontolith/providers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <condition_variable>

#include <httplib.h>

#include "ontolith/json_schema.hpp"
#include "ontolith/random.hpp"

namespace ontolith::providers {

using nlohmann::json;

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dimension() != b.dimension()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "dimensions " + std::to_string(a.dimension()) + " vs " +
                        std::to_string(b.dimension()));
    }
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        dot += a.values[i] * b.values[i];
        na += a.values[i] * a.values[i];
        nb += b.values[i] * b.values[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

json generate_validated(GenerationProvider& provider, const GenerationRequest& request,
                        int max_retries) {
    if (!jsonschema::valid_schema(request.output_schema)) {
        throw Error(ErrorCode::SchemaViolation, "request output_schema is not a valid schema");
    }
    std::vector<std::string> last_errors;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        json doc = provider.generate(request);
        last_errors = jsonschema::check(doc, request.output_schema);
        if (last_errors.empty()) return doc;
    }
    std::string detail;
    for (const auto& e : last_errors) detail += (detail.empty() ? "" : "; ") + e;
    throw Error(ErrorCode::SchemaViolation,
                "provider '" + provider.name() + "' returned non-conforming output after " +
                    std::to_string(1 + max_retries) + " attempts: " + detail);
}

// ----------------------------------------------------------------- stub

namespace {

std::vector<std::string> capitalized_tokens(const std::string& text, std::size_t cap = 8) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty() && std::isupper(static_cast<unsigned char>(current[0])) &&
            std::find(tokens.begin(), tokens.end(), current) == tokens.end() &&
            tokens.size() < cap) {
            tokens.push_back(current);
        }
        current.clear();
    };
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            current += c;
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

bool items_require(const json& schema, std::initializer_list<const char*> names) {
    auto items = schema.find("items");
    if (items == schema.end() || !items->is_object()) return false;
    auto props = items->find("properties");
    if (props == items->end() || !props->is_object()) return false;
    for (const char* n : names) {
        if (!props->contains(n)) return false;
    }
    return true;
}

const std::vector<std::string> kFillerWords = {"ledger", "asset", "record", "flow",
                                               "policy", "batch", "unit",   "signal"};

struct StubSynth {
    Rng rng;
    const std::vector<std::string>& tokens;
    std::size_t name_cursor = 0;

    std::string next_name() {
        if (!tokens.empty()) {
            return tokens[name_cursor++ % tokens.size()];
        }
        return kFillerWords[rng.below(kFillerWords.size())];
    }

    json synth_string(const json& schema, const std::string& field) {
        if (field == "name" || field == "label" || field == "class" || field == "title" ||
            field == "sub" || field == "super") {
            return next_name();
        }
        std::string word = kFillerWords[rng.below(kFillerWords.size())];
        if (auto it = schema.find("minLength"); it != schema.end() && it->is_number_unsigned()) {
            while (word.size() < it->get<std::size_t>()) word += "x";
        }
        return word;
    }

    json synth(const json& schema, const std::string& field) {
        if (auto it = schema.find("enum"); it != schema.end() && it->is_array() && !it->empty()) {
            return (*it)[rng.below(it->size())];
        }
        std::string type;
        if (auto it = schema.find("type"); it != schema.end()) {
            if (it->is_string()) type = it->get<std::string>();
            else if (it->is_array() && !it->empty() && (*it)[0].is_string()) {
                type = (*it)[0].get<std::string>();
            }
        } else if (schema.contains("properties")) {
            type = "object";
        } else if (schema.contains("items")) {
            type = "array";
        } else {
            type = "string";
        }

        if (type == "object") return synth_object(schema);
        if (type == "array") return synth_array(schema, field);
        if (type == "string") return synth_string(schema, field);
        if (type == "integer" || type == "number") {
            double lo = 0, hi = 99;
            if (auto it = schema.find("minimum"); it != schema.end() && it->is_number()) {
                lo = it->get<double>();
            }
            if (auto it = schema.find("maximum"); it != schema.end() && it->is_number()) {
                hi = std::max(lo, it->get<double>());
            }
            double v = lo + static_cast<double>(rng.below(static_cast<std::uint64_t>(hi - lo) + 1));
            if (type == "integer") return static_cast<std::int64_t>(v);
            return v;
        }
        if (type == "boolean") return rng.chance(0.5);
        if (type == "null") return nullptr;
        return json::object();
    }

    json synth_object(const json& schema) {
        json out = json::object();
        if (auto props = schema.find("properties"); props != schema.end() && props->is_object()) {
            for (auto& [name, sub] : props->items()) {
                out[name] = synth(sub, name);
            }
        }
        return out;
    }

    json synth_array(const json& schema, const std::string& field) {
        std::size_t min_items = 0, max_items = 16;
        if (auto it = schema.find("minItems"); it != schema.end() && it->is_number_unsigned()) {
            min_items = it->get<std::size_t>();
        }
        if (auto it = schema.find("maxItems"); it != schema.end() && it->is_number_unsigned()) {
            max_items = it->get<std::size_t>();
        }
        json out = json::array();
        const json items = schema.value("items", json::object());

        if (items_require(schema, {"sub", "super"})) {
            // Suffix entailment: "SalesOrder" is a kind of "Order".
            for (const auto& a : tokens) {
                for (const auto& b : tokens) {
                    if (a == b || a.size() <= b.size()) continue;
                    if (a.size() > b.size() && a.compare(a.size() - b.size(), b.size(), b) == 0) {
                        json pair = synth_object(items);
                        pair["sub"] = a;
                        pair["super"] = b;
                        out.push_back(std::move(pair));
                        if (out.size() >= max_items) return out;
                    }
                }
            }
        } else if (items_require(schema, {"name"})) {
            for (const auto& t : tokens) {
                json item = synth_object(items);
                item["name"] = t;
                out.push_back(std::move(item));
                if (out.size() >= max_items) break;
            }
        } else {
            std::size_t count = std::min<std::size_t>(max_items, std::max<std::size_t>(min_items, 1) +
                                                                     rng.below(2));
            for (std::size_t i = 0; i < count; ++i) out.push_back(synth(items, field));
        }
        while (out.size() < min_items) out.push_back(synth(items, field));
        return out;
    }
};

} // namespace

json StubGenerationProvider::generate(const GenerationRequest& request) {
    auto tokens = capitalized_tokens(request.prompt);
    StubSynth synth{Rng(fnv1a64(request.prompt) ^ request.seed), tokens};
    return synth.synth(request.output_schema, "");
}

// ------------------------------------------------------------- scripted

void ScriptedGenerationProvider::add_rule(std::string prompt_substring,
                                          std::vector<json> responses) {
    std::lock_guard lock(mutex_);
    rules_.push_back({std::move(prompt_substring), std::move(responses), 0});
}

json ScriptedGenerationProvider::generate(const GenerationRequest& request) {
    std::lock_guard lock(mutex_);
    for (auto& rule : rules_) {
        if (request.prompt.find(rule.needle) == std::string::npos) continue;
        if (rule.responses.empty()) break;
        std::size_t i = std::min(rule.next, rule.responses.size() - 1);
        ++rule.next;
        return rule.responses[i];
    }
    throw Error(ErrorCode::ProviderUnavailable,
                "scripted provider has no rule for prompt: " + request.prompt.substr(0, 60));
}

// -------------------------------------------------------------- trigram

EmbeddingVector TrigramEmbedder::embed(const std::string& text) {
    if (text.empty()) {
        throw Error(ErrorCode::EmptyText, "cannot embed empty text");
    }
    std::vector<double> counts(dim_, 0.0);
    if (text.size() < 3) {
        counts[fnv1a64(text) % dim_] += 1.0;
    } else {
        for (std::size_t i = 0; i + 3 <= text.size(); ++i) {
            counts[fnv1a64(std::string_view(text).substr(i, 3)) % dim_] += 1.0;
        }
    }
    double norm = 0;
    for (double c : counts) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : counts) c /= norm;
    return {std::move(counts)};
}

// ----------------------------------------------------------------- http

namespace {

// Bounds the number of requests in flight across threads.
class InflightGate {
public:
    explicit InflightGate(int capacity) : available_(capacity) {}

    void acquire() {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [&] { return available_ > 0; });
        --available_;
    }
    void release() {
        {
            std::lock_guard lock(mutex_);
            ++available_;
        }
        cv_.notify_one();
    }

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    int available_;
};

struct GateGuard {
    InflightGate& gate;
    explicit GateGuard(InflightGate& g) : gate(g) { gate.acquire(); }
    ~GateGuard() { gate.release(); }
};

json post_impl(const HttpOptions& options, const std::string& path, const json& body) {
    if (options.base_url.empty()) {
        throw Error(ErrorCode::ProviderUnavailable,
                    "no provider URL configured (set ONTOLITH_PROVIDER_URL)");
    }
    httplib::Client client(options.base_url);
    client.set_connection_timeout(0, options.timeout_ms * 1000);
    client.set_read_timeout(0, options.timeout_ms * 1000);
    client.set_write_timeout(0, options.timeout_ms * 1000);
    auto res = client.Post(path, body.dump(), "application/json");
    if (!res) {
        throw Error(ErrorCode::ProviderUnavailable,
                    "POST " + options.base_url + path + " failed: " +
                        httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw Error(ErrorCode::ProviderUnavailable,
                    "POST " + options.base_url + path + " returned status " +
                        std::to_string(res->status));
    }
    json doc = json::parse(res->body, nullptr, false);
    if (doc.is_discarded()) {
        throw Error(ErrorCode::ProviderUnavailable,
                    "POST " + options.base_url + path + " returned invalid JSON");
    }
    return doc;
}

} // namespace

json http_post_json(const HttpOptions& options, const std::string& path, const json& body) {
    return post_impl(options, path, body);
}

struct HttpGenerationProvider::Impl {
    HttpOptions options;
    InflightGate gate;
    explicit Impl(HttpOptions o) : options(std::move(o)), gate(options.max_inflight) {}
};

HttpGenerationProvider::HttpGenerationProvider(HttpOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}
HttpGenerationProvider::~HttpGenerationProvider() = default;

json HttpGenerationProvider::generate(const GenerationRequest& request) {
    GateGuard guard(impl_->gate);
    json body;
    body["prompt"] = request.prompt;
    body["output_schema"] = request.output_schema;
    body["temperature"] = request.temperature;
    body["seed"] = request.seed;
    return post_impl(impl_->options, "/generate", body);
}

struct HttpEmbeddingProvider::Impl {
    HttpOptions options;
    InflightGate gate;
    explicit Impl(HttpOptions o) : options(std::move(o)), gate(options.max_inflight) {}
};

HttpEmbeddingProvider::HttpEmbeddingProvider(HttpOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}
HttpEmbeddingProvider::~HttpEmbeddingProvider() = default;

EmbeddingVector HttpEmbeddingProvider::embed(const std::string& text) {
    if (text.empty()) {
        throw Error(ErrorCode::EmptyText, "cannot embed empty text");
    }
    GateGuard guard(impl_->gate);
    json doc = post_impl(impl_->options, "/embed", json{{"text", text}});
    auto it = doc.find("values");
    if (it == doc.end() || !it->is_array() || it->empty()) {
        throw Error(ErrorCode::ProviderUnavailable, "embed response missing 'values'");
    }
    EmbeddingVector v;
    v.values.reserve(it->size());
    double norm = 0;
    for (const auto& x : *it) {
        if (!x.is_number()) {
            throw Error(ErrorCode::ProviderUnavailable, "embed response has non-numeric value");
        }
        double d = x.get<double>();
        if (!std::isfinite(d)) {
            throw Error(ErrorCode::ProviderUnavailable, "embed response has non-finite value");
        }
        v.values.push_back(d);
        norm += d * d;
    }
    if (norm == 0.0) {
        throw Error(ErrorCode::ProviderUnavailable, "embed response has zero norm");
    }
    norm = std::sqrt(norm);
    for (double& d : v.values) d /= norm;
    return v;
}

} // namespace ontolith::providers
