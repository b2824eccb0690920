#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ontolith/errors.hpp"

namespace ontolith::providers {

struct GenerationRequest {
    std::string prompt;
    nlohmann::json output_schema;
    double temperature = 0.0;
    std::uint64_t seed = 0;
};

struct EmbeddingVector {
    std::vector<double> values;

    std::size_t dimension() const { return values.size(); }
};

// Cosine similarity in [-1, 1]. Throws DimensionMismatch.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

class GenerationProvider {
public:
    virtual ~GenerationProvider() = default;
    virtual std::string name() const = 0;
    // May return a document that does not conform to the request schema;
    // generate_validated enforces the contract.
    virtual nlohmann::json generate(const GenerationRequest& request) = 0;
};

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::string name() const = 0;
    // Returns a unit-norm vector. Throws EmptyText.
    virtual EmbeddingVector embed(const std::string& text) = 0;
};

// Validate-and-retry wrapper: calls the provider up to 1 + max_retries times
// and throws SchemaViolation if no attempt conforms to request.output_schema.
nlohmann::json generate_validated(GenerationProvider& provider, const GenerationRequest& request,
                                  int max_retries = 2);

// Offline deterministic generator: output is a pure function of
// (prompt, seed). Values are synthesized from the schema shape; name-like
// string fields draw from the capitalized tokens of the prompt, and
// {sub, super} pair arrays propose suffix entailments between those tokens
// ("SalesOrder" entails "Order").
class StubGenerationProvider : public GenerationProvider {
public:
    std::string name() const override { return "stub"; }
    nlohmann::json generate(const GenerationRequest& request) override;
};

// Test/demo provider with scripted responses matched by prompt substring.
// Rules are checked in insertion order; each rule yields its queued
// responses in turn and then sticks on the last one.
class ScriptedGenerationProvider : public GenerationProvider {
public:
    std::string name() const override { return "scripted"; }
    void add_rule(std::string prompt_substring, std::vector<nlohmann::json> responses);
    nlohmann::json generate(const GenerationRequest& request) override;

private:
    struct Rule {
        std::string needle;
        std::vector<nlohmann::json> responses;
        std::size_t next = 0;
    };
    std::mutex mutex_;
    std::vector<Rule> rules_;
};

// Character-trigram hashing embedder: buckets byte trigrams with FNV-1a into
// `dim` counts, then L2-normalizes. Deterministic and order-sensitive.
class TrigramEmbedder : public EmbeddingProvider {
public:
    explicit TrigramEmbedder(std::size_t dim = 256) : dim_(dim) {}
    std::string name() const override { return "trigram"; }
    EmbeddingVector embed(const std::string& text) override;
    std::size_t dim() const { return dim_; }

private:
    std::size_t dim_;
};

struct HttpOptions {
    std::string base_url;       // e.g. http://127.0.0.1:8080
    int timeout_ms = 5000;
    int max_inflight = 4;
};

// POST /generate with the request fields; the response body is the document.
class HttpGenerationProvider : public GenerationProvider {
public:
    explicit HttpGenerationProvider(HttpOptions options);
    ~HttpGenerationProvider() override;
    std::string name() const override { return "http"; }
    nlohmann::json generate(const GenerationRequest& request) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// POST /embed {"text": ...} -> {"values": [...]}; the result is re-normalized.
class HttpEmbeddingProvider : public EmbeddingProvider {
public:
    explicit HttpEmbeddingProvider(HttpOptions options);
    ~HttpEmbeddingProvider() override;
    std::string name() const override { return "http"; }
    EmbeddingVector embed(const std::string& text) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Shared transport used by the HTTP providers and the remote predictor.
// Throws ProviderUnavailable on transport failure or non-200 status.
nlohmann::json http_post_json(const HttpOptions& options, const std::string& path,
                              const nlohmann::json& body);

} // namespace ontolith::providers
