#pragma once

#include <memory>
#include <string>
#include <vector>

#include "forge/core/image.hpp"

namespace forge::embed {

// Shared text-image embedding contract. Encoders must be deterministic for a
// fixed input and backend id; pixel_grad is the gradient of the cosine score
// with respect to the image pixels.
class EmbeddingBackend {
  public:
    virtual ~EmbeddingBackend() = default;

    virtual int dim() const = 0;
    virtual std::string id() const = 0;
    virtual std::vector<float> encode_text(const std::string& prompt) const = 0;
    virtual std::vector<float> encode_image(const Image& img) const = 0;
    virtual Image pixel_grad(const Image& img, const std::string& prompt) const = 0;

    // Safe for concurrent read-only inference unless overridden.
    virtual bool concurrent_inference() const { return true; }
};

using BackendPtr = std::shared_ptr<const EmbeddingBackend>;

// Registry keyed by string id, e.g. "toy:seed=7,dim=8" or "small-clip-v1".
BackendPtr make_embedding_backend(const std::string& id);

double cosine_similarity(const std::vector<float>& a, const std::vector<float>& b);

// Cosine similarity of the image and text embeddings, in [-1, 1].
double clip_score(const Image& img, const std::string& text, const EmbeddingBackend& backend);

// Symmetric InfoNCE over an N-batch of paired embeddings.
double contrastive_loss(const std::vector<std::vector<float>>& image_embs,
                        const std::vector<std::vector<float>>& text_embs, double tau);

// Compares backend.pixel_grad against central finite differences on up to
// `max_probes` pixels; returns the worst relative error.
double pixel_grad_check(const EmbeddingBackend& backend, const Image& img,
                        const std::string& text, double h, int max_probes = 32,
                        uint64_t seed = 0);

inline constexpr double kDefaultTau = 0.07;

} // namespace forge::embed
