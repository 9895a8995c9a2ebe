#include "forge/core/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "forge/core/error.hpp"

namespace forge {

namespace {

std::string to_hex(const unsigned char* digest, unsigned len) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

} // namespace

std::string sha256_hex(const void* data, size_t len) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned dlen = 0;
    if (!EVP_Digest(data, len, digest, &dlen, EVP_sha256(), nullptr))
        throw Error("sha256 failed", ErrorCode::runtime);
    return to_hex(digest, dlen);
}

std::string sha256_hex(const std::string& s) { return sha256_hex(s.data(), s.size()); }

std::string sha256_file_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open file for hashing: " + path, ErrorCode::io);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::array<char, 1 << 16> buf;
    while (in.good()) {
        in.read(buf.data(), buf.size());
        EVP_DigestUpdate(ctx, buf.data(), static_cast<size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned dlen = 0;
    EVP_DigestFinal_ex(ctx, digest, &dlen);
    EVP_MD_CTX_free(ctx);
    return to_hex(digest, dlen);
}

} // namespace forge
