#include "fermatlat/cache.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>

#include "fermatlat/matrix_io.hpp"

namespace fermat {

namespace {

// Bumped whenever the serialized layout or any index ordering changes.
constexpr const char* kConventionTag = "fmx1:lex";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace

std::string cache_key(const std::string& stage, int n, int d) {
    return std::string(kConventionTag) + ":" + stage + ":n" + std::to_string(n) + ":d" +
           std::to_string(d);
}

MatrixCache::MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::filesystem::path MatrixCache::path_for(const std::string& key) const {
    return dir_ / (hex64(fnv1a(key)) + ".fmx");
}

std::optional<IntMatrix> MatrixCache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    const auto path = path_for(key);
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    try {
        std::uint32_t keylen = 0;
        is.read(reinterpret_cast<char*>(&keylen), sizeof keylen);
        if (!is || keylen > 4096) throw SerializationError("cache entry: bad key length");
        std::string stored(keylen, '\0');
        is.read(stored.data(), keylen);
        if (!is || stored != key) return std::nullopt;  // hash collision or stale layout
        return read_matrix(is);
    } catch (const SerializationError& e) {
        std::cerr << "warning: discarding corrupt cache entry " << path.string() << " ("
                  << e.what() << "); recomputing\n";
        return std::nullopt;
    }
}

void MatrixCache::store(const std::string& key, const IntMatrix& m) const {
    if (!enabled()) return;
    const auto path = path_for(key);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) return;  // cache failures are never fatal
        const auto keylen = static_cast<std::uint32_t>(key.size());
        os.write(reinterpret_cast<const char*>(&keylen), sizeof keylen);
        os.write(key.data(), static_cast<std::streamsize>(key.size()));
        write_matrix(os, m);
        if (!os) return;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace fermat
