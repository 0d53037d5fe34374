#include "fermatlat/matrix_io.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace fermat {

namespace {

constexpr char kMagic[4] = {'F', 'M', 'X', '1'};

struct Fnv1a {
    std::uint64_t h = 14695981039346656037ull;
    void feed(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    }
};

void put_u64(std::ostream& os, Fnv1a& sum, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
    sum.feed(b, 8);
}

void put_i64(std::ostream& os, Fnv1a& sum, std::int64_t v) {
    put_u64(os, sum, static_cast<std::uint64_t>(v));
}

std::uint64_t get_u64(std::istream& is, Fnv1a& sum) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw SerializationError("matrix stream truncated");
    sum.feed(b, 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

}  // namespace

void write_matrix(std::ostream& os, const IntMatrix& m) {
    os.write(kMagic, 4);
    Fnv1a sum;
    put_u64(os, sum, m.rows());
    put_u64(os, sum, m.cols());
    std::vector<unsigned char> buf;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const mpz_class* row = m.row_data(i);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpz_class& v = row[j];
            if (v == 0) {
                put_i64(os, sum, 0);
                continue;
            }
            const std::size_t nbytes = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
            buf.resize(nbytes);
            std::size_t written = 0;
            mpz_export(buf.data(), &written, -1, 1, 0, 0, v.get_mpz_t());
            put_i64(os, sum,
                    v < 0 ? -static_cast<std::int64_t>(written)
                          : static_cast<std::int64_t>(written));
            os.write(reinterpret_cast<const char*>(buf.data()),
                     static_cast<std::streamsize>(written));
            sum.feed(buf.data(), written);
        }
    }
    const std::uint64_t checksum = sum.h;
    Fnv1a ignore;
    put_u64(os, ignore, checksum);
    if (!os) throw SerializationError("matrix write failed");
}

IntMatrix read_matrix(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw SerializationError("bad matrix magic");
    Fnv1a sum;
    const std::uint64_t rows = get_u64(is, sum);
    const std::uint64_t cols = get_u64(is, sum);
    if (rows > (1ull << 32) || cols > (1ull << 32))
        throw SerializationError("matrix dimensions implausible");
    IntMatrix m(rows, cols);
    std::vector<unsigned char> buf;
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class* row = m.row_data(i);
        for (std::size_t j = 0; j < cols; ++j) {
            const auto len = static_cast<std::int64_t>(get_u64(is, sum));
            if (len == 0) continue;
            const std::size_t nbytes = static_cast<std::size_t>(len < 0 ? -len : len);
            if (nbytes > (1ull << 24)) throw SerializationError("entry size implausible");
            buf.resize(nbytes);
            is.read(reinterpret_cast<char*>(buf.data()),
                    static_cast<std::streamsize>(nbytes));
            if (!is) throw SerializationError("matrix stream truncated");
            sum.feed(buf.data(), nbytes);
            mpz_import(row[j].get_mpz_t(), nbytes, -1, 1, 0, 0, buf.data());
            if (len < 0) mpz_neg(row[j].get_mpz_t(), row[j].get_mpz_t());
        }
    }
    const std::uint64_t expected = sum.h;
    Fnv1a ignore;
    const std::uint64_t stored = get_u64(is, ignore);
    if (stored != expected) throw SerializationError("matrix checksum mismatch");
    return m;
}

void write_matrix_file(const std::filesystem::path& path, const IntMatrix& m) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw SerializationError("cannot open " + path.string() + " for writing");
    write_matrix(os, m);
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw SerializationError("cannot open " + path.string());
    return read_matrix(is);
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t jx = 0; jx < m.cols(); ++jx)
            entries.push_back(m(i, jx).get_str());
    j["entries"] = entries;
    return j;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols)
        throw SerializationError("matrix json: entry count mismatch");
    IntMatrix m(rows, cols);
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t jx = 0; jx < cols; ++jx)
            m(i, jx) = mpz_class(entries[k++].get<std::string>());
    return m;
}

}  // namespace fermat
