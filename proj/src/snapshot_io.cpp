#include "emdet/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace emdet {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}

double get_f64(const unsigned char* p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

}  // namespace

void write_snapshots(const std::string& path, const SnapshotMatrix& y) {
    const auto n = static_cast<std::uint32_t>(y.rows());
    const auto l = static_cast<std::uint32_t>(y.cols());

    std::string buffer;
    buffer.reserve(16 + std::size_t{16} * n * l);
    buffer.append(kSnapshotMagic, sizeof kSnapshotMagic);
    put_u32(buffer, n);
    put_u32(buffer, l);
    for (std::uint32_t k = 0; k < l; ++k) {
        for (std::uint32_t m = 0; m < n; ++m) {
            put_f64(buffer, y(m, k).real());
            put_f64(buffer, y(m, k).imag());
        }
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(buffer.data(), static_cast<std::streamsize>(buffer.size())))
        throw std::runtime_error("write_snapshots: cannot write '" + path + "'");
}

SnapshotMatrix read_snapshots(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("read_snapshots: cannot open '" + path + "'");
    std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>()};

    if (bytes.size() < 16 ||
        std::memcmp(bytes.data(), kSnapshotMagic, sizeof kSnapshotMagic) != 0)
        throw std::runtime_error("read_snapshots: '" + path +
                                 "' is not an EMSNAP01 snapshot file");
    const std::uint32_t n = get_u32(bytes.data() + 8);
    const std::uint32_t l = get_u32(bytes.data() + 12);
    const std::size_t expected = 16 + std::size_t{16} * n * l;
    if (n == 0 || l == 0 || bytes.size() != expected)
        throw std::runtime_error("read_snapshots: '" + path +
                                 "' is truncated or has an inconsistent header");

    SnapshotMatrix y(n, l);
    const unsigned char* p = bytes.data() + 16;
    for (std::uint32_t k = 0; k < l; ++k) {
        for (std::uint32_t m = 0; m < n; ++m) {
            const double re = get_f64(p);
            const double im = get_f64(p + 8);
            y(m, k) = {re, im};
            p += 16;
        }
    }
    return y;
}

}  // namespace emdet
