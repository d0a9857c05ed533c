#pragma once

// Little-endian stream helpers shared by the binary graph/table formats.

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace csamp::wire {

inline void write_u8(std::ostream& out, std::uint8_t v) {
    out.put(static_cast<char>(v));
}

inline void write_u32(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b, 4);
}

inline void write_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b, 8);
}

inline void write_u32_array(std::ostream& out, std::span<const std::uint32_t> a) {
    std::vector<char> buf(a.size() * 4);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < 4; ++j)
            buf[i * 4 + j] = static_cast<char>((a[i] >> (8 * j)) & 0xFF);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

inline void read_bytes(std::istream& in, char* dst, std::size_t count) {
    in.read(dst, static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count)
        throw std::runtime_error("truncated input: expected " +
                                 std::to_string(count) + " more bytes");
}

inline std::uint8_t read_u8(std::istream& in) {
    char b;
    read_bytes(in, &b, 1);
    return static_cast<std::uint8_t>(b);
}

inline std::uint32_t read_u32(std::istream& in) {
    char b[4];
    read_bytes(in, b, 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= std::uint32_t{static_cast<std::uint8_t>(b[i])} << (8 * i);
    return v;
}

inline std::uint64_t read_u64(std::istream& in) {
    char b[8];
    read_bytes(in, b, 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= std::uint64_t{static_cast<std::uint8_t>(b[i])} << (8 * i);
    return v;
}

inline std::vector<std::uint32_t> read_u32_array(std::istream& in, std::uint64_t count) {
    std::vector<char> buf(count * 4);
    read_bytes(in, buf.data(), buf.size());
    std::vector<std::uint32_t> a(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint32_t v = 0;
        for (int j = 0; j < 4; ++j)
            v |= std::uint32_t{static_cast<std::uint8_t>(buf[i * 4 + j])} << (8 * j);
        a[i] = v;
    }
    return a;
}

inline void write_magic(std::ostream& out, const char (&magic)[5]) {
    out.write(magic, 4);
}

inline void expect_magic(std::istream& in, const char (&magic)[5]) {
    char b[4];
    read_bytes(in, b, 4);
    for (int i = 0; i < 4; ++i)
        if (b[i] != magic[i])
            throw std::runtime_error(std::string("bad magic, expected \"") + magic + "\"");
}

}  // namespace csamp::wire
