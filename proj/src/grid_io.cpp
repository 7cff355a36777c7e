#include "ics/grid_io.hpp"

#include "ics/errors.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ics {

namespace {

static_assert(std::endian::native == std::endian::little,
              "NDGRID I/O assumes a little-endian host");
static_assert(std::numeric_limits<double>::is_iec559);

constexpr std::array<char, 4> kMagic = {'N', 'D', 'G', '1'};

template <typename T>
void put(std::ostream& out, T v) {
    std::array<char, sizeof(T)> buf{};
    std::memcpy(buf.data(), &v, sizeof(T));
    out.write(buf.data(), buf.size());
}

template <typename T>
T get(std::istream& in) {
    std::array<char, sizeof(T)> buf{};
    if (!in.read(buf.data(), buf.size())) throw InvalidDataError("truncated NDGRID stream");
    T v;
    std::memcpy(&v, buf.data(), sizeof(T));
    return v;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode) {
    std::ifstream in(path, mode);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
    std::ofstream out(path, mode | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

}  // namespace

void write_ndgrid(std::ostream& out, const AmplitudeField& field) {
    field.validate();
    out.write(kMagic.data(), kMagic.size());
    put<std::uint8_t>(out, static_cast<std::uint8_t>(field.ndim()));
    for (std::size_t d : field.dims) {
        if (d > std::numeric_limits<std::uint32_t>::max()) {
            throw InvalidDataError("axis length exceeds u32");
        }
        put<std::uint32_t>(out, static_cast<std::uint32_t>(d));
    }
    for (double s : field.spacing) put<double>(out, s);
    out.write(reinterpret_cast<const char*>(field.values.data()),
              static_cast<std::streamsize>(field.values.size() * sizeof(double)));
}

AmplitudeField read_ndgrid(std::istream& in) {
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
        throw InvalidDataError("not an NDGRID stream (bad magic)");
    }
    const auto ndim = get<std::uint8_t>(in);
    if (ndim == 0 || ndim > kMaxDims) throw InvalidDataError("NDGRID ndim must be 1..4");

    AmplitudeField f;
    std::size_t n = 1;
    for (std::uint8_t a = 0; a < ndim; ++a) {
        const auto d = get<std::uint32_t>(in);
        if (d == 0) throw InvalidDataError("NDGRID axis of length 0");
        f.dims.push_back(d);
        n *= d;
    }
    for (std::uint8_t a = 0; a < ndim; ++a) f.spacing.push_back(get<double>(in));
    f.values.resize(n);
    if (!in.read(reinterpret_cast<char*>(f.values.data()),
                 static_cast<std::streamsize>(n * sizeof(double)))) {
        throw InvalidDataError("truncated NDGRID value block");
    }
    f.validate();
    return f;
}

void write_ndgrid_file(const std::filesystem::path& path, const AmplitudeField& field) {
    auto out = open_out(path, std::ios::binary);
    write_ndgrid(out, field);
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

AmplitudeField read_ndgrid_file(const std::filesystem::path& path) {
    auto in = open_in(path, std::ios::binary);
    return read_ndgrid(in);
}

void write_csv(std::ostream& out, const AmplitudeField& field) {
    field.validate();
    if (field.ndim() != 2) throw InvalidDataError("CSV output requires a 2D field");
    const std::size_t rows = field.dims[0];
    const std::size_t cols = field.dims[1];
    std::array<char, 32> buf{};
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c) out.put(',');
            auto res = std::to_chars(buf.data(), buf.data() + buf.size(),
                                     field.values[r * cols + c]);
            out.write(buf.data(), res.ptr - buf.data());
        }
        out.put('\n');
    }
}

AmplitudeField read_csv(std::istream& in) {
    AmplitudeField f;
    std::string line;
    std::size_t cols = 0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t count = 0;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) comma = line.size();
            std::string_view cell(line.data() + pos, comma - pos);
            while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
            while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
            double v = 0.0;
            auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
                throw InvalidDataError("CSV row " + std::to_string(rows + 1) +
                                       ": bad number '" + std::string(cell) + "'");
            }
            f.values.push_back(v);
            ++count;
            pos = comma + 1;
        }
        if (rows == 0) {
            cols = count;
        } else if (count != cols) {
            throw InvalidDataError("CSV row " + std::to_string(rows + 1) + " has " +
                                   std::to_string(count) + " columns, expected " +
                                   std::to_string(cols));
        }
        ++rows;
    }
    if (rows == 0) throw InvalidDataError("empty field");
    f.dims = {rows, cols};
    f.spacing = {1.0, 1.0};
    return f;
}

void write_csv_file(const std::filesystem::path& path, const AmplitudeField& field) {
    auto out = open_out(path, {});
    write_csv(out, field);
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

AmplitudeField read_csv_file(const std::filesystem::path& path) {
    auto in = open_in(path, {});
    return read_csv(in);
}

AmplitudeField read_field_file(const std::filesystem::path& path) {
    if (path.extension() == ".csv") return read_csv_file(path);
    return read_ndgrid_file(path);
}

void write_field_file(const std::filesystem::path& path, const AmplitudeField& field) {
    if (path.extension() == ".csv") {
        write_csv_file(path, field);
    } else {
        write_ndgrid_file(path, field);
    }
}

}  // namespace ics
