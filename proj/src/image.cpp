#include "approxdct/image.hpp"

#include <fstream>
#include <stdexcept>

namespace approxdct {

namespace {

// Next header token, skipping whitespace and '#' comment lines.
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) continue;
        tok.push_back(static_cast<char>(c));
        while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#')
            tok.push_back(static_cast<char>(in.get()));
        return tok;
    }
    throw std::runtime_error("truncated PGM header");
}

}  // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open image: " + path.string());
    if (next_token(in) != "P5")
        throw std::runtime_error("not a binary PGM (P5) file: " + path.string());
    const int width = std::stoi(next_token(in));
    const int height = std::stoi(next_token(in));
    const int maxval = std::stoi(next_token(in));
    if (width <= 0 || height <= 0)
        throw std::runtime_error("bad PGM dimensions in " + path.string());
    if (maxval <= 0 || maxval > 255)
        throw std::runtime_error("only 8-bit PGM is supported: " + path.string());
    in.get();  // single whitespace separating header and raster

    GrayImage img(width, height);
    in.read(reinterpret_cast<char*>(img.samples.data()),
            static_cast<std::streamsize>(img.samples.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.samples.size()))
        throw std::runtime_error("truncated PGM raster in " + path.string());
    return img;
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write image: " + path.string());
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.samples.data()),
              static_cast<std::streamsize>(img.samples.size()));
    if (!out) throw std::runtime_error("failed writing image: " + path.string());
}

}  // namespace approxdct
