#pragma once

#include <filesystem>
#include <vector>

#include "modnet/matrix.hpp"

namespace modnet {

/// Grayscale raster with values normalized to [0,1] (pixel / maxval).
struct GrayImage {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> pixels;  ///< row-major

    double at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
};

/// Reads a portable graymap, plain (P2) or binary (P5), maxval <= 65535.
/// 16-bit P5 samples are big-endian per the netpbm convention.
GrayImage read_pgm(const std::filesystem::path& path);

/// Area-average resampling to rows x cols. Each target pixel is the
/// area-weighted mean of the source rectangle it covers; for integral
/// ratios this reduces to plain block means.
GrayImage area_resample(const GrayImage& src, std::size_t rows, std::size_t cols);

/// Writes a matrix of scores as a plain (P2) graymap, min-max scaled to
/// 0..255. A constant matrix maps to all zeros.
void write_pgm_scaled(const Matrix& values, const std::filesystem::path& path);

}  // namespace modnet
