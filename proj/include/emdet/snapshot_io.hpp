#pragma once

#include <string>

#include "emdet/array_signal.hpp"

namespace emdet {

// Snapshot container format, little-endian:
//   bytes 0..7   magic "EMSNAP01"
//   bytes 8..11  u32 N (antennas)
//   bytes 12..15 u32 L (snapshots)
//   then L columns of N samples, column-major, each sample (f64 re, f64 im)
inline constexpr char kSnapshotMagic[8] = {'E', 'M', 'S', 'N', 'A', 'P', '0', '1'};

void write_snapshots(const std::string& path, const SnapshotMatrix& y);

// Throws std::runtime_error on a missing file, magic mismatch, size mismatch
// or truncation.
SnapshotMatrix read_snapshots(const std::string& path);

}  // namespace emdet
