// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fracwave {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

// Writes a CSV file: one header row then data rows; throws on I/O failure.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

std::string sha256_hex(std::string_view bytes);
std::string sha256_hex_of_file(const std::filesystem::path& path);

std::string iso8601_utc_now();

}  // namespace fracwave
