#pragma once

// Text formats.
//
//   .ndl   line 1 "NDL 1 <N>", then 2^N lines; line j+2 holds the fitness of
//          genotype j in shortest round-trip decimal form.
//   .xndl  line 1 "XNDL 1 <k>", then k sections; each section is a line with
//          its line count followed by that many lines of an embedded .ndl.
//          Component 0 occupies the lowest genotype bits.
//   .csv   distribution: optional leading '#' comment lines, header
//          "degree,weight", then one row per degree 0..N.
//
// Readers throw ParseError carrying the 1-based line number of the problem.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ndscape/core.hpp"
#include "ndscape/extension.hpp"

namespace ndl {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

void write_ndl(std::ostream& out, const Landscape& landscape);
Landscape read_ndl(std::istream& in);

void write_xndl(std::ostream& out, const ExtendedLandscape& landscape);
ExtendedLandscape read_xndl(std::istream& in);

void write_distribution_csv(std::ostream& out, const DegreeDistribution& d);
DegreeDistribution read_distribution_csv(std::istream& in);

// File helpers; throw IoError when the file cannot be opened or written.
Landscape load_ndl(const std::filesystem::path& path);
void save_ndl(const std::filesystem::path& path, const Landscape& landscape);
ExtendedLandscape load_xndl(const std::filesystem::path& path);
void save_xndl(const std::filesystem::path& path, const ExtendedLandscape& landscape);
DegreeDistribution load_distribution_csv(const std::filesystem::path& path);
void save_distribution_csv(const std::filesystem::path& path, const DegreeDistribution& d);

}  // namespace ndl
