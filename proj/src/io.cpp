#include "ndscape/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "ndscape/errors.hpp"

namespace ndl {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line without its terminator (and without a trailing '\r').
  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::string expect(std::string_view what) {
    std::string line;
    if (!next(line)) throw ParseError(number_ + 1, "unexpected end of input, expected " + std::string(what));
    return line;
  }

  std::size_t line_number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <class T>
bool parse_number(std::string_view text, T& value) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end && !text.empty();
}

Landscape read_ndl_body(LineReader& reader) {
  const std::string header = reader.expect("NDL header");
  const std::size_t header_line = reader.line_number();
  std::istringstream hs(header);
  std::string magic;
  int version = 0;
  int n_bits = 0;
  std::string extra;
  if (!(hs >> magic >> version >> n_bits) || magic != "NDL" || (hs >> extra))
    throw ParseError(header_line, "expected header 'NDL 1 <N>'");
  if (version != 1) throw ParseError(header_line, "unsupported NDL version " + std::to_string(version));
  if (n_bits < 1 || n_bits > kMaxStoredBits)
    throw ParseError(header_line, "landscape width " + std::to_string(n_bits) + " out of range");

  std::vector<double> table(std::size_t{1} << n_bits);
  std::string line;
  for (double& f : table) {
    line = reader.expect("fitness value");
    if (!parse_number(line, f) || !std::isfinite(f))
      throw ParseError(reader.line_number(), "malformed fitness value '" + line + "'");
  }
  return Landscape(n_bits, std::move(table));
}

void expect_end(LineReader& reader) {
  std::string line;
  while (reader.next(line))
    if (!trim(line).empty()) throw ParseError(reader.line_number(), "unexpected trailing content");
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_ndl(std::ostream& out, const Landscape& landscape) {
  std::string text = "NDL 1 " + std::to_string(landscape.n_bits()) + "\n";
  text.reserve(landscape.size() * 20);
  char buf[64];
  for (double f : landscape.table()) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, f);
    text.append(buf, ptr);
    text.push_back('\n');
  }
  out << text;
}

Landscape read_ndl(std::istream& in) {
  LineReader reader(in);
  Landscape l = read_ndl_body(reader);
  expect_end(reader);
  return l;
}

void write_xndl(std::ostream& out, const ExtendedLandscape& landscape) {
  out << "XNDL 1 " << landscape.components().size() << '\n';
  for (const auto& c : landscape.components()) {
    out << (c.size() + 1) << '\n';
    write_ndl(out, c);
  }
}

ExtendedLandscape read_xndl(std::istream& in) {
  LineReader reader(in);
  const std::string header = reader.expect("XNDL header");
  std::istringstream hs(header);
  std::string magic;
  int version = 0;
  long long count = 0;
  std::string extra;
  if (!(hs >> magic >> version >> count) || magic != "XNDL" || (hs >> extra))
    throw ParseError(1, "expected header 'XNDL 1 <k>'");
  if (version != 1) throw ParseError(1, "unsupported XNDL version " + std::to_string(version));
  if (count < 1) throw ParseError(1, "an extended landscape needs at least one component");

  std::vector<Landscape> parts;
  for (long long k = 0; k < count; ++k) {
    const std::string count_line = reader.expect("section line count");
    std::size_t lines = 0;
    if (!parse_number(count_line, lines))
      throw ParseError(reader.line_number(), "malformed section line count '" + count_line + "'");
    const std::size_t first = reader.line_number() + 1;
    Landscape part = read_ndl_body(reader);
    if (part.size() + 1 != lines)
      throw ParseError(first, "section declares " + std::to_string(lines) + " lines but holds " +
                                  std::to_string(part.size() + 1));
    parts.push_back(std::move(part));
  }
  expect_end(reader);
  return ExtendedLandscape(std::move(parts));
}

void write_distribution_csv(std::ostream& out, const DegreeDistribution& d) {
  std::string text = "degree,weight\n";
  for (std::size_t k = 0; k < d.size(); ++k) text += std::to_string(k) + "," + format_double(d[k]) + "\n";
  out << text;
}

DegreeDistribution read_distribution_csv(std::istream& in) {
  LineReader reader(in);
  std::string line;
  bool header = false;
  std::vector<double> weights;
  while (reader.next(line)) {
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    if (!header) {
      if (view != "degree,weight") throw ParseError(reader.line_number(), "expected header 'degree,weight'");
      header = true;
      continue;
    }
    const auto cells = split(view, ',');
    std::size_t degree = 0;
    double weight = 0.0;
    if (cells.size() != 2 || !parse_number(cells[0], degree) || !parse_number(cells[1], weight))
      throw ParseError(reader.line_number(), "expected '<degree>,<weight>'");
    if (degree != weights.size())
      throw ParseError(reader.line_number(), "degree rows must run 0, 1, 2, ... without gaps");
    if (!std::isfinite(weight) || weight < 0.0)
      throw ParseError(reader.line_number(), "weight must be finite and non-negative");
    weights.push_back(weight);
  }
  if (!header) throw ParseError(reader.line_number() + 1, "missing header 'degree,weight'");
  if (weights.empty()) throw ParseError(reader.line_number() + 1, "distribution has no rows");
  return DegreeDistribution(std::move(weights));
}

Landscape load_ndl(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_ndl(in);
}

void save_ndl(const std::filesystem::path& path, const Landscape& landscape) {
  auto out = open_out(path);
  write_ndl(out, landscape);
  finish_write(out, path);
}

ExtendedLandscape load_xndl(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_xndl(in);
}

void save_xndl(const std::filesystem::path& path, const ExtendedLandscape& landscape) {
  auto out = open_out(path);
  write_xndl(out, landscape);
  finish_write(out, path);
}

DegreeDistribution load_distribution_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_distribution_csv(in);
}

void save_distribution_csv(const std::filesystem::path& path, const DegreeDistribution& d) {
  auto out = open_out(path);
  write_distribution_csv(out, d);
  finish_write(out, path);
}

}  // namespace ndl
