#pragma once

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gauss/error.hpp"
#include "gauss/group.hpp"
#include "gauss/report.hpp"

namespace gauss {

enum class SourceKind { CayleyTable, PermutationGenerators };

struct CatalogueEntry {
  std::string id;
  SourceKind source;
  Group group;
};

enum class ReportFormat { Json, Csv };

namespace detail {

struct Token {
  std::uint64_t value;
  std::size_t column;
};

/// Splits `text` into lines; a single trailing newline does not open a new line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    std::uint64_t v = 0;
    const auto* first = line.data() + i;
    const auto* last = line.data() + j;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError(line_no, i + 1, "expected a non-negative integer, got '" + std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back({v, i + 1});
    i = j;
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

/// First line: one integer. Returns it with the remaining lines.
inline std::uint64_t header_value(const std::vector<std::string_view>& lines, const char* what) {
  if (lines.empty()) throw ParseError(1, 1, std::string("missing ") + what);
  const auto head = tokenize(lines[0], 1);
  if (head.size() != 1) throw ParseError(1, head.empty() ? 1 : head[1].column, std::string("expected a single ") + what);
  return head[0].value;
}

}  // namespace detail

/// Parses the Cayley-table text format and fully validates the result.
inline Group parse_cayley_table(std::string_view text, const Limits& limits = {}) {
  const auto lines = detail::split_lines(text);
  const auto n = detail::header_value(lines, "table size");
  if (n == 0) throw ParseError(1, 1, "table size must be positive");
  if (n > limits.max_order) throw Error(ErrorKind::OrderOverflow, "table size " + std::to_string(n) + " exceeds max order");
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t line_no = r + 2;
    if (line_no > lines.size()) throw ParseError(line_no, 1, "missing row " + std::to_string(r));
    const auto row = detail::tokenize(lines[r + 1], line_no);
    if (row.size() != n) {
      const std::size_t col = row.size() > n ? row[n].column : lines[r + 1].size() + 1;
      throw ParseError(line_no, col, "expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
    }
    for (const auto& t : row) {
      if (t.value >= n) throw ParseError(line_no, t.column, "entry " + std::to_string(t.value) + " out of range");
      table.push_back(static_cast<Element>(t.value));
    }
  }
  for (std::size_t extra = n + 1; extra < lines.size(); ++extra) {
    if (!detail::tokenize(lines[extra], extra + 1).empty()) throw ParseError(extra + 1, 1, "unexpected content after table");
  }
  return Group::from_table(n, std::move(table), Group::Check::Full);
}

inline Group read_cayley_table(const std::filesystem::path& path, const Limits& limits = {}) {
  return parse_cayley_table(detail::read_file(path), limits);
}

inline std::string format_cayley_table(const Group& g) {
  std::string out = std::to_string(g.order()) + "\n";
  const auto n = g.order();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) out += ' ';
      out += std::to_string(g.mul(static_cast<Element>(r), static_cast<Element>(c)));
    }
    out += '\n';
  }
  return out;
}

inline void write_cayley_table(const Group& g, const std::filesystem::path& path) {
  detail::write_file(path, format_cayley_table(g));
}

/// Closes permutation generators under composition. The product a*b applies
/// a first, then b. Elements are numbered breadth-first from the identity.
inline Group parse_permutation_generators(std::string_view text, const Limits& limits = {}) {
  using Perm = std::vector<std::uint32_t>;
  const auto lines = detail::split_lines(text);
  const auto d = detail::header_value(lines, "degree");
  if (d == 0) throw ParseError(1, 1, "degree must be positive");

  std::vector<Perm> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = detail::tokenize(lines[i], i + 1);
    if (toks.empty()) continue;
    if (toks.size() != d) {
      throw ParseError(i + 1, toks.size() > d ? toks[d].column : lines[i].size() + 1,
                       "expected " + std::to_string(d) + " images, got " + std::to_string(toks.size()));
    }
    Perm p(d);
    std::vector<bool> seen(d, false);
    for (std::size_t k = 0; k < d; ++k) {
      const auto v = toks[k].value;
      if (v >= d || seen[v]) {
        throw Error(ErrorKind::NotAPermutation, "line " + std::to_string(i + 1) + ": image " + std::to_string(v) +
                                                    (v >= d ? " out of range" : " repeated"));
      }
      seen[v] = true;
      p[k] = static_cast<std::uint32_t>(v);
    }
    gens.push_back(std::move(p));
  }

  struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto x : p) h = (h ^ x) * 1099511628211ULL;
      return h;
    }
  };
  auto compose = [d](const Perm& a, const Perm& b) {
    Perm c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = b[a[i]];
    return c;
  };

  Perm id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::vector<Perm> elems{id};
  std::unordered_map<Perm, Element, PermHash> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : gens) {
      auto next = compose(elems[head], s);
      if (index.count(next)) continue;
      if (elems.size() >= limits.max_order) {
        throw Error(ErrorKind::OrderOverflow, "generated group exceeds max order " + std::to_string(limits.max_order));
      }
      index.emplace(next, static_cast<Element>(elems.size()));
      elems.push_back(std::move(next));
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  }
  return Group::from_table(n, std::move(table), Group::Check::Trusted);
}

inline Group read_permutation_generators(const std::filesystem::path& path, const Limits& limits = {}) {
  return parse_permutation_generators(detail::read_file(path), limits);
}

/// Reads every *.cayley and *.perm file in `dir`; ids are file stems, sorted.
inline std::vector<CatalogueEntry> read_catalogue(const std::filesystem::path& dir, const Limits& limits = {}) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw Error(ErrorKind::IoError, dir.string() + " is not a directory");
  std::map<std::string, std::pair<SourceKind, std::filesystem::path>> found;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (!item.is_regular_file()) continue;
    const auto ext = item.path().extension().string();
    SourceKind kind;
    if (ext == ".cayley") {
      kind = SourceKind::CayleyTable;
    } else if (ext == ".perm") {
      kind = SourceKind::PermutationGenerators;
    } else {
      continue;
    }
    const auto id = item.path().stem().string();
    if (!found.emplace(id, std::make_pair(kind, item.path())).second) {
      throw Error(ErrorKind::InvalidParameter, "duplicate catalogue id '" + id + "'");
    }
  }
  std::vector<CatalogueEntry> out;
  for (const auto& [id, src] : found) {
    auto group = src.first == SourceKind::CayleyTable ? read_cayley_table(src.second, limits)
                                                      : read_permutation_generators(src.second, limits);
    out.push_back({id, src.first, std::move(group)});
  }
  return out;
}

inline void write_report(const GaussSummary& s, const std::filesystem::path& path, ReportFormat format) {
  if (format == ReportFormat::Csv) throw Error(ErrorKind::InvalidParameter, "CSV output is only defined for scan results");
  detail::write_file(path, render_json(s));
}

inline void write_report(const SuiteResult& r, const std::filesystem::path& path, ReportFormat format) {
  if (format == ReportFormat::Csv) throw Error(ErrorKind::InvalidParameter, "CSV output is only defined for scan results");
  detail::write_file(path, render_json(r));
}

inline void write_report(const ScanResult& r, const std::filesystem::path& path, ReportFormat format) {
  detail::write_file(path, format == ReportFormat::Csv ? render_csv(r) : render_json(r));
}

}  // namespace gauss
