#include "clustcmp/clusters_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace clustcmp {

namespace {

[[noreturn]] void fail(errc code, const std::string& source, std::int64_t line,
                       const std::string& what) {
  std::string msg = source + ": " + std::string(errc_name(code)) + " at line " +
                    std::to_string(line) + ": " + what;
  throw Error(code, std::move(msg), line);
}

std::int64_t parse_int(std::string_view token, const std::string& source, std::int64_t line) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(errc::parse_error, source, line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Clustering read_clusters(std::istream& in, const std::string& source_name,
                         std::optional<std::int64_t> n_override) {
  std::vector<std::vector<object_id>> raw;
  std::vector<std::int64_t> cluster_lines;
  std::optional<std::int64_t> header_n;

  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#') {
      std::string_view rest(line.data() + begin, line.size() - begin);
      if (rest.rfind("#n=", 0) == 0) {
        if (header_n) {
          fail(errc::parse_error, source_name, line_no, "duplicate #n= header");
        }
        const std::int64_t n = parse_int(rest.substr(3), source_name, line_no);
        if (n < 0) {
          fail(errc::parse_error, source_name, line_no, "universe size must be non-negative");
        }
        header_n = n;
      }
      continue;
    }

    std::vector<object_id> members;
    std::string_view view(line);
    std::size_t pos = begin;
    while (pos < view.size()) {
      std::size_t end = view.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = view.size();
      if (end > pos) {
        const std::int64_t id = parse_int(view.substr(pos, end - pos), source_name, line_no);
        if (id < 0) {
          fail(errc::out_of_range_id, source_name, line_no,
               "object ids must be non-negative, got " + std::to_string(id));
        }
        members.push_back(static_cast<object_id>(id));
      }
      pos = view.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) break;
    }
    raw.push_back(std::move(members));
    cluster_lines.push_back(line_no);
  }

  if (!n_override && !header_n) {
    throw Error(errc::parse_error,
                source_name + ": ParseError: universe size not declared (no #n= header; pass --n)");
  }
  const std::int64_t n = n_override ? *n_override : *header_n;

  try {
    return Clustering::validate(std::move(raw), Universe{n});
  } catch (const Error& e) {
    if (e.index() >= 0 && static_cast<std::size_t>(e.index()) < cluster_lines.size()) {
      const std::int64_t at = cluster_lines[static_cast<std::size_t>(e.index())];
      throw Error(e.code(), source_name + ": " + std::string(errc_name(e.code())) +
                                " at line " + std::to_string(at) + ": " + e.what(),
                  at);
    }
    throw Error(e.code(), source_name + ": " + e.what());
  }
}

Clustering read_clusters_file(const std::filesystem::path& path,
                              std::optional<std::int64_t> n_override) {
  std::ifstream in(path);
  if (!in) {
    throw Error(errc::parse_error, path.string() + ": cannot open file");
  }
  return read_clusters(in, path.string(), n_override);
}

void write_clusters(std::ostream& out, const Clustering& c) {
  out << "#n=" << c.num_objects() << "\n";
  for (const auto& cluster : c.clusters()) {
    for (std::size_t j = 0; j < cluster.size(); ++j) {
      if (j > 0) out << ' ';
      out << cluster[j];
    }
    out << "\n";
  }
}

void write_clusters_file(const std::filesystem::path& path, const Clustering& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(errc::parse_error, path.string() + ": cannot open file for writing");
  }
  write_clusters(out, c);
}

std::string serialize_clusters(const Clustering& c) {
  std::ostringstream out;
  write_clusters(out, c);
  return out.str();
}

}  // namespace clustcmp
