#include "topo/space_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "topo/error.hpp"

namespace topo {

namespace {

std::string_view strip(std::string_view sv) {
  while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
  while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back()))) sv.remove_suffix(1);
  return sv;
}

std::optional<long> parse_int(std::string_view token) {
  long value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view sv) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < sv.size()) {
    while (i < sv.size() && std::isspace(static_cast<unsigned char>(sv[i]))) ++i;
    std::size_t j = i;
    while (j < sv.size() && !std::isspace(static_cast<unsigned char>(sv[j]))) ++j;
    if (j > i) out.push_back(sv.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Space parse_space(std::string_view text) {
  std::optional<int> n;
  std::vector<std::optional<PointSet>> table;
  std::vector<std::optional<std::string>> labels;
  bool any_label = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t last_line = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = strip(raw);
    if (line.empty()) continue;
    last_line = line_no;

    if (!n) {
      auto tokens = split_ws(line);
      if (tokens.size() != 2 || tokens[0] != "points") {
        throw SyntaxError(line_no, "expected \"points <n>\"");
      }
      auto val = parse_int(tokens[1]);
      if (!val || *val < 0 || *val > PointSet::kMaxUniverse) {
        throw SyntaxError(line_no, "point count must be an integer in [0, " +
                                       std::to_string(PointSet::kMaxUniverse) + "]");
      }
      n = static_cast<int>(*val);
      table.assign(static_cast<std::size_t>(*n), std::nullopt);
      labels.assign(static_cast<std::size_t>(*n), std::nullopt);
      continue;
    }

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw SyntaxError(line_no, "expected \"nbhd <i>:\" or \"label <i>:\"");
    }
    auto head = split_ws(line.substr(0, colon));
    if (head.size() != 2) throw SyntaxError(line_no, "expected \"<keyword> <i>:\"");
    auto idx = parse_int(head[1]);
    if (!idx || *idx < 0 || *idx >= *n) {
      throw SyntaxError(line_no, "point index out of range");
    }
    const auto i = static_cast<std::size_t>(*idx);
    const std::string_view rest = line.substr(colon + 1);

    if (head[0] == "nbhd") {
      if (table[i]) throw SyntaxError(line_no, "duplicate nbhd line for point " + std::string(head[1]));
      PointSet u(*n);
      long prev = -1;
      for (std::string_view tok : split_ws(rest)) {
        auto member = parse_int(tok);
        if (!member || *member < 0 || *member >= *n) {
          throw SyntaxError(line_no, "neighborhood member out of range");
        }
        if (*member <= prev) throw SyntaxError(line_no, "members must be sorted strictly ascending");
        prev = *member;
        u = u.with(static_cast<int>(*member));
      }
      table[i] = u;
    } else if (head[0] == "label") {
      if (labels[i]) throw SyntaxError(line_no, "duplicate label line for point " + std::string(head[1]));
      labels[i] = std::string(strip(rest));
      any_label = true;
    } else {
      throw SyntaxError(line_no, "unknown keyword \"" + std::string(head[0]) + "\"");
    }
  }

  if (!n) throw SyntaxError(last_line == 0 ? 1 : last_line, "missing \"points <n>\" line");
  std::vector<PointSet> final_table;
  final_table.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) {
      throw SyntaxError(last_line, "missing nbhd line for point " + std::to_string(i));
    }
    final_table.push_back(*table[i]);
  }
  std::optional<std::vector<std::string>> final_labels;
  if (any_label) {
    final_labels.emplace();
    final_labels->reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      final_labels->push_back(labels[i] ? *labels[i] : std::to_string(i));
    }
  }

  try {
    return new_space(std::move(final_table), std::move(final_labels));
  } catch (const Error& err) {
    throw ValidationError(err.what());
  }
}

std::string serialize_space(const Space& s) {
  std::ostringstream out;
  out << "points " << s.size() << "\n";
  for (int x = 0; x < s.size(); ++x) {
    out << "nbhd " << x << ":";
    for (int y : s.min_nbhd(x)) out << ' ' << y;
    out << "\n";
  }
  if (s.has_labels()) {
    for (int x = 0; x < s.size(); ++x) out << "label " << x << ": " << s.label_of(x) << "\n";
  }
  return out.str();
}

}  // namespace topo
