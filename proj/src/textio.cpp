#include "popboards/textio.hpp"

#include <cctype>
#include <charconv>

namespace popboards {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view what) {
  token = trim(token);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(Errc::ParseError, "bad integer '" + std::string(token) + "' in " + std::string(what));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(Errc::ParseError, "empty integer list");
  std::vector<int> out;
  for (std::string_view token : split(text, ',')) out.push_back(parse_int(token, "list"));
  return out;
}

FerrersBoard parse_board(std::string_view text) {
  return FerrersBoard(parse_int_list(text));
}

ClawFamily parse_family(std::string_view text) {
  const auto fields = parse_int_list(text);
  if (fields.size() != 4) {
    fail(Errc::ParseError, "family format is m,k,d,a (got " + std::to_string(fields.size()) +
                               " fields)");
  }
  return ClawFamily(fields[0], fields[1], fields[2], fields[3]);
}

Pop parse_pop(std::string_view text) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  const std::string_view head = colon == std::string_view::npos ? text : text.substr(0, colon);
  const int size = parse_int(head, "pop size");
  std::vector<std::pair<int, int>> relations;
  if (colon != std::string_view::npos) {
    const std::string_view rest = trim(text.substr(colon + 1));
    if (!rest.empty()) {
      for (std::string_view token : split(rest, ',')) {
        token = trim(token);
        const std::size_t gt = token.find('>');
        if (gt == std::string_view::npos) {
          fail(Errc::ParseError, "relation '" + std::string(token) + "' needs the form x>y");
        }
        relations.emplace_back(parse_int(token.substr(0, gt), "relation"),
                               parse_int(token.substr(gt + 1), "relation"));
      }
    }
  }
  return Pop(size, relations);
}

std::string format_int_list(std::span<const int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string format_family(const ClawFamily& fam) {
  const int fields[] = {fam.m, fam.k, fam.d, fam.a};
  return format_int_list(fields);
}

std::string format_pop(const Pop& pop) {
  std::string out = std::to_string(pop.size()) + ":";
  bool first = true;
  for (const auto& [x, y] : pop.relations()) {
    out += first ? " " : ", ";
    out += std::to_string(x) + ">" + std::to_string(y);
    first = false;
  }
  return out;
}

std::string format_pattern(std::span<const int> pattern) {
  if (pattern.size() <= 9) {
    std::string out;
    for (int p : pattern) out += static_cast<char>('0' + p);
    return out;
  }
  return format_int_list(pattern);
}

}  // namespace popboards
