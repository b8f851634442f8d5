#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace voisearch_cli {

// Budget list grammar: "<n>", "<a>,<b>,...", or "<start>:<end>:x<factor>"
// for a multiplicative sweep that stops at the last value not above <end>.
inline std::vector<std::uint64_t> parse_budgets(std::string_view text) {
  auto number = [](std::string_view s) {
    std::uint64_t v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end) throw std::invalid_argument("bad budget '" + std::string(s) + "'");
    return v;
  };

  std::vector<std::uint64_t> out;
  if (const auto c1 = text.find(':'); c1 != std::string_view::npos) {
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || c2 + 1 >= text.size() || text[c2 + 1] != 'x') {
      throw std::invalid_argument("sweep must look like start:end:x<factor>");
    }
    const std::uint64_t start = number(text.substr(0, c1));
    const std::uint64_t end = number(text.substr(c1 + 1, c2 - c1 - 1));
    const std::uint64_t factor = number(text.substr(c2 + 2));
    if (start == 0 || factor < 2 || end < start) throw std::invalid_argument("sweep needs 0 < start <= end and factor >= 2");
    for (std::uint64_t b = start; b <= end; b *= factor) {
      out.push_back(b);
      if (b > end / factor) break;
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    out.push_back(number(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace voisearch_cli
