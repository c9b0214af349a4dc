#include <gcoh/normal_form.hpp>

#include <cctype>
#include <stdexcept>

namespace gcoh {

namespace scalar {

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("not an integer: '" + text + "'");
  // mpz_class rejects a leading '+'
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace scalar

std::vector<std::vector<Index>> lex_subsets(Index k, Index n) {
  std::vector<std::vector<Index>> out;
  if (n < 0 || n > k) return out;
  std::vector<Index> cur(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    Index i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == k - n + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < n; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace gcoh
