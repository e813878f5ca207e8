#include "jblocks/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "jblocks/error.hpp"

namespace jblocks {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
    throw MathError(ErrorKind::InvalidArgument, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t i = 0;
  auto read_number = [&](unsigned& out) {
    std::size_t start = i;
    unsigned long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<unsigned long>(text[i] - '0');
      if (value > 1'000'000) throw MathError(ErrorKind::ParseError, "part too large in '" + std::string(text) + "'");
      ++i;
    }
    if (i == start) return false;
    out = static_cast<unsigned>(value);
    return true;
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '(' || ch == ')' || ch == '[' ||
        ch == ']') {
      ++i;
      continue;
    }
    unsigned part = 0;
    if (!read_number(part))
      throw MathError(ErrorKind::ParseError, "unexpected '" + std::string(1, ch) + "' in partition '" +
                                                 std::string(text) + "'");
    unsigned count = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (!read_number(count))
        throw MathError(ErrorKind::ParseError, "missing exponent in partition '" + std::string(text) + "'");
    }
    if (part == 0) throw MathError(ErrorKind::ParseError, "zero part in partition '" + std::string(text) + "'");
    parts.insert(parts.end(), count, part);
  }
  return Partition(std::move(parts));
}

unsigned Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

unsigned Partition::multiplicity(unsigned part) const noexcept {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<std::pair<unsigned, unsigned>> Partition::grouped() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

Partition Partition::conjugate() const {
  std::vector<unsigned> conj(largest(), 0);
  for (unsigned p : parts_)
    for (unsigned k = 0; k < p; ++k) ++conj[k];
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string s = "(";
  bool first = true;
  for (auto [part, count] : grouped()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(part);
    if (count > 1) s += "^" + std::to_string(count);
  }
  return s + ")";
}

Partition partition_union(const Partition& a, const Partition& b) {
  std::vector<unsigned> parts = a.parts();
  parts.insert(parts.end(), b.begin(), b.end());
  return Partition(std::move(parts));
}

bool contains(const Partition& a, const Partition& b) {
  std::map<unsigned, int> count;
  for (unsigned p : a) ++count[p];
  for (unsigned p : b)
    if (--count[p] < 0) return false;
  return true;
}

Partition partition_difference(const Partition& a, const Partition& b) {
  std::map<unsigned, int> count;
  for (unsigned p : a) ++count[p];
  for (unsigned p : b)
    if (--count[p] < 0)
      throw MathError(ErrorKind::NotContained, b.to_string() + " is not contained in " + a.to_string());
  std::vector<unsigned> parts;
  for (auto [part, c] : count) parts.insert(parts.end(), static_cast<std::size_t>(c), part);
  return Partition(std::move(parts));
}

}  // namespace jblocks
