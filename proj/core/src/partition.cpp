#include "qfock/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "qfock/laurent.hpp"

namespace qfock {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int ColoredPartition::length() const {
  int l = 0;
  for (const auto& p : parts_) l += static_cast<int>(p.size());
  return l;
}

void ColoredPartition::add_part(int color, int part) {
  if (part == 0) return;
  if (part < 0) throw std::invalid_argument("ColoredPartition: negative part");
  auto& p = parts_.at(static_cast<std::size_t>(color));
  p.insert(std::upper_bound(p.begin(), p.end(), part, std::greater<int>()), part);
  total_ += part;
}

bool ColoredPartition::remove_part(int color, int part) {
  auto& p = parts_.at(static_cast<std::size_t>(color));
  auto it = std::find(p.begin(), p.end(), part);
  if (it == p.end()) return false;
  p.erase(it);
  total_ -= part;
  return true;
}

int ColoredPartition::multiplicity(int color, int part) const {
  const auto& p = parts_.at(static_cast<std::size_t>(color));
  return static_cast<int>(std::count(p.begin(), p.end(), part));
}

void ColoredPartition::set_parts(int color, Partition p) {
  auto& slot = parts_.at(static_cast<std::size_t>(color));
  total_ -= std::accumulate(slot.begin(), slot.end(), 0);
  std::sort(p.begin(), p.end(), std::greater<int>());
  if (!p.empty() && p.back() <= 0) throw std::invalid_argument("ColoredPartition: parts must be positive");
  total_ += std::accumulate(p.begin(), p.end(), 0);
  slot = std::move(p);
}

std::vector<ColoredPartition> colored_partitions(int colors, int total) {
  std::vector<ColoredPartition> out;
  if (total < 0 || colors < 1) return out;
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(total) + 1);
  for (int k = 0; k <= total; ++k) by_size[k] = partitions(k);
  ColoredPartition cur(colors);
  std::function<void(int, int)> rec = [&](int color, int remaining) {
    if (color == colors - 1) {
      for (const auto& p : by_size[remaining]) {
        ColoredPartition c = cur;
        c.set_parts(color, p);
        out.push_back(std::move(c));
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& p : by_size[k]) {
        cur.set_parts(color, p);
        rec(color + 1, remaining - k);
      }
    }
    cur.set_parts(color, {});
  };
  rec(0, total);
  return out;
}

std::vector<std::pair<int, int>> multiplicities(const Partition& p) {
  std::vector<std::pair<int, int>> m;
  for (int x : p) {
    if (!m.empty() && m.back().first == x) {
      ++m.back().second;
    } else {
      m.emplace_back(x, 1);
    }
  }
  return m;
}

std::string to_string(const ColoredPartition& p) {
  std::string out = "{";
  bool first = true;
  for (int c = 0; c < p.colors(); ++c) {
    if (p.parts(c).empty()) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(c + 1) + ":[";
    for (std::size_t k = 0; k < p.parts(c).size(); ++k) {
      if (k) out += ",";
      out += std::to_string(p.parts(c)[k]);
    }
    out += "]";
  }
  return out + "}";
}

namespace {

class PartitionParser {
 public:
  PartitionParser(std::string_view s, int colors) : s_(s), colors_(colors) {}

  ColoredPartition parse() {
    ColoredPartition result(colors_);
    std::vector<bool> seen(static_cast<std::size_t>(colors_), false);
    expect('{');
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      finish();
      return result;
    }
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      const int color = number();
      if (color < 1 || color > colors_) throw ParseError("color out of range", at);
      if (seen[color - 1]) throw ParseError("color listed twice", at);
      seen[color - 1] = true;
      expect(':');
      expect('[');
      Partition parts;
      skip_ws();
      if (peek() != ']') {
        while (true) {
          skip_ws();
          const std::size_t part_at = pos_;
          const int part = number();
          if (part < 1) throw ParseError("parts must be positive", part_at);
          parts.push_back(part);
          skip_ws();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect(']');
      result.set_parts(color - 1, std::move(parts));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      break;
    }
    finish();
    return result;
  }

 private:
  void finish() {
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing characters", pos_);
  }
  int number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::string_view s_;
  int colors_;
  std::size_t pos_ = 0;
};

}  // namespace

ColoredPartition parse_colored_partition(std::string_view text, int colors) {
  return PartitionParser(text, colors).parse();
}

}  // namespace qfock
