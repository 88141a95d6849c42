#include "gkp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gkp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
      throw argument_error("not weakly decreasing nonnegative parts");
  }
}

Partition Partition::parse(const std::string& text) {
  if (text.empty() || text == "[]") return Partition();
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw argument_error("bad partition literal: " + text);
    }
    if (used != item.size())
      throw argument_error("bad partition literal: " + text);
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.parts_.size(); ++i)
    if (parts_[i] < mu.parts_[i]) return false;
  return true;
}

bool Partition::fits_box(int rows, int cols) const {
  return static_cast<int>(length()) <= rows && part(1) <= cols;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "[]";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

PositionSeq::PositionSeq(std::vector<int> positions, int m)
    : pos(std::move(positions)), chain_length(m) {
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] < 1 || pos[i] > m || (i && pos[i] <= pos[i - 1]))
      throw argument_error("positions must be strictly increasing in [1, m]");
  }
}

bool PositionSeq::occupied(int site) const {
  return std::binary_search(pos.begin(), pos.end(), site);
}

std::string PositionSeq::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pos[i]);
  }
  return s + ")_" + std::to_string(chain_length);
}

bool interlaces(const Partition& lambda, const Partition& mu) {
  const std::size_t l = mu.length();
  if (lambda.length() > l + 1) return false;
  for (std::size_t j = 1; j <= l; ++j) {
    if (lambda.part(j) < mu.part(j)) return false;
    if (mu.part(j) < lambda.part(j + 1)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> removable_boxes(const Partition& mu) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > mu.part(i + 1))
      out.push_back({static_cast<int>(i), mu.part(i)});
  return out;
}

SkewStats skew_stats(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu))
    throw containment_error("mu is not contained in lambda");
  SkewStats s;
  s.weight = lambda.weight() - mu.weight();
  for (std::size_t j = 1; j <= mu.length(); ++j)
    if (lambda.part(j + 1) != mu.part(j)) ++s.a_stat;
  s.horizontal = interlaces(lambda, mu);
  return s;
}

int descent_count(const Partition& lambda) {
  int c = 0;
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > lambda.part(i + 1)) ++c;
  return c;
}

Partition positions_to_partition(const PositionSeq& y) {
  const int c = static_cast<int>(y.count());
  std::vector<int> parts(c);
  for (int j = 1; j <= c; ++j) parts[j - 1] = y.pos[c - j] - c + j - 1;
  return Partition(std::move(parts));
}

PositionSeq partition_to_positions(const Partition& lambda, int count, int m) {
  if (static_cast<int>(lambda.length()) > count)
    throw box_error("partition has more parts than requested positions");
  if (lambda.part(1) > m - count)
    throw box_error("partition too wide for the chain");
  std::vector<int> pos(count);
  for (int i = 1; i <= count; ++i) pos[i - 1] = lambda.part(count - i + 1) + i;
  return PositionSeq(std::move(pos), m);
}

namespace {
void enumerate_rec(int rows, int cols, std::vector<int>& stack,
                   std::vector<Partition>& out) {
  out.push_back(Partition(stack));
  if (static_cast<int>(stack.size()) >= rows) return;
  int cap = stack.empty() ? cols : stack.back();
  for (int p = 1; p <= cap; ++p) {
    stack.push_back(p);
    enumerate_rec(rows, cols, stack, out);
    stack.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw argument_error("negative box");
  std::vector<Partition> out;
  std::vector<int> stack;
  enumerate_rec(rows, cols, stack, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition prepend_rect(const Partition& lambda, int rows, int width) {
  if (rows < 0 || width < 0) throw argument_error("negative rectangle");
  if (lambda.part(1) > width)
    throw argument_error("partition wider than the prepended rectangle");
  std::vector<int> parts(rows, width);
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(parts));
}

}  // namespace gkp
