#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gkp/errors.hpp"

namespace gkp {

/// An integer partition: weakly decreasing positive parts, trailing zeros
/// trimmed away so equality is plain list equality. Immutable value type.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "5,3,3,1"; "[]" or "" denote the empty partition.
  static Partition parse(const std::string& text);

  std::size_t length() const { return parts_.size(); }
  int weight() const;
  /// 1-based part accessor; indices past the length read 0.
  int part(std::size_t j) const {
    return j >= 1 && j <= parts_.size() ? parts_[j - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }

  bool contains(const Partition& mu) const;
  bool fits_box(int rows, int cols) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  /// Lexicographic order on part lists; used for map keys and the
  /// deterministic enumeration order.
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// Strictly increasing site positions 1 <= p_1 < ... <= m on a chain.
struct PositionSeq {
  std::vector<int> pos;
  int chain_length = 0;

  PositionSeq() = default;
  PositionSeq(std::vector<int> positions, int m);

  std::size_t count() const { return pos.size(); }
  bool occupied(int site) const;

  bool operator==(const PositionSeq& o) const {
    return chain_length == o.chain_length && pos == o.pos;
  }
  bool operator<(const PositionSeq& o) const {
    if (chain_length != o.chain_length) return chain_length < o.chain_length;
    return pos < o.pos;
  }

  std::string to_string() const;
};

struct SkewStats {
  int weight = 0;
  int a_stat = 0;
  bool horizontal = false;
};

/// Interlacing lambda > mu: lambda_1 >= mu_1 >= lambda_2 >= ... with
/// lambda having at most length(mu)+1 nonzero parts. Equivalent to the
/// extended skew shape lambda//mu being a horizontal strip.
bool interlaces(const Partition& lambda, const Partition& mu);

/// Boxes of mu whose removal leaves a Young diagram, as 1-based
/// (row, column) pairs.
std::vector<std::pair<int, int>> removable_boxes(const Partition& mu);

/// weight = |lambda| - |mu|; a_stat counts indices j <= length(mu) with
/// lambda_{j+1} != mu_j. Requires mu contained in lambda.
SkewStats skew_stats(const Partition& lambda, const Partition& mu);

/// Number of strict descents, counting the final nonzero part against 0.
int descent_count(const Partition& lambda);

Partition positions_to_partition(const PositionSeq& y);
/// Inverse map: lambda needs at most `count` parts and lambda_1 <= m - count.
PositionSeq partition_to_positions(const Partition& lambda, int count, int m);

/// All partitions with at most `rows` parts each at most `cols`, in
/// lexicographic order on part lists. Size is C(rows+cols, rows).
std::vector<Partition> enumerate_in_box(int rows, int cols);

/// ((width)^rows, lambda). Requires lambda_1 <= width.
Partition prepend_rect(const Partition& lambda, int rows, int width);

}  // namespace gkp
