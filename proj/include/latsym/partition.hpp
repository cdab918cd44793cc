#pragma once

#include <set>
#include <string>
#include <vector>

#include "latsym/errors.hpp"

namespace latsym {

// Integer partition: weakly decreasing positive parts, possibly empty.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition empty() { return Partition(); }

    // "2,1" -> (2,1); "0" or "" -> empty partition. Trailing zeros dropped.
    static Partition parse(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { // 1-based, 0 beyond the length
        return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
    }
    int size() const;   // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int first() const { return parts_.empty() ? 0 : parts_[0]; }
    bool is_empty() const { return parts_.empty(); }

    Partition conjugate() const;

    // (m_1, ..., m_maxIndex); m_i = number of parts equal to i.
    // IndexTooSmall if maxIndex < first part.
    std::vector<int> multiplicities(int max_index) const;

    bool contains(const Partition& mu) const; // Young-diagram containment
    // Horizontal-strip condition mu < lambda: lambda_i >= mu_i >= lambda_{i+1}.
    bool interlaces_over(const Partition& mu) const;

    // Number of boxes in column i (1-based) of the skew against mu.
    int skew_column_boxes(const Partition& mu, int column) const;

    // Comparison: by parts lexicographically (total order for map keys).
    int compare(const Partition& o) const;
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.compare(b) < 0; }

    std::string to_string() const; // "2,1"; empty prints "0"

private:
    std::vector<int> parts_;
};

// Column classification of a horizontal strip lambda/mu over columns
// 1..lambda_1; the (lambda_1+1)-st column counts as empty.
//   pp: column i and i+1 both non-empty
//   pm: column i non-empty, i+1 empty
//   mp: column i empty, i+1 non-empty
//   mm: both empty and m_i(lambda) != 0
struct SkewColumnStats {
    std::set<int> pp, pm, mp, mm;
};

// NotHorizontalStrip unless mu < lambda.
SkewColumnStats column_stats(const Partition& lambda, const Partition& mu);

// All partitions contained in `bound`, each once, in graded lexicographic
// order (by size, then parts).
std::vector<Partition> enumerate_sub_partitions(const Partition& bound);

// All partitions kappa with base <= kappa, kappa inside the width x height
// box and |kappa| <= |base| + max_extra_boxes, in the same graded order.
std::vector<Partition> enumerate_super_partitions(const Partition& base, int max_extra_boxes,
                                                  int max_width, int max_height);

// Union of diagrams: i-th part is max(lambda_i, mu_i).
Partition partition_union(const Partition& a, const Partition& b);
// Intersection of diagrams: i-th part is min(lambda_i, mu_i).
Partition partition_intersection(const Partition& a, const Partition& b);

} // namespace latsym
