#include "latsym/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace latsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i - 1] < parts_[i]))
            throw ParseError("not weakly decreasing positive parts");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw ParseError("bad partition: " + s);
        for (char c : tok)
            if (c < '0' || c > '9') throw ParseError("bad partition: " + s);
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> conj;
    for (int i = 1; i <= first(); ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

std::vector<int> Partition::multiplicities(int max_index) const {
    if (max_index < first())
        throw IndexTooSmall("multiplicities: max_index " + std::to_string(max_index) +
                            " < largest part " + std::to_string(first()));
    std::vector<int> m(static_cast<std::size_t>(std::max(max_index, 0)), 0);
    for (int p : parts_) ++m[p - 1];
    return m;
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

bool Partition::interlaces_over(const Partition& mu) const {
    int rows = std::max(length(), mu.length());
    for (int i = 1; i <= rows; ++i) {
        if (!(part(i) >= mu.part(i) && mu.part(i) >= part(i + 1))) return false;
    }
    return true;
}

int Partition::skew_column_boxes(const Partition& mu, int column) const {
    int boxes = 0;
    for (int i = 1; i <= length(); ++i)
        if (mu.part(i) < column && column <= part(i)) ++boxes;
    return boxes;
}

int Partition::compare(const Partition& o) const {
    if (parts_ < o.parts_) return -1;
    if (o.parts_ < parts_) return 1;
    return 0;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

SkewColumnStats column_stats(const Partition& lambda, const Partition& mu) {
    if (!lambda.interlaces_over(mu))
        throw NotHorizontalStrip("column_stats: " + lambda.to_string() + "/" + mu.to_string() +
                                 " is not a horizontal strip");
    SkewColumnStats st;
    auto m = lambda.is_empty() ? std::vector<int>{} : lambda.multiplicities(lambda.first());
    auto nonempty = [&](int col) {
        if (col > lambda.first()) return false; // column past the diagram
        return lambda.skew_column_boxes(mu, col) > 0;
    };
    for (int i = 1; i <= lambda.first(); ++i) {
        bool here = nonempty(i), next = nonempty(i + 1);
        if (here && next) st.pp.insert(i);
        else if (here) st.pm.insert(i);
        else if (next) st.mp.insert(i);
        else if (m[i - 1] != 0) st.mm.insert(i);
    }
    return st;
}

namespace {

void grow(std::vector<int>& parts, int max_part, int remaining, int max_height,
          std::vector<Partition>& out) {
    out.push_back(Partition(parts));
    if (remaining == 0 || static_cast<int>(parts.size()) >= max_height) return;
    // extend with one more row, then recurse; dedupe happens by construction
    int cap = parts.empty() ? max_part : std::min(max_part, parts.back());
    for (int p = 1; p <= std::min(cap, remaining); ++p) {
        parts.push_back(p);
        grow(parts, max_part, remaining - p, max_height, out);
        parts.pop_back();
    }
}

struct GradedLess {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.compare(b) < 0;
    }
};

} // namespace

std::vector<Partition> enumerate_sub_partitions(const Partition& bound) {
    std::vector<Partition> out;
    std::vector<int> parts;
    // enumerate rows top to bottom, row i bounded by bound_i and previous row
    std::function<void(int)> rec = [&](int row) {
        out.push_back(Partition(parts));
        if (row > bound.length()) return;
        int cap = bound.part(row);
        if (!parts.empty()) cap = std::min(cap, parts.back());
        for (int p = 1; p <= cap; ++p) {
            parts.push_back(p);
            rec(row + 1);
            parts.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), GradedLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> enumerate_super_partitions(const Partition& base, int max_extra_boxes,
                                                  int max_width, int max_height) {
    std::vector<Partition> out;
    if (base.first() > max_width || base.length() > max_height) return out;
    std::vector<int> parts;
    // choose rows top to bottom; stopping is allowed once all base rows are covered
    std::function<void(int, int)> rec = [&](int row, int used_extra) {
        if (row > base.length()) out.push_back(Partition(parts));
        if (row > max_height) return;
        int low = std::max(base.part(row), 1);
        int high = std::min(max_width, parts.empty() ? max_width : parts.back());
        for (int p = low; p <= high; ++p) {
            int extra = p - base.part(row);
            if (used_extra + extra > max_extra_boxes) break;
            parts.push_back(p);
            rec(row + 1, used_extra + extra);
            parts.pop_back();
        }
    };
    rec(1, 0);
    std::sort(out.begin(), out.end(), GradedLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition partition_union(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    int rows = std::max(a.length(), b.length());
    for (int i = 1; i <= rows; ++i) parts.push_back(std::max(a.part(i), b.part(i)));
    return Partition(std::move(parts));
}

Partition partition_intersection(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    int rows = std::min(a.length(), b.length());
    for (int i = 1; i <= rows; ++i) parts.push_back(std::min(a.part(i), b.part(i)));
    return Partition(std::move(parts));
}

} // namespace latsym
