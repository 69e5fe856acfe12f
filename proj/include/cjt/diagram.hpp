#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cjt {

/// A partition: weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "3,2,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    int length() const { return static_cast<int>(parts_.size()); }
    /// 1-based part access; returns 0 beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    int first() const { return part(1); }
    int sum() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    bool contains(const Partition& mu) const;
    Partition conjugate() const;

    std::string to_string() const;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Skew diagram lambda/mu with mu contained in lambda.
/// Cells are 1-based: (i,j) with mu_i+1 <= j <= lambda_i.
class SkewDiagram {
public:
    SkewDiagram() = default;
    SkewDiagram(Partition lambda, Partition mu);

    const Partition& lambda() const { return lambda_; }
    const Partition& mu() const { return mu_; }

    int rows() const { return lambda_.length(); }
    int cols() const { return lambda_.first(); }
    int cells() const;
    bool has_cell(int i, int j) const {
        return i >= 1 && i <= rows() && j > mu_.part(i) && j <= lambda_.part(i);
    }

    /// Maximal column height, max_j (lambda'_j - mu'_j); 0 for the empty diagram.
    int depth() const;

    std::string to_string() const;
    auto operator<=>(const SkewDiagram&) const = default;

private:
    Partition lambda_, mu_;
};

/// depth(lambda/mu) <= n+1, equivalently lambda_{i+n+1} <= mu_i for all i.
bool positivity_holds(const SkewDiagram& d, int n);

struct PositivityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All skew diagrams with at most max_cells cells, lambda_1 <= max_width,
/// l(lambda) <= max_len, in a fixed deterministic order. Includes the empty
/// diagram.
std::vector<SkewDiagram> diagram_universe(int max_cells, int max_width, int max_len);

}  // namespace cjt
