#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sympencil {

/// Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Throws PreconditionError on negative or increasing parts.
    explicit IntegerPartition(std::vector<int> parts);
    IntegerPartition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int total() const;

    /// Part i, or 0 beyond the stored length.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    std::string to_string() const;

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

private:
    std::vector<int> parts_;
};

/// Builds (c_1, c_2, ...) with c_k = #{ x ∈ values : x ≥ k } for k ≥ from.
/// Used for Weyr characteristics: from = 0 for minimal indices, 1 for Jordan sizes.
IntegerPartition weyr_of(const std::vector<int>& values, int from);

}  // namespace sympencil
