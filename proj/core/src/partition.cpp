#include "sympencil/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sympencil/errors.hpp"

namespace sympencil {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw PreconditionError("integer partition parts must be nonnegative");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw PreconditionError("integer partition parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

IntegerPartition::IntegerPartition(std::initializer_list<int> parts)
    : IntegerPartition(std::vector<int>(parts)) {}

int IntegerPartition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string IntegerPartition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

IntegerPartition weyr_of(const std::vector<int>& values, int from) {
    if (values.empty()) {
        return {};
    }
    const int top = *std::max_element(values.begin(), values.end());
    std::vector<int> parts;
    for (int k = from; k <= top; ++k) {
        parts.push_back(static_cast<int>(
            std::count_if(values.begin(), values.end(), [k](int v) { return v >= k; })));
    }
    return IntegerPartition(std::move(parts));
}

}  // namespace sympencil
