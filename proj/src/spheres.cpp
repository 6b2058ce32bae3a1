#include "bdc/spheres.hpp"

#include "bdc/error.hpp"

namespace bdc {

SphereCountVector::Count checked_add(SphereCountVector::Count a, SphereCountVector::Count b) {
    SphereCountVector::Count r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "sphere count overflow");
    return r;
}

SphereCountVector::Count checked_mul(SphereCountVector::Count a, SphereCountVector::Count b) {
    SphereCountVector::Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "sphere count overflow");
    return r;
}

SphereCountVector::SphereCountVector(std::initializer_list<std::pair<const int, Count>> init) {
    for (const auto& [d, c] : init) add(d, c);
}

SphereCountVector::Count SphereCountVector::operator[](int dim) const {
    const auto it = counts_.find(dim);
    return it == counts_.end() ? 0 : it->second;
}

void SphereCountVector::add(int dim, Count count) {
    if (count == 0) return;
    auto& slot = counts_[dim];
    slot = checked_add(slot, count);
}

bool SphereCountVector::is_empty_complex() const {
    return counts_.size() == 1 && counts_.begin()->first == -1 && counts_.begin()->second == 1;
}

SphereCountVector SphereCountVector::shifted(int by) const {
    SphereCountVector out;
    for (const auto& [d, c] : counts_) out.counts_.emplace(d + by, c);
    return out;
}

std::int64_t SphereCountVector::reduced_euler() const {
    std::int64_t chi = 0;
    for (const auto& [d, c] : counts_) {
        const auto signed_count = static_cast<std::int64_t>(c);
        chi += (d == -1 || d % 2 != 0) ? -signed_count : signed_count;
    }
    return chi;
}

SphereCountVector::Count SphereCountVector::total() const {
    Count sum = 0;
    for (const auto& [d, c] : counts_) sum = checked_add(sum, c);
    return sum;
}

SphereCountVector& SphereCountVector::operator+=(const SphereCountVector& other) {
    for (const auto& [d, c] : other.counts_) add(d, c);
    return *this;
}

std::string SphereCountVector::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, c] : counts_) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(d) + ":" + std::to_string(c);
    }
    return s + "}";
}

}  // namespace bdc
