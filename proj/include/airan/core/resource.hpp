#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace airan {

// Integer milli-units throughout: 1 accelerator = 1000 accel_milli,
// 1 CPU core = 1000 cpu_milli. Integer accounting, no float drift.
struct ResourceVector {
    std::int64_t accel_milli = 0;
    std::int64_t cpu_milli = 0;
    std::int64_t mem_mb = 0;
    std::int64_t storage_gb = 0;
    std::int64_t net_mbps = 0;

    static constexpr int kComponents = 5;

    std::int64_t& component(int i) {
        switch (i) {
            case 0: return accel_milli;
            case 1: return cpu_milli;
            case 2: return mem_mb;
            case 3: return storage_gb;
            case 4: return net_mbps;
        }
        throw std::out_of_range("ResourceVector component index");
    }
    std::int64_t component(int i) const {
        return const_cast<ResourceVector*>(this)->component(i);
    }

    static const char* component_name(int i) {
        static const char* names[kComponents] = {
            "accel_milli", "cpu_milli", "mem_mb", "storage_gb", "net_mbps"};
        return names[i];
    }

    bool is_zero() const {
        for (int i = 0; i < kComponents; ++i)
            if (component(i) != 0) return false;
        return true;
    }

    bool non_negative() const {
        for (int i = 0; i < kComponents; ++i)
            if (component(i) < 0) return false;
        return true;
    }

    // Component-wise partial order: every component of *this <= matching
    // component of other.
    bool fits_in(const ResourceVector& other) const {
        for (int i = 0; i < kComponents; ++i)
            if (component(i) > other.component(i)) return false;
        return true;
    }

    bool operator==(const ResourceVector&) const = default;
};

class ResourceOverflow : public std::runtime_error {
public:
    explicit ResourceOverflow(const std::string& what)
        : std::runtime_error(what) {}
};

inline ResourceVector rv_add(const ResourceVector& a, const ResourceVector& b) {
    ResourceVector out;
    for (int i = 0; i < ResourceVector::kComponents; ++i) {
        std::int64_t x = a.component(i), y = b.component(i), s;
        if (__builtin_add_overflow(x, y, &s))
            throw ResourceOverflow(std::string("rv_add overflow in ") +
                                   ResourceVector::component_name(i));
        out.component(i) = s;
    }
    return out;
}

// Per-component max(a - b, 0).
inline ResourceVector rv_sub_saturating(const ResourceVector& a,
                                        const ResourceVector& b) {
    ResourceVector out;
    for (int i = 0; i < ResourceVector::kComponents; ++i) {
        std::int64_t d = a.component(i) - b.component(i);
        out.component(i) = d > 0 ? d : 0;
    }
    return out;
}

inline bool rv_fits(const ResourceVector& a, const ResourceVector& b) {
    return a.fits_in(b);
}

// Component-wise minimum.
inline ResourceVector rv_min(const ResourceVector& a, const ResourceVector& b) {
    ResourceVector out;
    for (int i = 0; i < ResourceVector::kComponents; ++i)
        out.component(i) = std::min(a.component(i), b.component(i));
    return out;
}

// Weighted-sum scalarization of `v` with each component normalized by the
// matching component of `ref`, equal weights. Components with zero reference
// capacity contribute zero. Used for best-fit scoring and victim ordering.
inline double rv_scalarize(const ResourceVector& v, const ResourceVector& ref) {
    double score = 0.0;
    for (int i = 0; i < ResourceVector::kComponents; ++i) {
        std::int64_t cap = ref.component(i);
        if (cap > 0)
            score += static_cast<double>(v.component(i)) / static_cast<double>(cap);
    }
    return score;
}

inline std::string rv_to_string(const ResourceVector& v) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < ResourceVector::kComponents; ++i) {
        if (v.component(i) == 0) continue;
        if (!first) s += ",";
        s += ResourceVector::component_name(i);
        s += ":";
        s += std::to_string(v.component(i));
        first = false;
    }
    s += "}";
    return s;
}

}  // namespace airan
