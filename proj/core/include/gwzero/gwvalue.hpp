#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gwzero/numeric.hpp"

namespace gwzero {

/// Result of an invariant evaluation: an exact integer, or NotDetermined
/// with the reason the covering results do not apply. NotDetermined is a
/// successful outcome, not an error.
class GWValue {
public:
    static GWValue integer(Z v)
    {
        GWValue r;
        r.value_ = std::move(v);
        return r;
    }

    static GWValue not_determined(std::string reason)
    {
        GWValue r;
        r.reason_ = std::move(reason);
        return r;
    }

    bool is_integer() const { return value_.has_value(); }
    const Z& value() const { return *value_; }
    const std::string& reason() const { return reason_; }

    friend bool operator==(const GWValue& a, const GWValue& b)
    {
        if (a.is_integer() != b.is_integer())
            return false;
        return a.is_integer() ? a.value() == b.value() : a.reason() == b.reason();
    }

    std::string str() const
    {
        return is_integer() ? value().get_str() : "NotDetermined(" + reason_ + ")";
    }

private:
    GWValue() = default;
    std::optional<Z> value_;
    std::string reason_;
};

}  // namespace gwzero
