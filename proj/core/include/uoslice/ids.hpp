#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace uoslice {

// Opaque string identifier tagged by the entity it names, so an NSSI id can
// never be passed where an NSI id is expected.
template <class Tag>
class Id {
public:
    Id() = default;
    explicit Id(std::string value) : value_(std::move(value)) {}

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    friend auto operator<=>(const Id&, const Id&) = default;
    friend bool operator==(const Id&, const Id&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Id& id) { return os << id.value_; }

private:
    std::string value_;
};

using DomainId = Id<struct DomainTag>;
using NssiId = Id<struct NssiTag>;
using NsiId = Id<struct NsiTag>;
using TenantId = Id<struct TenantTag>;
using RequestId = Id<struct RequestTag>;
// A slice instance owned and managed by an MNO; only its id is known locally.
using ForeignNsiId = Id<struct ForeignNsiTag>;

} // namespace uoslice

template <class Tag>
struct std::hash<uoslice::Id<Tag>> {
    std::size_t operator()(const uoslice::Id<Tag>& id) const noexcept {
        return std::hash<std::string>{}(id.str());
    }
};
