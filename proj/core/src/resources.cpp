#include "uoslice/resources.hpp"

#include "uoslice/errors.hpp"

namespace uoslice {

namespace {

std::string pair_name(const NssiId& nssi, const NsiId& nsi) { return "(" + nssi.str() + ", " + nsi.str() + ")"; }

} // namespace

const CapacityLedger::Account& CapacityLedger::account(const NssiId& nssi) const {
    auto it = accounts_.find(nssi);
    if (it == accounts_.end()) throw SliceError(ErrorCode::UnknownNssi, "ledger does not track '" + nssi.str() + "'");
    return it->second;
}

CapacityLedger::Account& CapacityLedger::account(const NssiId& nssi) {
    auto it = accounts_.find(nssi);
    if (it == accounts_.end()) throw SliceError(ErrorCode::UnknownNssi, "ledger does not track '" + nssi.str() + "'");
    return it->second;
}

void CapacityLedger::track(const NssiId& nssi, Units capacity) {
    if (capacity < 0) throw SliceError(ErrorCode::InvalidUnits, "negative capacity for '" + nssi.str() + "'");
    if (accounts_.contains(nssi)) throw SliceError(ErrorCode::DuplicateId, "ledger already tracks '" + nssi.str() + "'");
    accounts_[nssi].capacity = capacity;
}

void CapacityLedger::untrack(const NssiId& nssi) {
    const auto& acc = account(nssi);
    if (!acc.holders.empty())
        throw SliceError(ErrorCode::InvalidEntity, "'" + nssi.str() + "' still carries reservations");
    accounts_.erase(nssi);
}

void CapacityLedger::admit(const NssiId& nssi, const NsiId& nsi, Units units) {
    if (units <= 0) throw SliceError(ErrorCode::InvalidUnits, "reservation units must be positive");
    auto& acc = account(nssi);
    if (acc.holders.contains(nsi))
        throw SliceError(ErrorCode::DuplicateReservation, "reservation " + pair_name(nssi, nsi) + " already exists");
    if (acc.capacity - acc.reserved < units)
        throw SliceError(ErrorCode::InsufficientCapacity,
                         "'" + nssi.str() + "' has residual " + std::to_string(acc.capacity - acc.reserved) +
                             ", requested " + std::to_string(units));
    acc.holders.emplace(nsi, units);
    acc.reserved += units;
}

void CapacityLedger::release(const NssiId& nssi, const NsiId& nsi) {
    auto& acc = account(nssi);
    auto it = acc.holders.find(nsi);
    if (it == acc.holders.end())
        throw SliceError(ErrorCode::NoSuchReservation, "no reservation " + pair_name(nssi, nsi));
    acc.reserved -= it->second;
    acc.holders.erase(it);
}

std::vector<NssiId> CapacityLedger::release_all(const NsiId& nsi) {
    std::vector<NssiId> touched;
    for (auto& [id, acc] : accounts_) {
        auto it = acc.holders.find(nsi);
        if (it == acc.holders.end()) continue;
        acc.reserved -= it->second;
        acc.holders.erase(it);
        touched.push_back(id);
    }
    return touched;
}

void CapacityLedger::restore(const NssiId& nssi, const NsiId& nsi, Units units) {
    if (units <= 0) throw SliceError(ErrorCode::InvalidUnits, "reservation units must be positive");
    auto& acc = account(nssi);
    if (!acc.holders.emplace(nsi, units).second)
        throw SliceError(ErrorCode::DuplicateReservation, "reservation " + pair_name(nssi, nsi) + " already exists");
    acc.reserved += units;
}

Units CapacityLedger::capacity(const NssiId& nssi) const { return account(nssi).capacity; }
Units CapacityLedger::reserved(const NssiId& nssi) const { return account(nssi).reserved; }

Units CapacityLedger::residual(const NssiId& nssi) const {
    const auto& acc = account(nssi);
    return acc.capacity - acc.reserved;
}

Units CapacityLedger::reservation(const NssiId& nssi, const NsiId& nsi) const {
    const auto& acc = account(nssi);
    auto it = acc.holders.find(nsi);
    return it == acc.holders.end() ? 0 : it->second;
}

std::vector<Reservation> CapacityLedger::reservations() const {
    std::vector<Reservation> out;
    for (const auto& [id, acc] : accounts_)
        for (const auto& [nsi, units] : acc.holders) out.push_back({id, nsi, units});
    return out;
}

std::vector<NssiId> CapacityLedger::overcommitted() const {
    std::vector<NssiId> out;
    for (const auto& [id, acc] : accounts_)
        if (acc.reserved > acc.capacity) out.push_back(id);
    return out;
}

} // namespace uoslice
