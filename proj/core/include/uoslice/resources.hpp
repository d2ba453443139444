#pragma once

#include "uoslice/ids.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace uoslice {

using Units = std::int64_t;

struct Reservation {
    NssiId nssi;
    NsiId nsi;
    Units units = 0;

    friend bool operator==(const Reservation&, const Reservation&) = default;
};

// Capacity book for NSSIs. Each tracked NSSI has a capacity and at most one
// reservation per NSI. admit() never lets the reserved total exceed capacity;
// restore() bypasses that check so declared state can be loaded as-is and any
// overcommit surfaced by overcommitted().
class CapacityLedger {
public:
    void track(const NssiId& nssi, Units capacity);
    // Requires the NSSI to carry no live reservations.
    void untrack(const NssiId& nssi);
    bool tracks(const NssiId& nssi) const { return accounts_.contains(nssi); }

    void admit(const NssiId& nssi, const NsiId& nsi, Units units);
    void release(const NssiId& nssi, const NsiId& nsi);
    // Releases every reservation held by `nsi`; returns the NSSIs touched, in id order.
    std::vector<NssiId> release_all(const NsiId& nsi);
    void restore(const NssiId& nssi, const NsiId& nsi, Units units);

    Units capacity(const NssiId& nssi) const;
    Units reserved(const NssiId& nssi) const;
    Units residual(const NssiId& nssi) const;
    Units reservation(const NssiId& nssi, const NsiId& nsi) const; // 0 when absent

    std::vector<Reservation> reservations() const;
    std::vector<NssiId> overcommitted() const;

    friend bool operator==(const CapacityLedger&, const CapacityLedger&) = default;

private:
    struct Account {
        Units capacity = 0;
        Units reserved = 0;
        std::map<NsiId, Units> holders;

        friend bool operator==(const Account&, const Account&) = default;
    };

    const Account& account(const NssiId& nssi) const;
    Account& account(const NssiId& nssi);

    std::map<NssiId, Account> accounts_;
};

} // namespace uoslice
