#pragma once

#include <iostream>
#include <mutex>
#include <set>
#include <string>

namespace coreset {

// Regime warnings flag that an instance sits outside the asymptotic
// assumptions; they never change behavior. Each distinct message prints once
// per process so sweeps stay readable.
inline void warn_once(const std::string& msg) {
    static std::mutex mu;
    static std::set<std::string> seen;
    std::lock_guard<std::mutex> lock(mu);
    if (seen.insert(msg).second) std::cerr << "[coreset] warning: " << msg << '\n';
}

} // namespace coreset
