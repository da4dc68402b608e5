#include "topdyn/epset.hpp"

#include <algorithm>

#include "topdyn/core.hpp"

namespace topdyn {

static bool is_d_periodic(const std::vector<bool>& per, std::size_t d) {
    for (std::size_t i = d; i < per.size(); ++i)
        if (per[i] != per[i - d]) return false;
    return true;
}

EPSet EPSet::from_bits(std::vector<bool> preperiod, std::vector<bool> period) {
    if (period.empty()) throw Error("EPSet period must be nonempty");

    std::size_t d = period.size();
    for (std::size_t cand = 1; cand <= period.size(); ++cand) {
        if (period.size() % cand != 0) continue;
        if (is_d_periodic(period, cand)) {
            d = cand;
            break;
        }
    }
    period.resize(d);

    // Absorbing the last preperiod bit is legal exactly when it matches the
    // last period bit; the period then rotates right so indexing stays aligned.
    while (!preperiod.empty() && preperiod.back() == period.back()) {
        preperiod.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }

    EPSet out;
    out.pre_ = std::move(preperiod);
    out.per_ = std::move(period);
    return out;
}

EPSet EPSet::all_of_n() { return from_bits({}, {true}); }

EPSet EPSet::empty_set() { return from_bits({}, {false}); }

bool EPSet::contains(std::uint64_t k) const {
    if (k < pre_.size()) return pre_[static_cast<std::size_t>(k)];
    return per_[static_cast<std::size_t>((k - pre_.size()) % per_.size())];
}

bool EPSet::infinite() const {
    return std::find(per_.begin(), per_.end(), true) != per_.end();
}

bool EPSet::empty() const {
    return !infinite() && std::find(pre_.begin(), pre_.end(), true) == pre_.end();
}

std::vector<std::uint64_t> EPSet::finite_members() const {
    std::vector<std::uint64_t> out;
    if (infinite()) throw Error("EPSet::finite_members on an infinite set");
    for (std::size_t k = 0; k < pre_.size(); ++k)
        if (pre_[k]) out.push_back(k);
    return out;
}

std::optional<std::uint64_t> EPSet::min_member() const {
    for (std::size_t k = 0; k < pre_.size(); ++k)
        if (pre_[k]) return k;
    for (std::size_t j = 0; j < per_.size(); ++j)
        if (per_[j]) return pre_.size() + j;
    return std::nullopt;
}

std::optional<std::uint64_t> EPSet::progression_start() const {
    if (!infinite()) return std::nullopt;
    for (std::size_t j = 0; j < per_.size(); ++j)
        if (per_[j]) return pre_.size() + j;
    return std::nullopt;
}

std::string EPSet::to_string() const {
    auto bits = [](const std::vector<bool>& v) {
        std::string s;
        for (bool b : v) s += b ? '1' : '0';
        return s;
    };
    std::string s = "pre=" + (pre_.empty() ? std::string("-") : bits(pre_)) + " per=" + bits(per_);
    if (empty()) return s + " (empty)";
    if (!infinite()) {
        s += " {";
        bool sep = false;
        for (auto k : finite_members()) {
            if (sep) s += ",";
            s += std::to_string(k);
            sep = true;
        }
        return s + "}";
    }
    return s + " (infinite)";
}

}  // namespace topdyn
