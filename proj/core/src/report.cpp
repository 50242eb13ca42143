#include "polyzero/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polyzero {

CountSet::CountSet(std::vector<int> values) : vals_(std::move(values)) {
    std::sort(vals_.begin(), vals_.end());
    vals_.erase(std::unique(vals_.begin(), vals_.end()), vals_.end());
}

CountSet CountSet::parity_range(int lo, int hi) {
    std::vector<int> v;
    for (int n = lo; n <= hi; n += 2) v.push_back(n);
    return CountSet(std::move(v));
}

bool CountSet::contains(int n) const {
    return std::binary_search(vals_.begin(), vals_.end(), n);
}

CountSet CountSet::plus(const CountSet& o) const {
    std::set<int> sums;
    for (int a : vals_)
        for (int b : o.vals_) sums.insert(a + b);
    return CountSet(std::vector<int>(sums.begin(), sums.end()));
}

CountSet CountSet::filtered(const std::vector<int>& keep) const {
    std::vector<int> v;
    for (int a : vals_)
        if (std::find(keep.begin(), keep.end(), a) != keep.end()) v.push_back(a);
    return CountSet(std::move(v));
}

std::string CountSet::str() const {
    if (vals_.empty()) return "{}";
    if (vals_.size() == 1) return std::to_string(vals_[0]);
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < vals_.size(); ++i) {
        if (i) os << ",";
        os << vals_[i];
    }
    os << "}";
    return os.str();
}

std::string ReportBound::str() const {
    switch (kind) {
        case NegInf: return "-inf";
        case PosInf: return "inf";
        default: return value.brief();
    }
}

std::string ReportInterval::str() const {
    std::ostringstream os;
    if (point) {
        os << "x = " << lo.str();
        if (multiplicity > 1) os << " (multiplicity " << multiplicity << ")";
    } else {
        os << "(" << lo.str() << ", " << hi.str() << "): " << candidates.str()
           << " root" << (candidates.exact() && candidates.exact_value() == 1 ? "" : "s");
    }
    return os.str();
}

std::string RootCountReport::summary() const {
    std::ostringstream os;
    os << "positive " << positive.str() << ", negative " << negative.str();
    if (zero_multiplicity > 0) os << ", zero root of multiplicity " << zero_multiplicity;
    os << ", complex pairs " << complex_pairs.str();
    return os.str();
}

namespace {

ReportBound negated(const ReportBound& b) {
    switch (b.kind) {
        case ReportBound::NegInf: return ReportBound::pos_inf();
        case ReportBound::PosInf: return ReportBound::neg_inf();
        default: {
            ReportBound out = ReportBound::at(-b.value, b.label);
            if (!out.label.empty()) out.label = "-(" + out.label + ")";
            return out;
        }
    }
}

}  // namespace

RootCountReport mirrored(const RootCountReport& rep) {
    RootCountReport out = rep;
    std::swap(out.positive, out.negative);
    out.intervals.clear();
    for (auto it = rep.intervals.rbegin(); it != rep.intervals.rend(); ++it) {
        ReportInterval iv = *it;
        ReportBound lo = negated(it->hi), hi = negated(it->lo);
        iv.lo = std::move(lo);
        iv.hi = std::move(hi);
        out.intervals.push_back(std::move(iv));
    }
    return out;
}

}  // namespace polyzero
