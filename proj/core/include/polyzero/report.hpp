#ifndef POLYZERO_REPORT_HPP
#define POLYZERO_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyzero/algebraic.hpp"
#include "polyzero/poly.hpp"

namespace polyzero {

/// A set of possible root counts. When the analysis pins the count exactly the
/// set is a singleton; otherwise all members share parity (counts can only
/// differ by hidden pairs).
class CountSet {
  public:
    CountSet() = default;
    static CountSet exactly(int n) { return CountSet({n}); }
    /// {lo, lo+2, ..., <= hi}
    static CountSet parity_range(int lo, int hi);
    explicit CountSet(std::vector<int> values);

    bool exact() const { return vals_.size() == 1; }
    int exact_value() const { return vals_.front(); }
    int min() const { return vals_.front(); }
    int max() const { return vals_.back(); }
    bool contains(int n) const;
    bool empty() const { return vals_.empty(); }
    size_t size() const { return vals_.size(); }
    const std::vector<int>& values() const { return vals_; }

    /// All achievable sums a + b with a from this set, b from o.
    CountSet plus(const CountSet& o) const;
    /// Keeps only values for which `keep` holds.
    CountSet filtered(const std::vector<int>& keep) const;

    std::string str() const;

  private:
    std::vector<int> vals_;  // sorted, unique
};

/// Interval endpoint in a verdict: -inf, +inf, or a (possibly irrational)
/// algebraic value carried with its defining data.
struct ReportBound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    AlgebraicReal value;
    std::string label;  // how the analysis named this point, e.g. "chi_1"

    static ReportBound neg_inf() { return {NegInf, {}, "-inf"}; }
    static ReportBound pos_inf() { return {PosInf, {}, "inf"}; }
    static ReportBound at(AlgebraicReal v, std::string label = {}) {
        return {Finite, std::move(v), std::move(label)};
    }
    bool finite() const { return kind == Finite; }
    std::string str() const;
};

/// One verdict cell: either a point root (exact location, known multiplicity)
/// or an interval with a candidate set of how many roots it holds.
struct ReportInterval {
    ReportBound lo, hi;
    bool point = false;
    int multiplicity = 1;   // only meaningful for points
    CountSet candidates;    // for points: exactly {multiplicity}
    std::string str() const;
};

/// The analysis answer: positive/negative/complex counts (exact or candidate
/// sets), the multiplicity of a root at the origin, the isolation cells, and
/// the chain of deductions that produced them.
struct RootCountReport {
    int degree = 0;
    CountSet positive = CountSet::exactly(0);
    CountSet negative = CountSet::exactly(0);
    int zero_multiplicity = 0;
    CountSet complex_pairs = CountSet::exactly(0);
    std::vector<ReportInterval> intervals;
    std::vector<std::string> deductions;

    void deduce(std::string line) { deductions.push_back(std::move(line)); }
    std::string summary() const;
};

/// The verdict for p(-x): intervals negated and reordered, positive and
/// negative counts swapped.
RootCountReport mirrored(const RootCountReport& rep);

/// A critical leading-coefficient value together with the locus where the two
/// split curves touch; equivalently a parameter value making the instantiated
/// polynomial have a root of multiplicity >= 2 at chi.
struct TangencyData {
    AlgebraicReal alpha;
    AlgebraicReal chi;
    int chi_multiplicity = 2;
};

}  // namespace polyzero

#endif
