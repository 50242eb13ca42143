#ifndef POLYZERO_ANALYZE_HPP
#define POLYZERO_ANALYZE_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "polyzero/bounds.hpp"
#include "polyzero/oracle.hpp"
#include "polyzero/report.hpp"

namespace polyzero {

enum class Method { Auto, Leading, Origin, Constant, Recursive, BaselinesOnly };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct AnalysisRequest {
    Poly polynomial;
    Method method = Method::Auto;
    std::optional<int> k;  // origin split index, only with Method::Origin
    Rational width_budget{1, 1024};
    bool json_output = false;
    std::optional<std::string> plot_path;
    bool oracle_check = false;
};

struct BaselinesBlock {
    SignRuleResult sign_rule;
    Rational lagrange_radius;
    Rational cauchy_radius;
};

struct OracleBlock {
    std::vector<NumericRoot> roots;
    bool consistent = true;
    std::vector<std::string> mismatches;
};

struct AnalysisResult {
    std::string method_used;
    RootCountReport report;
    std::optional<BaselinesBlock> baselines;
    std::optional<OracleBlock> oracle;
};

/// Dispatches per the request; always fills baselines except that with
/// Method::BaselinesOnly the report carries no split analysis.
AnalysisResult analyze(const AnalysisRequest& req);

std::string render_text(const AnalysisRequest& req, const AnalysisResult& res);
std::string render_json(const AnalysisRequest& req, const AnalysisResult& res);

/// Writes the plot CSV: "x,lhs,rhs" samples of the two split curves across
/// the bulk-bound window, then a "# markers" section naming the analysis
/// landmarks.
void emit_plot_data(const AnalysisRequest& req, const AnalysisResult& res,
                    std::ostream& os);

/// Full CLI-facing run: analyze, render, optionally write plot data.
/// Returns the process exit code (0 ok, 2 oracle inconsistency).
int run_analysis(const AnalysisRequest& req, std::ostream& out, std::ostream& err);

}  // namespace polyzero

#endif
