#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mothernet/mothercuts.hpp"
#include "mothernet/nashwilliams.hpp"

namespace mothernet {

/// Shortest round-trip decimal form, so reruns print identical bytes.
std::string format_double(double value);

template <class T>
nlohmann::json bound_report_to_json(const BoundReport<T>& report);

/// Header: cutset,size,weight,split_conductance,contribution
template <class T>
std::string bound_report_csv(const BoundReport<T>& report);

/// The theorem bound as a certificate. With `embed_allocation`, every cutset
/// lists its edges with their partial resistances so the bound can be audited.
nlohmann::json theorem_certificate(const TheoremBound& bound, const TreeShape& shape, bool embed_allocation);

/// Header: a_hat,size,conductance,asymptotic,ratio. Rows for a^ in [first, last);
/// the asymptotic columns are empty for a^ < 2.
std::string cutset_table_csv(int d, const TreeShape& shape, std::size_t n, std::uint64_t first, std::uint64_t last);

struct ScalingRow {
  int t = 0;
  Rational bound;
  std::optional<double> resistance;
  double per_step = 0.0;      // bound / (t - s)
  double per_log_step = 0.0;  // bound / (ln t - ln s); NaN for s = 0
};

/// Header: t,bound,res,ratio,bound_per_step,bound_per_log_step
std::string scaling_csv(const std::vector<ScalingRow>& rows);

/// Header: t,bound,increment,res
std::string recurrence_csv(const std::vector<RecurrenceRow>& rows);

}  // namespace mothernet
