#include "kgonal/oracle.hpp"

#include <algorithm>

#include "kgonal/intersect.hpp"

namespace kgonal {

std::vector<CommonValue> enumerate_common(const PolygonParams& params, const BigInt& limit) {
  if (limit < 1) {
    throw DomainError("enumerate_common: limit must be >= 1, got " + limit.get_str());
  }
  std::vector<CommonValue> out;
  BigInt n = 1;
  BigInt m = 1;
  BigInt p = polygonal(n, params);
  BigInt c = centered(m, params);
  while (p <= limit && c <= limit) {
    if (p < c) {
      ++n;
      p = polygonal(n, params);
    } else if (c < p) {
      ++m;
      c = centered(m, params);
    } else {
      out.push_back(CommonValue{n, m, p});
      ++n;
      ++m;
      p = polygonal(n, params);
      c = centered(m, params);
    }
  }
  return out;
}

OracleReport compare(const PolygonParams& params, const BigInt& limit) {
  OracleReport report;
  report.k = params.k();
  report.limit = limit;
  report.matches = enumerate_common(params, limit);

  std::vector<CommonValue> closed;
  IntersectionStream gen(params, 0);
  while (gen.current().value <= limit) {
    const auto& rec = gen.current();
    closed.push_back(CommonValue{rec.n, rec.m, rec.value});
    gen.advance();
  }

  const std::size_t common = std::min(report.matches.size(), closed.size());
  for (std::size_t j = 0; j < common; ++j) {
    if (!(report.matches[j] == closed[j])) {
      report.first_divergence = Divergence{j, report.matches[j], closed[j]};
      break;
    }
  }
  if (!report.first_divergence && report.matches.size() != closed.size()) {
    Divergence d{common, std::nullopt, std::nullopt};
    if (common < report.matches.size()) {
      d.expected = report.matches[common];
    }
    if (common < closed.size()) {
      d.actual = closed[common];
    }
    report.first_divergence = d;
  }
  report.closed_form_agreement = !report.first_divergence.has_value();
  return report;
}

}  // namespace kgonal
