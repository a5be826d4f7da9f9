#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asw/conductor.hpp"
#include "asw/unit_group.hpp"
#include "json.hpp"

namespace asw {

using Json = nlohmann::ordered_json;

/// Outcome of a verification run; `report` is deterministic for fixed inputs.
struct SuiteOutcome {
  bool passed = true;
  Json report;
};

// ---- duality of fil_m H^1 and G_{n,m} ----

struct OrthogonalityRecord {
  unsigned m = 0;
  std::uint64_t h1_order = 0;  // |fil_m H^1|
  std::uint64_t g_order = 0;   // |G_{n,m}|
  bool perfect = false;        // equal orders, one zero row, one zero column
  bool orthogonality = false;  // annihilator of fil^log_{m-1} in G_{n,m+1} = image of U^m
  std::uint64_t zero_rows = 0;
  std::uint64_t zero_columns = 0;
  std::uint64_t complement_order = 0;
  std::uint64_t unit_image_order = 0;
  bool kills_unit_filtration = false;  // every class in fil_m pairs to 0 with 1 + c t^j, j >= m
};

OrthogonalityRecord orthogonality_at(const FqField& field, std::size_t n, unsigned m, int jobs = 0);
/// Records for m = 1..m_max.
std::vector<OrthogonalityRecord> orthogonality_report(const FqField& field, std::size_t n, unsigned m_max,
                                                      int jobs = 0);
Json to_json(const OrthogonalityRecord& r);
SuiteOutcome orthogonality_suite(const FqField& field, std::size_t n, unsigned m_max, int jobs = 0);

// ---- the two conductors ----

struct FilagreeCase {
  std::string representative;
  ConductorRow row;
};

struct FilagreeReport {
  std::uint64_t classes = 0;
  std::vector<FilagreeCase> mismatches;  // max(fil,1) != max(dual,1)
  std::uint64_t boundary_cases = 0;      // nonzero unramified: fil 1, dual 0
  std::uint64_t inclusion_failures = 0;  // fil_m in fil^log_m in fil_{m+1}
  std::uint64_t coprime_failures = 0;    // fil_m = fil^log_{m-1} for (m,p) = 1
  std::uint64_t bound_failures = 0;      // dual > fil_log + 1
  std::vector<FilagreeCase> boundary_examples;

  bool passed() const {
    return mismatches.empty() && inclusion_failures == 0 && coprime_failures == 0 && bound_failures == 0;
  }
};

FilagreeReport filagree_report(const FqField& field, std::size_t n, unsigned pole_bound, int jobs = 0);
Json to_json(const FilagreeReport& r);

// ---- order identity ----

SuiteOutcome orders_suite(const FqField& field, std::size_t n, unsigned m_max);

// ---- randomized property suites ----

/// Ring axioms, FV = p, F[x] = [x^p], F componentwise = universal F mod p,
/// V additive, Teichmüller multiplicative, ghost homomorphism on lifts.
SuiteOutcome witt_suite(const FqField& field, std::size_t n, std::uint64_t cases, std::uint64_t seed);

/// Well-definedness, bilinearity, n = 1 residue oracle and independence of
/// lift/series precision for sw_pair.
SuiteOutcome pairing_suite(const FqField& field, std::size_t n, std::uint64_t cases, std::uint64_t seed,
                           int jobs = 0);

}  // namespace asw
