#include "asw/kernels.hpp"

#include <omp.h>

#include <exception>

namespace asw {

namespace {

// Exceptions must not escape an OpenMP region; keep the first and rethrow.
class FirstError {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(asw_first_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

PairingMatrix pairing_matrix_serial(const std::vector<LiftedCharacter>& chars, const std::vector<LiftedUnit>& units) {
  PairingMatrix m{chars.size(), units.size(), std::vector<std::uint64_t>(chars.size() * units.size())};
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < units.size(); ++j) m.values[i * m.cols + j] = pair_prepared(chars[i], units[j]).value;
  return m;
}

PairingMatrix pairing_matrix_parallel(const std::vector<LiftedCharacter>& chars, const std::vector<LiftedUnit>& units,
                                      int jobs) {
  PairingMatrix m{chars.size(), units.size(), std::vector<std::uint64_t>(chars.size() * units.size())};
  const long total = static_cast<long>(m.values.size());
  const long cols = static_cast<long>(m.cols);
  FirstError err;
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count(jobs))
  for (long k = 0; k < total; ++k) {
    err.run([&] { m.values[k] = pair_prepared(chars[k / cols], units[k % cols]).value; });
  }
  err.rethrow();
  return m;
}

std::vector<ConductorRow> conductor_table_serial(const std::vector<WittK>& reps, const PairingOptions& options) {
  std::vector<ConductorRow> out;
  out.reserve(reps.size());
  for (const auto& r : reps) out.push_back(conductor_row(reduced_class(r), options));
  return out;
}

std::vector<ConductorRow> conductor_table_parallel(const std::vector<WittK>& reps, int jobs,
                                                   const PairingOptions& options) {
  std::vector<ConductorRow> out(reps.size());
  const long total = static_cast<long>(reps.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(jobs))
  for (long k = 0; k < total; ++k) {
    err.run([&] { out[k] = conductor_row(reduced_class(reps[k]), options); });
  }
  err.rethrow();
  return out;
}

std::vector<LiftedCharacter> prepare_characters(const std::vector<WittK>& chars, const PairingOptions& options) {
  std::vector<LiftedCharacter> out;
  out.reserve(chars.size());
  for (const auto& a : chars) out.push_back(prepare_character(a, options));
  return out;
}

std::vector<LiftedUnit> prepare_units(const std::vector<LaurentFq>& units, const std::vector<LiftedCharacter>& chars,
                                      const PairingOptions& options) {
  if (chars.empty()) return {};
  int pole = 0;
  for (const auto& c : chars) pole = std::max(pole, c.max_pole);
  std::vector<LiftedUnit> out;
  out.reserve(units.size());
  for (const auto& b : units) out.push_back(prepare_unit(b, *chars.front().ring, pole, options));
  return out;
}

}  // namespace asw
