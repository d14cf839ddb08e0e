#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanfact/digraph.hpp"
#include "spanfact/factorization.hpp"

namespace spanfact {

/// Assignment of 1-based times to the (word, position) occurrences of a word
/// list. Within each factor all times are distinct and along each word times
/// strictly increase.
struct Schedule {
  std::map<std::pair<int, int>, int> entries;

  int makespan() const;
  int time_at(int word, int pos) const;  // throws UsageError when unassigned
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct ScheduleViolation {
  enum class Kind { DuplicateFactorTime, NonIncreasingWord, Unassigned };
  Kind kind;
  std::string detail;
};

struct ScheduleCheck {
  std::optional<ScheduleViolation> violation;
  bool is_minimum = false;  // makespan equals the max per-factor usage
  int makespan = 0;
};

/// Checks the three schedule invariants against wl and reports whether the
/// schedule is minimum (makespan == max per-factor occurrence count).
ScheduleCheck verify_schedule(const WordList& wl, const Schedule& s);

/// List scheduling: at each time step every factor accepts at most one ready
/// occurrence, longest remaining suffix first, ties by (word, position).
/// Always yields a valid schedule; no optimality claim.
Schedule greedy_schedule(const WordList& wl);

/// Same, with the word tie-break replaced by the given ranking (rank[w] is
/// the priority of word w; lower fires first). For exercising many distinct
/// valid schedules deterministically.
Schedule greedy_schedule(const WordList& wl, const std::vector<int>& word_rank);

/// Complete backtracking decision procedure: a valid schedule of makespan at
/// most time_limit, or nullopt after exhausting the search space. Exact, so a
/// nullopt is a proof of infeasibility.
std::optional<Schedule> find_schedule(const WordList& wl, int time_limit);

struct MinScheduleResult {
  int makespan = 0;
  Schedule schedule;
};

/// Smallest feasible makespan by running find_schedule at T = 1, 2, ...;
/// throws UsageError when nothing fits within time_limit.
MinScheduleResult find_min_schedule(const WordList& wl, int time_limit);

/// Minimum-time scheduler for diameter-two word lists (all words of length
/// <= 2). The target time is the max per-factor count M, or M+1 when some
/// maximally used factor has no length-one word and is entirely absent from
/// one of the two positions of the length-two words. Exhausting the search at
/// the target is a falsified construction and raises
/// InternalInconsistencyError instead of relaxing the target.
Schedule diam2_schedule(const WordList& wl);

/// The target makespan diam2_schedule aims for, with the exception predicate
/// evaluated exactly.
int diam2_target_time(const WordList& wl);

struct ConflictRecord {
  Edge edge;
  int time = 0;
  std::pair<int, int> packet_a;  // (source, destination)
  std::pair<int, int> packet_b;
};

struct ExchangeReport {
  long long packets_delivered = 0;
  std::vector<ConflictRecord> conflicts;
  int makespan_observed = 0;
  int max_link_load = 0;  // max packets on one (edge, time) slot
  bool destinations_distinct = true;

  bool conflict_free() const { return conflicts.empty(); }
};

/// Walks every packet (source v, word w_i, i >= 1) along its scheduled path
/// and records per-(edge, time) load. A conflict is two packets crossing the
/// same edge at the same time.
ExchangeReport simulate_exchange(const Digraph& g, const Factorization& f,
                                 const WordList& wl, const Schedule& s);

}  // namespace spanfact
