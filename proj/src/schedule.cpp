#include "spanfact/schedule.hpp"

#include <algorithm>
#include <unordered_map>

namespace spanfact {

int Schedule::makespan() const {
  int t = 0;
  for (const auto& [key, time] : entries) t = std::max(t, time);
  return t;
}

int Schedule::time_at(int word, int pos) const {
  const auto it = entries.find({word, pos});
  if (it == entries.end())
    throw UsageError("no time assigned to word " + std::to_string(word) +
                     " position " + std::to_string(pos));
  return it->second;
}

ScheduleCheck verify_schedule(const WordList& wl, const Schedule& s) {
  validate_word_list(wl);
  ScheduleCheck result;
  std::vector<long long> counts(wl.d, 0);

  auto fail = [&](ScheduleViolation::Kind kind, std::string detail) {
    result.violation = ScheduleViolation{kind, std::move(detail)};
    return result;
  };

  for (const auto& [key, time] : s.entries) {
    const auto& [w, p] = key;
    if (w < 0 || w >= static_cast<int>(wl.words.size()) || p < 0 ||
        p >= static_cast<int>(wl.words[w].letters.size()))
      return fail(ScheduleViolation::Kind::Unassigned,
                  "entry (" + std::to_string(w) + ", " + std::to_string(p) +
                      ") does not correspond to a word position");
    if (time < 1)
      return fail(ScheduleViolation::Kind::Unassigned,
                  "entry (" + std::to_string(w) + ", " + std::to_string(p) +
                      ") has non-positive time");
  }

  // One time per factor, strictly increasing within each word.
  std::vector<std::vector<int>> factor_times(wl.d);
  for (int w = 0; w < static_cast<int>(wl.words.size()); ++w) {
    const auto& letters = wl.words[w].letters;
    int previous = 0;
    for (int p = 0; p < static_cast<int>(letters.size()); ++p) {
      const auto it = s.entries.find({w, p});
      if (it == s.entries.end())
        return fail(ScheduleViolation::Kind::Unassigned,
                    "word " + std::to_string(w) + " position " +
                        std::to_string(p) + " has no time");
      const int t = it->second;
      if (p > 0 && t <= previous)
        return fail(ScheduleViolation::Kind::NonIncreasingWord,
                    "word " + std::to_string(w) + " has times " +
                        std::to_string(previous) + " then " +
                        std::to_string(t));
      previous = t;
      factor_times[letters[p] - 1].push_back(t);
      ++counts[letters[p] - 1];
      result.makespan = std::max(result.makespan, t);
    }
  }
  for (int i = 0; i < wl.d; ++i) {
    auto& times = factor_times[i];
    std::sort(times.begin(), times.end());
    const auto dup = std::adjacent_find(times.begin(), times.end());
    if (dup != times.end())
      return fail(ScheduleViolation::Kind::DuplicateFactorTime,
                  "factor " + std::to_string(i + 1) + " fires twice at time " +
                      std::to_string(*dup));
  }

  const long long max_count =
      counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  result.is_minimum = result.makespan == max_count;
  return result;
}

Schedule greedy_schedule(const WordList& wl) {
  std::vector<int> rank(wl.words.size());
  for (int w = 0; w < static_cast<int>(rank.size()); ++w) rank[w] = w;
  return greedy_schedule(wl, rank);
}

Schedule greedy_schedule(const WordList& wl, const std::vector<int>& word_rank) {
  validate_word_list(wl);
  if (word_rank.size() != wl.words.size())
    throw UsageError("word_rank size does not match word list");
  const int n_words = static_cast<int>(wl.words.size());
  std::vector<int> next_pos(n_words, 0);
  std::vector<int> last_time(n_words, 0);
  Schedule s;
  long long pending = 0;
  for (const Word& w : wl.words) pending += w.letters.size();

  for (int t = 1; pending > 0; ++t) {
    // candidate per factor: (remaining suffix length, rank, word, pos)
    struct Pick {
      long long remaining = -1;
      int rank = 0;
      int word = 0;
      int pos = 0;
    };
    std::vector<Pick> pick(wl.d);
    for (int w = 0; w < n_words; ++w) {
      const auto& letters = wl.words[w].letters;
      const int p = next_pos[w];
      if (p >= static_cast<int>(letters.size())) continue;
      if (p > 0 && last_time[w] >= t) continue;  // predecessor fired this step
      const int factor = letters[p] - 1;
      const long long remaining = static_cast<long long>(letters.size()) - p;
      Pick& best = pick[factor];
      if (remaining > best.remaining ||
          (remaining == best.remaining &&
           (word_rank[w] < best.rank ||
            (word_rank[w] == best.rank && w < best.word)))) {
        best = Pick{remaining, word_rank[w], w, p};
      }
    }
    for (int i = 0; i < wl.d; ++i) {
      if (pick[i].remaining < 0) continue;
      s.entries[{pick[i].word, pick[i].pos}] = t;
      last_time[pick[i].word] = t;
      ++next_pos[pick[i].word];
      --pending;
    }
  }
  return s;
}

namespace {

struct Occurrence {
  int word = 0;
  int pos = 0;
  int factor = 0;     // 0-based
  int length = 0;     // |word|
  bool wants_late = false;
};

// Complete depth-first search over occurrence time assignments. Value order
// follows the occurrence kind (final letters of multi-letter words from the
// top of the range, everything else from the bottom); this finds the block
// layout immediately on the constructions built here while remaining an
// exact decision procedure in general.
class ScheduleSearch {
 public:
  ScheduleSearch(const WordList& wl, int time_limit)
      : wl_(wl), limit_(time_limit) {
    std::vector<long long> load(wl.d, 0);
    pos_index_.resize(wl.words.size());
    for (int w = 0; w < static_cast<int>(wl.words.size()); ++w) {
      const auto& letters = wl.words[w].letters;
      pos_index_[w].assign(letters.size(), -1);
      for (int p = 0; p < static_cast<int>(letters.size()); ++p) {
        Occurrence occ;
        occ.word = w;
        occ.pos = p;
        occ.factor = letters[p] - 1;
        occ.length = static_cast<int>(letters.size());
        occ.wants_late = (p + 1 == occ.length) && occ.length >= 2;
        occs_.push_back(occ);
        ++load[occ.factor];
      }
    }
    std::vector<int> order(occs_.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const Occurrence& x = occs_[a];
      const Occurrence& y = occs_[b];
      if (load[x.factor] != load[y.factor])
        return load[x.factor] > load[y.factor];
      if (x.factor != y.factor) return x.factor < y.factor;
      if (x.wants_late != y.wants_late) return x.wants_late;
      return std::pair(x.word, x.pos) < std::pair(y.word, y.pos);
    });
    std::vector<Occurrence> sorted;
    sorted.reserve(occs_.size());
    for (int id : order) sorted.push_back(occs_[id]);
    occs_ = std::move(sorted);
    for (int i = 0; i < static_cast<int>(occs_.size()); ++i)
      pos_index_[occs_[i].word][occs_[i].pos] = i;

    used_.assign(wl.d, std::vector<char>(limit_ + 1, 0));
    time_of_.assign(occs_.size(), 0);
  }

  std::optional<Schedule> run() {
    if (limit_ < 1 && !occs_.empty()) return std::nullopt;
    if (!dfs(0)) return std::nullopt;
    Schedule s;
    for (int i = 0; i < static_cast<int>(occs_.size()); ++i)
      s.entries[{occs_[i].word, occs_[i].pos}] = time_of_[i];
    return s;
  }

 private:
  int assigned_time(int word, int pos) const {
    const int id = pos_index_[word][pos];
    return time_of_[id];
  }

  bool factor_has_free(int factor, int lo, int hi) const {
    for (int t = std::max(lo, 1); t <= std::min(hi, limit_); ++t)
      if (!used_[factor][t]) return true;
    return false;
  }

  bool feasible(const Occurrence& occ, int t) const {
    // Room for the prefix below and the suffix above.
    if (t <= occ.pos) return false;
    if (t > limit_ - (occ.length - 1 - occ.pos)) return false;
    if (occ.pos > 0) {
      const int prev = assigned_time(occ.word, occ.pos - 1);
      if (prev > 0) {
        if (prev >= t) return false;
      } else if (!factor_has_free(wl_.words[occ.word].letters[occ.pos - 1] - 1,
                                  1, t - 1)) {
        return false;
      }
    }
    if (occ.pos + 1 < occ.length) {
      const int next = assigned_time(occ.word, occ.pos + 1);
      if (next > 0) {
        if (next <= t) return false;
      } else if (!factor_has_free(wl_.words[occ.word].letters[occ.pos + 1] - 1,
                                  t + 1, limit_)) {
        return false;
      }
    }
    return true;
  }

  bool dfs(int index) {
    if (index == static_cast<int>(occs_.size())) return true;
    const Occurrence& occ = occs_[index];
    const int first = occ.wants_late ? limit_ : 1;
    const int step = occ.wants_late ? -1 : 1;
    for (int t = first; t >= 1 && t <= limit_; t += step) {
      if (used_[occ.factor][t] || !feasible(occ, t)) continue;
      used_[occ.factor][t] = 1;
      time_of_[index] = t;
      if (dfs(index + 1)) return true;
      used_[occ.factor][t] = 0;
      time_of_[index] = 0;
    }
    return false;
  }

  const WordList& wl_;
  int limit_;
  std::vector<Occurrence> occs_;
  std::vector<std::vector<int>> pos_index_;
  std::vector<std::vector<char>> used_;
  std::vector<int> time_of_;
};

}  // namespace

std::optional<Schedule> find_schedule(const WordList& wl, int time_limit) {
  validate_word_list(wl);
  if (time_limit < 0) throw UsageError("time limit must be non-negative");
  return ScheduleSearch(wl, time_limit).run();
}

MinScheduleResult find_min_schedule(const WordList& wl, int time_limit) {
  for (int t = 0; t <= time_limit; ++t) {
    auto s = find_schedule(wl, t);
    if (s) return MinScheduleResult{t, std::move(*s)};
  }
  throw UsageError("no schedule within time limit " +
                   std::to_string(time_limit));
}

int diam2_target_time(const WordList& wl) {
  validate_word_list(wl);
  for (const Word& w : wl.words)
    if (w.letters.size() > 2)
      throw WordsTooLongError("word of length " +
                              std::to_string(w.letters.size()) +
                              " in a diameter-two schedule request");
  std::vector<long long> count(wl.d, 0);
  std::vector<char> in_single(wl.d, 0), in_first(wl.d, 0), in_second(wl.d, 0);
  for (const Word& w : wl.words) {
    for (int letter : w.letters) ++count[letter - 1];
    if (w.letters.size() == 1) in_single[w.letters[0] - 1] = 1;
    if (w.letters.size() == 2) {
      in_first[w.letters[0] - 1] = 1;
      in_second[w.letters[1] - 1] = 1;
    }
  }
  const long long max_count =
      count.empty() ? 0 : *std::max_element(count.begin(), count.end());
  bool exception = false;
  for (int i = 0; i < wl.d; ++i) {
    if (count[i] != max_count || max_count == 0) continue;
    if (!in_single[i] && (!in_first[i] || !in_second[i])) exception = true;
  }
  return static_cast<int>(max_count) + (exception ? 1 : 0);
}

Schedule diam2_schedule(const WordList& wl) {
  const int target = diam2_target_time(wl);
  auto s = find_schedule(wl, target);
  if (!s)
    throw InternalInconsistencyError(
        "exhausted the search for a diameter-two schedule of time " +
        std::to_string(target) +
        "; this would falsify the minimum-time characterization and must be "
        "investigated, not relaxed");
  return std::move(*s);
}

ExchangeReport simulate_exchange(const Digraph& g, const Factorization& f,
                                 const WordList& wl, const Schedule& s) {
  validate_word_list(wl);
  if (f.n != g.vertex_count())
    throw UsageError("factorization and graph disagree on vertex count");
  if (wl.d != f.d)
    throw UsageError("word list and factorization disagree on d");

  ExchangeReport report;
  // (factor, tail, time) identifies one physical edge at one time slot; a
  // factor is a permutation, so (factor, tail) pins the edge even in a
  // multigraph.
  std::unordered_map<long long, std::pair<int, int>> first_user;
  std::unordered_map<long long, int> slot_load;
  const long long n = f.n;
  const long long time_span = static_cast<long long>(s.makespan()) + 1;

  std::vector<char> seen(f.n, 0);
  for (int v = 0; v < f.n; ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    seen[v] = 1;
    for (int i = 1; i < static_cast<int>(wl.words.size()); ++i) {
      const auto& letters = wl.words[i].letters;
      const auto packet =
          std::pair<int, int>{v, word_endpoint(f, v, wl.words[i])};
      int u = v;
      for (int p = 0; p < static_cast<int>(letters.size()); ++p) {
        const int factor = letters[p] - 1;
        const int head = f.succ[factor][u];
        const int t = s.time_at(i, p);
        const long long key =
            (static_cast<long long>(factor) * n + u) * time_span + t;
        const int load = ++slot_load[key];
        report.max_link_load = std::max(report.max_link_load, load);
        report.makespan_observed = std::max(report.makespan_observed, t);
        if (load == 1) {
          first_user[key] = packet;
        } else {
          report.conflicts.push_back(
              ConflictRecord{Edge{u, head}, t, first_user[key], packet});
        }
        u = head;
      }
      ++report.packets_delivered;
      if (seen[u]) report.destinations_distinct = false;
      seen[u] = 1;
    }
  }
  return report;
}

}  // namespace spanfact
