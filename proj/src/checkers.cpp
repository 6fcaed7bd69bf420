#include "varfn/checkers.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace varfn {

std::string to_string(CexKind kind) {
  switch (kind) {
    case CexKind::Eq1: return "eq1";
    case CexKind::Eq2: return "eq2";
    case CexKind::Cond3: return "cond3";
    case CexKind::Range: return "range";
    case CexKind::Idem: return "idem";
  }
  return "?";
}

std::string to_string(CheckMode mode) { return mode == CheckMode::Plain ? "plain" : "primed"; }

CheckVerdict CheckVerdict::pass(int bound, long long cases, int domain_bound) {
  CheckVerdict v;
  v.refuted = false;
  v.bound = bound;
  v.domain_bound = domain_bound;
  v.cases_checked = cases;
  return v;
}

CheckVerdict CheckVerdict::refute(int bound, Counterexample ce, int domain_bound) {
  CheckVerdict v;
  v.refuted = true;
  v.bound = bound;
  v.domain_bound = domain_bound;
  v.cex = std::move(ce);
  return v;
}

namespace {

// Shared word universe for one check: the shortlex enumeration up to the
// bound, every value of f on it, letter ranks for O(|w|) index
// arithmetic, and per-length prefix sizes.
struct Universe {
  const Alphabet* alphabet = nullptr;
  int bound = 0;
  std::size_t k = 0;
  std::vector<Word> words;
  std::vector<OutputValue> vals;
  std::vector<std::vector<unsigned short>> ranks;  // per word, per letter
  std::vector<long long> cum_upto;                 // # words of length <= L
  std::vector<long long> pairs_upto;               // # (x,z) pairs with |x|+|z| <= L

  Universe(const VariadicFn& f, const Alphabet& a, int bound_in) {
    alphabet = &a;
    bound = bound_in;
    k = a.letter_count();
    words = enumerate_words(a, bound);
    vals.reserve(words.size());
    ranks.reserve(words.size());
    for (const Word& w : words) {
      vals.push_back(f.eval(w));
      std::vector<unsigned short> r;
      r.reserve(w.size());
      for (const Letter& l : w.letters) r.push_back(static_cast<unsigned short>(*a.rank(l)));
      ranks.push_back(std::move(r));
    }
    cum_upto.assign(static_cast<std::size_t>(bound) + 1, 0);
    long long level = 1;
    long long total = 1;
    cum_upto[0] = 1;
    for (int len = 1; len <= bound; ++len) {
      level *= static_cast<long long>(k);
      total += level;
      cum_upto[static_cast<std::size_t>(len)] = total;
    }
    pairs_upto.assign(static_cast<std::size_t>(bound) + 1, 0);
    long long lvl = 1;
    long long acc = 0;
    for (int len = 0; len <= bound; ++len) {
      acc += lvl * (len + 1);
      pairs_upto[static_cast<std::size_t>(len)] = acc;
      lvl *= static_cast<long long>(k);
    }
  }

  std::size_t len(std::size_t idx) const { return ranks[idx].size(); }

  long long prefix_count(int max_len) const {
    if (max_len < 0) return 0;
    return cum_upto[static_cast<std::size_t>(std::min(max_len, bound))];
  }

  // Index of the concatenation of up to three enumerated words, all
  // in-alphabet by construction; valid when the total length fits the
  // bound.
  std::size_t concat_index(std::size_t a_idx, const std::vector<unsigned short>& mid,
                           std::size_t c_idx) const {
    const auto& ra = ranks[a_idx];
    const auto& rc = ranks[c_idx];
    std::size_t total_len = ra.size() + mid.size() + rc.size();
    long long pos = 0;
    for (unsigned short r : ra) pos = pos * static_cast<long long>(k) + r;
    for (unsigned short r : mid) pos = pos * static_cast<long long>(k) + r;
    for (unsigned short r : rc) pos = pos * static_cast<long long>(k) + r;
    long long base = total_len == 0 ? 0 : cum_upto[total_len - 1];
    return static_cast<std::size_t>(base + pos);
  }

  // Rank vector for an arbitrary word; nullopt when a letter lies
  // outside the alphabet.
  std::optional<std::vector<unsigned short>> rank_vector(const Word& w) const {
    std::vector<unsigned short> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters) {
      auto r = alphabet->rank(l);
      if (!r) return std::nullopt;
      out.push_back(static_cast<unsigned short>(*r));
    }
    return out;
  }
};

struct Failure {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;
  Counterexample ce;

  bool before(const Failure& other) const {
    if (a != other.a) return a < other.a;
    if (b != other.b) return b < other.b;
    if (c != other.c) return c < other.c;
    return d < other.d;
  }
};

struct WorkerResult {
  std::optional<Failure> failure;
  long long cases = 0;
};

// Runs fn(worker_id, result) on `workers` threads; workers == 1 stays on
// the calling thread. Inputs are shared immutably; each worker owns its
// result slot.
void run_workers(int workers, const std::function<void(int, WorkerResult&)>& fn,
                 std::vector<WorkerResult>& results) {
  results.assign(static_cast<std::size_t>(workers), WorkerResult{});
  if (workers == 1) {
    fn(0, results[0]);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int wi = 0; wi < workers; ++wi) {
    threads.emplace_back([&, wi] { fn(wi, results[static_cast<std::size_t>(wi)]); });
  }
  for (auto& t : threads) t.join();
}

CheckVerdict merge_results(std::vector<WorkerResult>& results, int bound, int domain_bound) {
  std::optional<Failure> best;
  long long cases = 0;
  for (auto& r : results) {
    cases += r.cases;
    if (r.failure && (!best || r.failure->before(*best))) best = std::move(r.failure);
  }
  if (best) return CheckVerdict::refute(bound, std::move(best->ce), domain_bound);
  return CheckVerdict::pass(bound, cases, domain_bound);
}

}  // namespace

CheckVerdict check_eq1(const VariadicFn& f, const DomainSet& d, CheckMode mode, int bound,
                       int domain_bound, int workers) {
  if (bound < 0 || domain_bound < 0) throw ConfigError("check bounds must be nonnegative");
  if (workers < 1) throw ConfigError("worker count must be positive");
  const Alphabet& a = d.alphabet();
  Universe u(f, a, bound);

  // Admission data per word. Primed mode first tabulates the value set
  // of f on the domain fragment, with the least witness per value.
  std::map<OutputValue, Word, ValueLess> least_domain_witness;
  if (mode == CheckMode::Primed) {
    for (const Word& w : d.enumerate(domain_bound)) {
      OutputValue v = f.eval(w);
      least_domain_witness.emplace(std::move(v), w);  // first hit is shortlex-least
    }
  }
  std::vector<std::size_t> admitted;
  std::vector<const Word*> witness_d(u.words.size(), nullptr);
  for (std::size_t i = 0; i < u.words.size(); ++i) {
    if (mode == CheckMode::Plain) {
      if (d.contains(u.words[i])) admitted.push_back(i);
    } else {
      auto it = least_domain_witness.find(u.vals[i]);
      if (it != least_domain_witness.end()) {
        admitted.push_back(i);
        witness_d[i] = &it->second;
      }
    }
  }

  std::atomic<std::size_t> best_y{std::numeric_limits<std::size_t>::max()};
  auto work = [&](int worker_id, WorkerResult& out) {
    for (std::size_t pos = static_cast<std::size_t>(worker_id); pos < admitted.size();
         pos += static_cast<std::size_t>(workers)) {
      std::size_t y_idx = admitted[pos];
      if (y_idx > best_y.load(std::memory_order_relaxed)) break;
      const Word& y = u.words[y_idx];
      const OutputValue& fy = u.vals[y_idx];
      int budget = bound - static_cast<int>(y.size());

      auto record = [&](std::size_t x_idx, std::size_t z_idx, Counterexample ce) {
        ce.kind = CexKind::Eq1;
        ce.y = y;
        if (witness_d[y_idx]) ce.witness_d = *witness_d[y_idx];
        out.failure = Failure{y_idx, x_idx, z_idx, 0, std::move(ce)};
        std::size_t cur = best_y.load(std::memory_order_relaxed);
        while (y_idx < cur &&
               !best_y.compare_exchange_weak(cur, y_idx, std::memory_order_relaxed)) {
        }
      };

      if (!fy.is_word()) {
        Counterexample ce;
        ce.x = Word{};
        ce.z = Word{};
        ce.lhs = fy;
        ce.rhs = fy;
        ce.note = "value-not-a-word";
        record(0, 0, std::move(ce));
        return;
      }
      if (fy.word == y) {
        // Both sides of the equation are the same word for every (x, z).
        out.cases += u.pairs_upto[static_cast<std::size_t>(budget)];
        continue;
      }
      auto fy_ranks = u.rank_vector(fy.word);

      long long x_count = u.prefix_count(budget);
      bool failed = false;
      for (std::size_t x_idx = 0; x_idx < static_cast<std::size_t>(x_count) && !failed; ++x_idx) {
        int z_budget = budget - static_cast<int>(u.len(x_idx));
        long long z_count = u.prefix_count(z_budget);
        for (std::size_t z_idx = 0; z_idx < static_cast<std::size_t>(z_count); ++z_idx) {
          const OutputValue& lhs = u.vals[u.concat_index(x_idx, u.ranks[y_idx], z_idx)];
          const OutputValue* rhs = nullptr;
          OutputValue rhs_storage;
          std::size_t inner_len = u.len(x_idx) + fy.word.size() + u.len(z_idx);
          if (fy_ranks && inner_len <= static_cast<std::size_t>(bound)) {
            rhs = &u.vals[u.concat_index(x_idx, *fy_ranks, z_idx)];
          } else {
            rhs_storage = f.eval(concat(u.words[x_idx], fy.word, u.words[z_idx]));
            rhs = &rhs_storage;
          }
          ++out.cases;
          if (!(lhs == *rhs)) {
            Counterexample ce;
            ce.x = u.words[x_idx];
            ce.z = u.words[z_idx];
            ce.lhs = lhs;
            ce.rhs = *rhs;
            record(x_idx, z_idx, std::move(ce));
            failed = true;
            break;
          }
        }
      }
      if (failed) return;
    }
  };

  std::vector<WorkerResult> results;
  run_workers(workers, work, results);
  return merge_results(results, bound, domain_bound);
}

CheckVerdict check_eq2(const VariadicFn& f, const DomainSet& d, CheckMode mode, int bound,
                       int workers) {
  if (bound < 0) throw ConfigError("check bounds must be nonnegative");
  if (workers < 1) throw ConfigError("worker count must be positive");
  const Alphabet& a = d.alphabet();
  Universe u(f, a, bound);

  std::map<OutputValue, std::vector<std::size_t>, ValueLess> groups;
  for (std::size_t i = 0; i < u.words.size(); ++i) groups[u.vals[i]].push_back(i);

  std::vector<char> in_domain(u.words.size(), 0);
  std::vector<std::size_t> admitted;
  for (std::size_t i = 0; i < u.words.size(); ++i) {
    if (d.contains(u.words[i])) {
      in_domain[i] = 1;
      admitted.push_back(i);
    }
  }

  std::atomic<std::size_t> best_y{std::numeric_limits<std::size_t>::max()};
  auto work = [&](int worker_id, WorkerResult& out) {
    for (std::size_t pos = static_cast<std::size_t>(worker_id); pos < admitted.size();
         pos += static_cast<std::size_t>(workers)) {
      std::size_t y_idx = admitted[pos];
      if (y_idx > best_y.load(std::memory_order_relaxed)) break;
      const auto& group = groups.find(u.vals[y_idx])->second;
      for (std::size_t yp_idx : group) {
        if (yp_idx == y_idx) continue;
        if (mode == CheckMode::Plain && !in_domain[yp_idx]) continue;
        int budget = bound - static_cast<int>(std::max(u.len(y_idx), u.len(yp_idx)));
        long long x_count = u.prefix_count(budget);
        for (std::size_t x_idx = 0; x_idx < static_cast<std::size_t>(x_count); ++x_idx) {
          int z_budget = budget - static_cast<int>(u.len(x_idx));
          long long z_count = u.prefix_count(z_budget);
          for (std::size_t z_idx = 0; z_idx < static_cast<std::size_t>(z_count); ++z_idx) {
            const OutputValue& lhs = u.vals[u.concat_index(x_idx, u.ranks[y_idx], z_idx)];
            const OutputValue& rhs = u.vals[u.concat_index(x_idx, u.ranks[yp_idx], z_idx)];
            ++out.cases;
            if (!(lhs == rhs)) {
              Counterexample ce;
              ce.kind = CexKind::Eq2;
              ce.y = u.words[y_idx];
              ce.yprime = u.words[yp_idx];
              ce.x = u.words[x_idx];
              ce.z = u.words[z_idx];
              ce.lhs = lhs;
              ce.rhs = rhs;
              out.failure = Failure{y_idx, yp_idx, x_idx, z_idx, std::move(ce)};
              std::size_t cur = best_y.load(std::memory_order_relaxed);
              while (y_idx < cur &&
                     !best_y.compare_exchange_weak(cur, y_idx, std::memory_order_relaxed)) {
              }
              return;
            }
          }
        }
      }
    }
  };

  std::vector<WorkerResult> results;
  run_workers(workers, work, results);
  return merge_results(results, bound, -1);
}

CheckVerdict check_condition3(const VariadicFn& f, int m, int bound) {
  if (m < 0) throw ConfigError("condition bound m must be nonnegative");
  if (bound < m) throw ConfigError("check bound must be at least m");
  const Alphabet& a = *f.alphabet;
  std::map<OutputValue, Word, ValueLess> low_values;  // value -> least short preimage
  for (const Word& w : enumerate_words(a, m)) {
    low_values.emplace(f.eval(w), w);
  }
  long long cases = 0;
  for (const Word& w : enumerate_words(a, bound)) {
    OutputValue v = f.eval(w);
    bool in_low = low_values.count(v) > 0;
    bool is_short = w.size() <= static_cast<std::size_t>(m);
    ++cases;
    if (in_low == is_short) continue;
    Counterexample ce;
    ce.kind = CexKind::Cond3;
    ce.y = w;
    ce.lhs = v;
    if (in_low) {
      const Word& u = low_values.find(v)->second;
      ce.witness_d = u;
      ce.rhs = f.eval(u);
      ce.note = "value-attained-below";
    } else {
      ce.rhs = v;
      ce.note = "value-escapes-below";
    }
    return CheckVerdict::refute(bound, std::move(ce));
  }
  return CheckVerdict::pass(bound, cases);
}

CheckVerdict check_range(const VariadicFn& f, const DomainSet& d, RangeProperty which,
                         int bound) {
  if (bound < 0) throw ConfigError("check bounds must be nonnegative");
  const Alphabet& a = d.alphabet();
  long long cases = 0;
  if (which == RangeProperty::DValued) {
    for (const Word& w : enumerate_words(a, bound)) {
      OutputValue v = f.eval(w);
      ++cases;
      if (v.is_word() && d.contains(v.word)) continue;
      Counterexample ce;
      ce.kind = CexKind::Range;
      ce.y = w;
      ce.lhs = v;
      ce.rhs = v;
      ce.note = v.is_word() ? "value-outside-domain" : "value-not-a-word";
      return CheckVerdict::refute(bound, std::move(ce));
    }
    return CheckVerdict::pass(bound, cases);
  }
  // DDetermined. The domain-side value set is always contained in the
  // full value set, so only the forward inclusion can fail.
  std::set<OutputValue, ValueLess> domain_values;
  for (const Word& w : d.enumerate(bound)) domain_values.insert(f.eval(w));
  for (const Word& w : enumerate_words(a, bound)) {
    OutputValue v = f.eval(w);
    ++cases;
    if (domain_values.count(v)) continue;
    Counterexample ce;
    ce.kind = CexKind::Range;
    ce.y = w;
    ce.lhs = v;
    ce.rhs = v;
    ce.note = "value-missing-on-domain";
    return CheckVerdict::refute(bound, std::move(ce));
  }
  return CheckVerdict::pass(bound, cases);
}

CheckVerdict check_m_determined(const VariadicFn& f, int m, int bound) {
  if (m < 0) throw ConfigError("criterion level m must be nonnegative");
  if (bound < m + 1) throw ConfigError("check bound must be at least m + 1");
  const Alphabet& a = *f.alphabet;
  std::map<OutputValue, Word, ValueLess> low_values;
  for (const Word& w : enumerate_words(a, m)) low_values.emplace(f.eval(w), w);
  long long cases = 0;
  for (const Word& w : enumerate_words(a, m + 1)) {
    if (w.size() != static_cast<std::size_t>(m) + 1) continue;
    OutputValue v = f.eval(w);
    ++cases;
    if (low_values.count(v)) continue;
    Counterexample ce;
    ce.kind = CexKind::Range;
    ce.y = w;
    ce.lhs = v;
    ce.rhs = v;
    ce.note = "value-new-at-next-length";
    return CheckVerdict::refute(bound, std::move(ce));
  }
  return CheckVerdict::pass(bound, cases);
}

CheckVerdict check_idempotent_on(const VariadicFn& f, const DomainSet& d, int bound) {
  if (bound < 0) throw ConfigError("check bounds must be nonnegative");
  long long cases = 0;
  for (const Word& w : d.enumerate(bound)) {
    OutputValue fd = f.eval(w);
    ++cases;
    if (!fd.is_word()) {
      Counterexample ce;
      ce.kind = CexKind::Idem;
      ce.y = w;
      ce.lhs = fd;
      ce.rhs = fd;
      ce.note = "value-not-a-word";
      return CheckVerdict::refute(bound, std::move(ce));
    }
    OutputValue ffd = f.eval(fd.word);
    if (ffd == fd) continue;
    Counterexample ce;
    ce.kind = CexKind::Idem;
    ce.y = w;
    ce.lhs = fd;
    ce.rhs = ffd;
    return CheckVerdict::refute(bound, std::move(ce));
  }
  return CheckVerdict::pass(bound, cases);
}

bool replay(const VariadicFn& f, const Counterexample& ce) {
  switch (ce.kind) {
    case CexKind::Eq1: {
      OutputValue fy = f.eval(ce.y);
      if (ce.note == "value-not-a-word") return !fy.is_word();
      if (!fy.is_word()) return false;
      OutputValue lhs = f.eval(concat(ce.x, ce.y, ce.z));
      OutputValue rhs = f.eval(concat(ce.x, fy.word, ce.z));
      return lhs == ce.lhs && rhs == ce.rhs && !(lhs == rhs);
    }
    case CexKind::Eq2: {
      if (!ce.yprime) return false;
      if (!(f.eval(ce.y) == f.eval(*ce.yprime))) return false;
      OutputValue lhs = f.eval(concat(ce.x, ce.y, ce.z));
      OutputValue rhs = f.eval(concat(ce.x, *ce.yprime, ce.z));
      return lhs == ce.lhs && rhs == ce.rhs && !(lhs == rhs);
    }
    case CexKind::Cond3: {
      if (!(f.eval(ce.y) == ce.lhs)) return false;
      if (ce.witness_d) return f.eval(*ce.witness_d) == ce.lhs;
      return true;
    }
    case CexKind::Range:
      return f.eval(ce.y) == ce.lhs;
    case CexKind::Idem: {
      OutputValue fd = f.eval(ce.y);
      if (!(fd == ce.lhs)) return false;
      if (ce.note == "value-not-a-word") return !fd.is_word();
      if (!fd.is_word()) return false;
      OutputValue ffd = f.eval(fd.word);
      return ffd == ce.rhs && !(ffd == fd);
    }
  }
  return false;
}

}  // namespace varfn
