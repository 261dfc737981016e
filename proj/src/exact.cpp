// Copyright 2026 The qreuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qreuse/exact.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_map>

#include "qreuse/errors.hpp"
#include "qreuse/greedy.hpp"

namespace qreuse {

namespace {

using Clock = std::chrono::steady_clock;

struct BitsetHash {
    size_t operator()(const Bitset &b) const { return b.hash(); }
};

constexpr size_t kMaxTableEntries = size_t{1} << 22;

class BranchAndBound {
   public:
    BranchAndBound(const ConeMap &cones, Clock::time_point deadline)
        : cones_(cones), n_(cones.outputs.size()), deadline_(deadline) {
        cone_.reserve(n_);
        for (QubitId q : cones.outputs) {
            cone_.push_back(&cones.inputs[q]);
        }
        // Outputs with identical cones are interchangeable; class id is the
        // smallest dense index carrying that cone.
        klass_.resize(n_);
        std::unordered_map<size_t, std::vector<uint32_t>> by_hash;
        for (uint32_t i = 0; i < n_; i++) {
            klass_[i] = i;
            auto &bucket = by_hash[cone_[i]->hash()];
            for (uint32_t j : bucket) {
                if (*cone_[j] == *cone_[i]) {
                    klass_[i] = j;
                    break;
                }
            }
            if (klass_[i] == i) {
                bucket.push_back(i);
            }
        }
    }

    void set_incumbent(size_t width, std::vector<uint32_t> order) {
        best_width_ = width;
        best_order_ = std::move(order);
    }

    void run() {
        Bitset used(cones_.num_qubits);
        Bitset done(n_);
        path_.clear();
        dfs(used, 0, done, 0, 0);
    }

    bool timed_out() const { return timed_out_; }
    uint64_t nodes() const { return nodes_; }
    size_t best_width() const { return best_width_; }
    const std::vector<uint32_t> &best_order() const { return best_order_; }

   private:
    struct Child {
        size_t added;
        uint32_t index;
    };

    void apply(uint32_t i, Bitset &used, size_t &used_count, Bitset &done, size_t &t, size_t &live_max) {
        used_count += cone_[i]->count_minus(used);
        used |= *cone_[i];
        live_max = std::max(live_max, used_count - t);
        done.set(i);
        path_.push_back(i);
        t++;
    }

    // Outputs whose cone lies inside the used set cost nothing and only shrink
    // later live counts, so they are measured at once in index order.
    void take_free(Bitset &used, size_t &used_count, Bitset &done, size_t &t, size_t &live_max) {
        for (uint32_t j = 0; j < n_; j++) {
            if (!done.test(j) && cone_[j]->is_subset_of(used)) {
                apply(j, used, used_count, done, t, live_max);
            }
        }
    }

    void dfs(const Bitset &used, size_t used_count, const Bitset &done, size_t t, size_t live_max) {
        if (timed_out_) {
            return;
        }
        if ((nodes_++ & 1023) == 0 && Clock::now() >= deadline_) {
            timed_out_ = true;
            return;
        }
        if (t == n_) {
            if (live_max < best_width_) {
                best_width_ = live_max;
                best_order_ = path_;
            }
            return;
        }
        auto seen = table_.find(done);
        if (seen != table_.end()) {
            if (seen->second <= live_max) {
                return;
            }
            seen->second = live_max;
        } else if (table_.size() < kMaxTableEntries) {
            table_.emplace(done, live_max);
        }

        std::vector<Child> children;
        std::vector<bool> class_taken(n_, false);
        for (uint32_t i = 0; i < n_; i++) {
            if (done.test(i) || class_taken[klass_[i]]) {
                continue;
            }
            class_taken[klass_[i]] = true;
            size_t added = cone_[i]->count_minus(used);
            size_t live = used_count + added - t;
            if (std::max(live_max, live) >= best_width_) {
                continue;
            }
            children.push_back({added, i});
        }
        std::sort(children.begin(), children.end(), [](const Child &a, const Child &b) {
            return a.added != b.added ? a.added < b.added : a.index < b.index;
        });

        const size_t depth = path_.size();
        for (const Child &child : children) {
            if (std::max(live_max, used_count + child.added - t) >= best_width_) {
                continue;  // incumbent improved since the child list was built
            }
            Bitset next_used = used;
            Bitset next_done = done;
            size_t next_count = used_count;
            size_t next_t = t;
            size_t next_max = live_max;
            apply(child.index, next_used, next_count, next_done, next_t, next_max);
            take_free(next_used, next_count, next_done, next_t, next_max);
            dfs(next_used, next_count, next_done, next_t, next_max);
            path_.resize(depth);
            if (timed_out_) {
                return;
            }
        }
    }

    const ConeMap &cones_;
    size_t n_;
    Clock::time_point deadline_;
    std::vector<const Bitset *> cone_;
    std::vector<uint32_t> klass_;
    std::unordered_map<Bitset, size_t, BitsetHash> table_;
    std::vector<uint32_t> path_;
    size_t best_width_ = SIZE_MAX;
    std::vector<uint32_t> best_order_;
    uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

std::vector<uint32_t> to_dense(const ConeMap &cones, const std::vector<QubitId> &order) {
    std::vector<uint32_t> dense;
    dense.reserve(order.size());
    for (QubitId q : order) {
        auto it = std::lower_bound(cones.outputs.begin(), cones.outputs.end(), q);
        dense.push_back(static_cast<uint32_t>(it - cones.outputs.begin()));
    }
    return dense;
}

}  // namespace

ExactResult exact_order(const ConeMap &cones, const ExactOptions &options) {
    if (!(options.time_limit > 0)) {
        throw std::invalid_argument("time limit must be positive");
    }
    auto start = Clock::now();
    auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(std::min(options.time_limit, 1e9)));
    BranchAndBound search(cones, deadline);

    const size_t n = cones.outputs.size();
    if (options.hint) {
        size_t w = width_of_order(cones, *options.hint);
        search.set_incumbent(w, to_dense(cones, *options.hint));
    } else if (options.seed_with_greedy) {
        OrderResult seed = greedy_brute_first(cones);
        search.set_incumbent(seed.width(), to_dense(cones, seed.order.order));
    } else {
        search.set_incumbent(n + 1, {});
    }
    search.run();

    if (search.best_order().size() != n) {
        throw SearchTimeout("exact search timed out before finding a feasible order");
    }
    ExactResult result;
    for (uint32_t i : search.best_order()) {
        result.order.order.push_back(cones.outputs[i]);
    }
    result.order.width = search.best_width();
    result.optimal = !search.timed_out();
    result.nodes_explored = search.nodes();
    result.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

ExactResult brute_force_order(const ConeMap &cones) {
    const size_t n = cones.outputs.size();
    if (n > 9) {
        throw std::invalid_argument("brute force supports at most 9 outputs, got " + std::to_string(n));
    }
    auto start = Clock::now();
    std::vector<QubitId> perm = cones.outputs;
    ExactResult result;
    result.optimal = true;
    result.order.width = SIZE_MAX;
    do {
        result.nodes_explored++;
        size_t w = width_of_order(cones, perm);
        if (w < result.order.width) {
            result.order.width = w;
            result.order.order = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) {
        result.order.width = 0;
    }
    result.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

ReuseAssignment assignment_from_order(const ConeMap &cones, const std::vector<QubitId> &order) {
    require_permutation(cones, order);
    const size_t n = cones.outputs.size();
    std::vector<uint32_t> dense = to_dense(cones, order);
    ReuseAssignment a;
    a.m.assign(n, std::vector<uint8_t>(n, 0));
    a.c.assign(n, std::vector<uint8_t>(n, 0));
    Bitset used(cones.num_qubits);
    std::vector<bool> measured(n, false);
    for (size_t t = 0; t < n; t++) {
        a.m[dense[t]][t] = 1;
        used |= cones.inputs[order[t]];
        int64_t live = 0;
        for (size_t j = 0; j < n; j++) {
            if (!measured[j] && used.test(cones.outputs[j])) {
                a.c[j][t] = 1;
                live++;
            }
        }
        a.cost = std::max(a.cost, live);
        measured[dense[t]] = true;
    }
    return a;
}

std::vector<ConstraintViolation> check_constraints(const ConeMap &cones, const ReuseAssignment &a) {
    const size_t n = cones.outputs.size();
    std::vector<ConstraintViolation> out;
    auto fail = [&](int id, std::string detail) { out.push_back({id, std::move(detail)}); };
    auto at = [](size_t q, size_t t) { return "q=" + std::to_string(q) + " t=" + std::to_string(t); };
    if (a.m.size() != n || a.c.size() != n) {
        fail(0, "assignment shape does not match output count");
        return out;
    }
    auto dense_of = [&](QubitId q) {
        return static_cast<size_t>(std::lower_bound(cones.outputs.begin(), cones.outputs.end(), q) -
                                   cones.outputs.begin());
    };

    for (size_t t = 0; t < n; t++) {
        int64_t live = 0;
        for (size_t q = 0; q < n; q++) {
            live += a.c[q][t];
        }
        if (a.cost < live) {
            fail(1, "cost " + std::to_string(a.cost) + " < " + std::to_string(live) + " live at t=" + std::to_string(t));
        }
    }
    for (size_t q = 0; q < n; q++) {
        for (size_t t = 0; t < n; t++) {
            if (!a.m[q][t]) {
                continue;
            }
            cones.inputs[cones.outputs[q]].for_each([&](size_t j_qubit) {
                size_t j = dense_of(static_cast<QubitId>(j_qubit));
                int64_t sum = 0;
                for (size_t i = 0; i <= t; i++) {
                    sum += a.c[j][i];
                }
                if (sum < 1) {
                    fail(2, at(q, t) + ": cone member " + std::to_string(j_qubit) + " never needed");
                }
            });
            if (!a.c[q][t]) {
                fail(4, at(q, t) + ": measured but not needed");
            }
            for (size_t i = t + 1; i < n; i++) {
                if (a.c[q][i]) {
                    fail(5, at(q, t) + ": still needed at t=" + std::to_string(i));
                    break;
                }
            }
        }
    }
    for (size_t q = 0; q < n; q++) {
        for (size_t t = 1; t < n; t++) {
            if (a.c[q][t - 1] && a.m[q][t - 1] + a.c[q][t] != 1) {
                fail(3, at(q, t) + ": liveness not carried from t-1");
            }
        }
    }
    for (size_t q = 0; q < n; q++) {
        int64_t s = 0;
        for (size_t t = 0; t < n; t++) {
            s += a.m[q][t];
        }
        if (s != 1) {
            fail(6, "q=" + std::to_string(q) + " measured " + std::to_string(s) + " times");
        }
    }
    for (size_t t = 0; t < n; t++) {
        int64_t s = 0;
        for (size_t q = 0; q < n; q++) {
            s += a.m[q][t];
        }
        if (s != 1) {
            fail(7, "t=" + std::to_string(t) + " has " + std::to_string(s) + " measurements");
        }
    }
    return out;
}

}  // namespace qreuse
