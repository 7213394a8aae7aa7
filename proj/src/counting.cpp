#include "rainbow/counting.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace rainbow {

bool is_rainbow(const EdgeColoring& coloring, std::span<const Vertex> vertices) {
    const int n = coloring.vertex_count();
    for (Vertex v : vertices)
        if (v < 0 || v >= n)
            throw domain_error("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw domain_error("vertex set has a repeated vertex");

    std::vector<char> used(static_cast<std::size_t>(coloring.palette_size()) + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            char& slot = used[static_cast<std::size_t>(coloring.color(sorted[i], sorted[j]))];
            if (slot)
                return false;
            slot = 1;
        }
    return true;
}

namespace {

// Depth-first growth of one worker's share of the t-subsets. Every attempt
// to extend a partial subset counts as one visit against the shared budget;
// the counter is flushed in batches to keep the hot loop cheap.
class Enumerator {
public:
    Enumerator(const EdgeColoring& c, int t, long long budget,
               std::atomic<long long>& spent, std::atomic<bool>& over)
        : c_(c), t_(t), n_(c.vertex_count()), budget_(budget), spent_(spent), over_(over),
          used_(static_cast<std::size_t>(c.palette_size()) + 1, 0) {
        members_.reserve(static_cast<std::size_t>(t));
    }

    void run_root(Vertex v0) {
        note_visit();
        members_.push_back(v0);
        extend(v0 + 1);
        members_.pop_back();
        flush();
    }

    long long rainbow() const noexcept { return rainbow_; }

private:
    void extend(Vertex from) {
        const int missing = t_ - static_cast<int>(members_.size());
        for (Vertex v = from; v <= n_ - missing; ++v) {
            note_visit();
            bool ok = true;
            std::size_t marked = 0;
            for (; marked < members_.size(); ++marked) {
                char& slot = used_[static_cast<std::size_t>(c_.color(members_[marked], v))];
                if (slot) {
                    ok = false;
                    break;
                }
                slot = 1;
            }
            if (ok) {
                if (static_cast<int>(members_.size()) + 1 == t_) {
                    ++rainbow_;
                } else {
                    members_.push_back(v);
                    extend(v + 1);
                    members_.pop_back();
                }
            }
            for (std::size_t i = 0; i < marked; ++i)
                used_[static_cast<std::size_t>(c_.color(members_[i], v))] = 0;
        }
    }

    void note_visit() {
        if (++pending_ >= kFlushEvery)
            flush();
    }

    void flush() {
        if (pending_ > 0) {
            const long long seen = spent_.fetch_add(pending_, std::memory_order_relaxed) + pending_;
            pending_ = 0;
            if (seen > budget_)
                over_.store(true, std::memory_order_relaxed);
        }
        if (over_.load(std::memory_order_relaxed))
            throw resource_error("enumeration budget of " + std::to_string(budget_) +
                                 " partial-subset visits exceeded");
    }

    static constexpr long long kFlushEvery = 4096;

    const EdgeColoring& c_;
    const int t_;
    const int n_;
    const long long budget_;
    std::atomic<long long>& spent_;
    std::atomic<bool>& over_;
    std::vector<char> used_;
    std::vector<Vertex> members_;
    long long rainbow_ = 0;
    long long pending_ = 0;
};

} // namespace

CountResult count_rainbow_complete(const EdgeColoring& coloring, int t, const CountOptions& options) {
    const int n = coloring.vertex_count();
    if (t < 2 || t > n)
        throw domain_error("clique order must be in 2.." + std::to_string(n) + ", got t = " +
                           std::to_string(t));
    if (options.workers < 1)
        throw domain_error("worker count must be >= 1, got " + std::to_string(options.workers));
    if (options.visit_budget < 1)
        throw domain_error("visit budget must be >= 1, got " + std::to_string(options.visit_budget));

    const int workers = std::min(options.workers, n - t + 1);
    std::atomic<long long> spent{0};
    std::atomic<bool> over{false};
    std::vector<long long> rainbow_per_worker(static_cast<std::size_t>(workers), 0);
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));

    auto work = [&](int w) {
        try {
            Enumerator e(coloring, t, options.visit_budget, spent, over);
            for (Vertex v0 = w; v0 <= n - t; v0 += workers)
                e.run_root(v0);
            rainbow_per_worker[static_cast<std::size_t>(w)] = e.rainbow();
        } catch (...) {
            failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
        for (std::thread& th : threads)
            th.join();
    }
    for (const std::exception_ptr& failure : failures)
        if (failure)
            std::rethrow_exception(failure);

    CountResult result;
    result.t = t;
    result.total = binomial(n, t);
    result.rainbow = 0;
    for (long long part : rainbow_per_worker)
        result.rainbow += part;
    result.non_rainbow = result.total - result.rainbow;
    return result;
}

Rational rainbow_proportion(const EdgeColoring& coloring, int t, const CountOptions& options) {
    const CountResult result = count_rainbow_complete(coloring, t, options);
    return Rational(result.rainbow, result.total);
}

} // namespace rainbow
