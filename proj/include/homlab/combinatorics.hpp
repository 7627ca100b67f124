#pragma once

#include <vector>

namespace homlab {

/// k-subsets of {0..n-1} in colexicographic order (ordered by largest element,
/// then next largest, ...). Each subset is sorted ascending.
class ColexSubsets {
public:
    ColexSubsets(int n, int k) : n_(n), k_(k), done_(k < 0 || k > n) {
        for (int i = 0; i < k && !done_; ++i)
            cur_.push_back(i);
    }

    bool done() const { return done_; }
    const std::vector<int>& current() const { return cur_; }

    void next() {
        if (done_)
            return;
        int i = 0;
        while (i < k_ && (i + 1 < k_ ? cur_[i] + 1 == cur_[i + 1] : cur_[i] + 1 == n_))
            ++i;
        if (i == k_) {
            done_ = true;
            return;
        }
        ++cur_[i];
        for (int j = 0; j < i; ++j)
            cur_[j] = j;
    }

private:
    int n_;
    int k_;
    bool done_;
    std::vector<int> cur_;
};

/// Calls f(subset) for every subset of `items`, by increasing size then colex order.
template <class T, class F>
void for_each_subset_by_size(const std::vector<T>& items, F&& f) {
    const int n = static_cast<int>(items.size());
    std::vector<T> chosen;
    for (int k = 0; k <= n; ++k)
        for (ColexSubsets c(n, k); !c.done(); c.next()) {
            chosen.clear();
            for (int i : c.current())
                chosen.push_back(items[i]);
            if (!f(static_cast<const std::vector<T>&>(chosen)))
                return;
        }
}

} // namespace homlab
