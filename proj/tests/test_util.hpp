#ifndef TR2DOM_TEST_UTIL_HPP
#define TR2DOM_TEST_UTIL_HPP

#include <utility>
#include <vector>

#include "tr2dom/graph.hpp"

namespace tr2dom::testutil {

inline Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(e));
}

// The order-10 element gadget: x-y path, stars at a and b.
inline Graph element_gadget() {
    return Graph(10, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 7}, {3, 8}, {3, 9}});
}

}  // namespace tr2dom::testutil

#endif
