#pragma once

#include <functional>
#include <string>

namespace largesets {

/// A named function N -> N used as a barrier bound or constraint bound.
/// The name travels into reports so that runs are reproducible from their
/// output alone.
struct BoundFn {
    std::string name;
    std::function<int(int)> fn;

    int operator()(int x) const { return fn(x); }

    static BoundFn successor();          // x + 1
    static BoundFn constant(int c);      // c
    static BoundFn plus(int c);          // x + c
    static BoundFn capped_successor(int cap);  // min(x + 1, cap)

    /// Parses "succ", "const:c", "plus:c", "cap:c".
    static BoundFn parse(const std::string& text);
};

}  // namespace largesets
