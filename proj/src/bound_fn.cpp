#include "largesets/bound_fn.hpp"

#include <algorithm>
#include <stdexcept>

namespace largesets {

BoundFn BoundFn::successor() {
    return BoundFn{"succ", [](int x) { return x + 1; }};
}

BoundFn BoundFn::constant(int c) {
    return BoundFn{"const:" + std::to_string(c), [c](int) { return c; }};
}

BoundFn BoundFn::plus(int c) {
    return BoundFn{"plus:" + std::to_string(c), [c](int x) { return x + c; }};
}

BoundFn BoundFn::capped_successor(int cap) {
    return BoundFn{"cap:" + std::to_string(cap),
                   [cap](int x) { return std::min(x + 1, cap); }};
}

BoundFn BoundFn::parse(const std::string& text) {
    if (text == "succ") return successor();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const int arg = std::stoi(text.substr(colon + 1));
        if (head == "const") return constant(arg);
        if (head == "plus") return plus(arg);
        if (head == "cap") return capped_successor(arg);
    }
    throw std::invalid_argument("BoundFn::parse: unknown bound '" + text + "'");
}

}  // namespace largesets
