#pragma once

#include <stdexcept>
#include <string>

namespace balgraph {

/// A brute-force routine was asked to exceed its configured search bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace balgraph
