#pragma once

#include <stdexcept>
#include <string>

namespace pmcut {

// Input document is malformed. line/col are 1-based; col 0 means "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0, int col = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                            (col > 0 ? ", col " + std::to_string(col) : "") +
                                            ": " + msg
                                      : msg),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// An arc (tail,head) already exists in the network.
class DuplicateArcError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A capacity evaluated to a negative value at the query point.
class NegativeCapacityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A flow assignment refers to arcs the network does not have, or misses some.
class MissingArcError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was asked to enumerate more state than its configured bound allows.
class LimitExceededError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter path is not componentwise non-decreasing.
class NotMonotonePathError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The network does not satisfy the monotonicity class an operation requires.
class NotSsmError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two distinct cuts produced cells with overlapping interiors.
class CellOverlapError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pmcut
