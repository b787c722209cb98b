#pragma once

#include <stdexcept>
#include <string>

namespace chibound {

// Caller broke an operation's contract (bad vertex, overlapping sets, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds a hard size limit of an exact search.
struct size_error : input_error {
    using input_error::input_error;
};

// Malformed external data. `where` is a 0-based byte offset for binary-ish
// formats (graph6) and a 1-based line number for line formats (DIMACS, JSON).
struct parse_error : std::runtime_error {
    long where;
    parse_error(const std::string& msg, long where_)
        : std::runtime_error(msg + " (at " + std::to_string(where_) + ")"), where(where_) {}
};

// A palette handed to a colouring step was smaller than the piece's clique number.
struct capacity_error : std::runtime_error {
    int needed;
    int available;
    capacity_error(const std::string& what_piece, int needed_, int available_)
        : std::runtime_error("palette too small for " + what_piece + ": need "
                             + std::to_string(needed_) + ", have " + std::to_string(available_)),
          needed(needed_), available(available_) {}
};

// A fact the structure theory guarantees failed to hold at runtime. On
// in-class input this is an implementation bug; on unchecked input it means
// the graph is outside the class. Catchable and inspectable, never a panic.
struct theory_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cooperative cancellation (long oracle searches poll a token).
struct cancelled_error : std::runtime_error {
    cancelled_error() : std::runtime_error("search cancelled") {}
};

} // namespace chibound
