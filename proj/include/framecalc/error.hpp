#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace framecalc {

enum class Errc {
    cycle_detected,
    index_out_of_range,
    not_a_lattice,
    not_distributive,
    not_a_hom,
    frame_mismatch,
    size_budget_exceeded,
    space_mismatch,
    not_a_biframe,
    not_t0,
    not_injective,
    no_least_witness,
    unknown_name,
    parse_error,
    validation_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}

    Errc code() const { return code_; }

    /// Offending elements, when the failure has a finite witness.
    std::vector<int> witness;
    /// Input position for parse errors (1-based, 0 = unknown).
    int line = 0;
    int column = 0;
    /// Predicted size for budget failures.
    size_t predicted = 0;

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

[[noreturn]] inline void fail_witness(Errc code, const std::string& msg, std::vector<int> w) {
    Error e(code, msg);
    e.witness = std::move(w);
    throw e;
}

[[noreturn]] inline void fail_budget(const std::string& msg, size_t predicted) {
    Error e(Errc::size_budget_exceeded, msg);
    e.predicted = predicted;
    throw e;
}

[[noreturn]] inline void fail_parse(const std::string& msg, int line, int column) {
    Error e(Errc::parse_error, msg);
    e.line = line;
    e.column = column;
    throw e;
}

}  // namespace framecalc
