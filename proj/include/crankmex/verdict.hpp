#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crankmex {

/// Ordered key/value list; insertion order is the serialization order.
using ParamList = std::vector<std::pair<std::string, std::string>>;

/// Location of a mismatch plus the two values that disagree there.
struct Counterexample {
    ParamList where;  // e.g. {"k","2"},{"n","7"}
    std::string lhs;
    std::string rhs;
};

/// Outcome of one mechanical check. A failing verdict always carries a
/// counterexample whose two values differ.
struct Verdict {
    std::string name;
    ParamList params;
    bool pass = true;
    std::optional<Counterexample> counterexample;

    static Verdict passed(std::string name, ParamList params);
    static Verdict failed(std::string name, ParamList params, Counterexample cx);
};

std::string to_string(const Verdict& v);

}  // namespace crankmex
