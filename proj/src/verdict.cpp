#include "crankmex/verdict.hpp"

#include <sstream>

namespace crankmex {

Verdict Verdict::passed(std::string name, ParamList params)
{
    return Verdict{std::move(name), std::move(params), true, std::nullopt};
}

Verdict Verdict::failed(std::string name, ParamList params, Counterexample cx)
{
    return Verdict{std::move(name), std::move(params), false, std::move(cx)};
}

std::string to_string(const Verdict& v)
{
    std::ostringstream os;
    os << v.name << (v.pass ? " PASS" : " FAIL");
    for (const auto& [k, val] : v.params)
        os << ' ' << k << '=' << val;
    if (v.counterexample) {
        os << " at";
        for (const auto& [k, val] : v.counterexample->where)
            os << ' ' << k << '=' << val;
        os << " lhs=" << v.counterexample->lhs << " rhs=" << v.counterexample->rhs;
    }
    return os.str();
}

}  // namespace crankmex
