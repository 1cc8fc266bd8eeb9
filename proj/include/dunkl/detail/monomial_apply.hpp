#pragma once

#include "dunkl/poly.hpp"

#include <functional>
#include <map>
#include <vector>

namespace dunkl::detail {

/// Evaluates sum_e c_e * D^e(start) for the monomials c_e x^e of p, where
/// step(j, f) applies the single factor D_j. Images of every prefix exponent
/// are memoized so monomials sharing factors share work. Within one monomial
/// the factors are applied in `order` (first entry applied first).
template <class Value>
Value apply_monomials(const Poly& p, const Value& start, const std::vector<std::size_t>& order,
                      const std::function<Value(std::size_t, const Value&)>& step, Value zero) {
    std::map<Exponent, Value> memo;
    memo.emplace(Exponent{}, start);
    std::function<const Value&(const Exponent&)> image = [&](const Exponent& e) -> const Value& {
        if (auto it = memo.find(e); it != memo.end()) return it->second;
        std::size_t outer = order.front();
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (e[*it] > 0) {
                outer = *it;
                break;
            }
        Exponent inner = e;
        inner[outer] -= 1;
        Value result = step(outer, image(inner));
        return memo.emplace(e, std::move(result)).first->second;
    };
    Value out = std::move(zero);
    for (const auto& [e, c] : p.terms()) out += image(e) * c;
    return out;
}

} // namespace dunkl::detail
