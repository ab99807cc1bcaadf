#include "magma/oracle.hpp"

#include <sstream>

#include "magma/errors.hpp"

namespace magma {

Element CountingOracle::query(Element i, Element j) {
    const int n = table_->size();
    if (i < 0 || i >= n || j < 0 || j >= n) {
        std::ostringstream msg;
        msg << "oracle query (" << i << "," << j << ") out of range for n=" << n;
        throw ParameterViolation(msg.str());
    }
    if (budget_ && count_ >= *budget_) {
        std::ostringstream msg;
        msg << "query budget " << *budget_ << " exhausted";
        throw BudgetExhausted(msg.str());
    }
    ++count_;
    if (logging_) log_.emplace_back(i, j);
    return table_->at(i, j);
}

std::string RunRecord::csv_row() const {
    std::ostringstream out;
    out << algorithm << ',' << n << ',' << k << ',' << r << ',' << trials << ',' << seed << ','
        << verdict << ',' << queries << ',' << wall_ms;
    return out.str();
}

PropertyReport is_associative_counted(CountingOracle& oracle) {
    CachedOracle cached(oracle);
    const int n = oracle.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = cached.read(a, b);
            for (Element c = 0; c < n; ++c) {
                const Element bc = cached.read(b, c);
                if (cached.read(ab, c) != cached.read(a, bc))
                    return {Property::Associative, false, {a, b, c}};
            }
        }
    return {Property::Associative, true, {}};
}

}  // namespace magma
