#include "magma/semigroup_walk.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "magma/errors.hpp"
#include "magma/rng.hpp"

namespace magma {

namespace {

std::vector<Element> non_codomain_elements(int n, const std::vector<Element>& codomain) {
    std::vector<char> in_m(static_cast<std::size_t>(n), 0);
    for (Element x : codomain) in_m[static_cast<std::size_t>(x)] = 1;
    std::vector<Element> out;
    for (Element x = 0; x < n; ++x)
        if (!in_m[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

std::uint64_t binomial_capped(int m, int r, std::uint64_t cap) {
    std::uint64_t c = 1;
    for (int i = 0; i < r; ++i) {
        if (c > cap) break;
        c = c * static_cast<std::uint64_t>(m - i) / static_cast<std::uint64_t>(i + 1);
    }
    return c;
}

std::vector<std::vector<int>> combinations(int m, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - r + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

double epsilon_lower_bound(int n, int k, int r) {
    if (k < 1 || k >= n) throw ParameterViolation("need 1 <= k < n");
    if (r < 1 || r > n - k) throw ParameterViolation("need 1 <= r <= n-k");
    if (r <= k) return 0.0;
    const double frac = static_cast<double>(r - k) / (n - k);
    return frac * frac;
}

MarkedFractionResult semigroup_marked_fraction(const MagmaTable& table, int r, std::size_t cap) {
    const int n = table.size();
    const auto& codomain = table.codomain();
    const int k = static_cast<int>(codomain.size());
    const auto non_m = non_codomain_elements(n, codomain);
    const int m = static_cast<int>(non_m.size());
    if (m < 1) throw ParameterViolation("every element lies in the codomain; no subsets to walk over");
    if (r < 1 || r > m) {
        std::ostringstream msg;
        msg << "subset size r=" << r << " must satisfy 1 <= r <= " << m;
        throw ParameterViolation(msg.str());
    }
    const std::uint64_t count = binomial_capped(m, r, cap);
    if (count * count > cap) {
        std::ostringstream msg;
        msg << "pair count binomial(" << m << "," << r << ")^2 exceeds cap " << cap;
        throw CombinatorialBlowup(msg.str());
    }

    // violating[a*n+b]: some c breaks associativity of (a, b, c).
    std::vector<char> violating(static_cast<std::size_t>(n) * n, 0);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = table.at(a, b);
            for (Element c = 0; c < n; ++c)
                if (table.at(ab, c) != table.at(a, table.at(b, c))) {
                    violating[static_cast<std::size_t>(a) * n + b] = 1;
                    break;
                }
        }

    const auto combos = combinations(m, r);
    // bad_second[i][b]: some first argument in subset i's side (plus codomain)
    // makes (., b) violating.
    std::vector<char> base(static_cast<std::size_t>(n), 0);
    for (Element a : codomain)
        for (Element b = 0; b < n; ++b)
            if (violating[static_cast<std::size_t>(a) * n + b]) base[static_cast<std::size_t>(b)] = 1;
    std::vector<std::vector<char>> bad_second(combos.size(), base);
    for (std::size_t i = 0; i < combos.size(); ++i)
        for (int idx : combos[i]) {
            const Element a = non_m[static_cast<std::size_t>(idx)];
            for (Element b = 0; b < n; ++b)
                if (violating[static_cast<std::size_t>(a) * n + b])
                    bad_second[i][static_cast<std::size_t>(b)] = 1;
        }

    std::vector<std::vector<Element>> side_plus_m(combos.size());
    for (std::size_t j = 0; j < combos.size(); ++j) {
        side_plus_m[j] = codomain;
        for (int idx : combos[j]) side_plus_m[j].push_back(non_m[static_cast<std::size_t>(idx)]);
    }

    MarkedFractionResult result;
    result.total = count * count;
    for (std::size_t i = 0; i < combos.size(); ++i)
        for (std::size_t j = 0; j < combos.size(); ++j) {
            bool hit = false;
            for (Element b : side_plus_m[j])
                if (bad_second[i][static_cast<std::size_t>(b)]) {
                    hit = true;
                    break;
                }
            result.marked += hit ? 1 : 0;
        }
    result.epsilon = static_cast<double>(result.marked) / static_cast<double>(result.total);
    return result;
}

WalkDatabase::WalkDatabase(CountingOracle& oracle, std::vector<Element> a_side, std::vector<Element> b_side)
    : oracle_(&oracle),
      a_(std::move(a_side)),
      b_(std::move(b_side)),
      cache_(static_cast<std::size_t>(oracle.size()) * oracle.size(), -1),
      n_(oracle.size()) {
    const auto check_side = [&](const std::vector<Element>& side, const char* name) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (Element x : side) {
            if (x < 0 || x >= n_) throw ParameterViolation("walk position element out of range");
            if (oracle_->in_codomain(x)) {
                std::ostringstream msg;
                msg << name << " side holds codomain element " << x << "; positions range over the rest";
                throw ParameterViolation(msg.str());
            }
            if (seen[static_cast<std::size_t>(x)]) throw ParameterViolation("walk position repeats an element");
            seen[static_cast<std::size_t>(x)] = 1;
        }
        if (side.empty()) throw ParameterViolation("walk position must be nonempty");
    };
    check_side(a_, "a");
    check_side(b_, "b");
    rebuild_axes();
    for (Element a : rows_) fetch_row(a);
}

void WalkDatabase::rebuild_axes() {
    rows_ = oracle_->codomain();
    rows_.insert(rows_.end(), a_.begin(), a_.end());
    std::sort(rows_.begin(), rows_.end());
    cols_ = oracle_->codomain();
    cols_.insert(cols_.end(), b_.begin(), b_.end());
    std::sort(cols_.begin(), cols_.end());
}

Element WalkDatabase::read(Element i, Element j) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw ParameterViolation("database read out of range");
    Element& slot = cache_[static_cast<std::size_t>(i) * n_ + j];
    if (slot < 0) slot = oracle_->query(i, j);
    return slot;
}

bool WalkDatabase::known(Element i, Element j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw ParameterViolation("database read out of range");
    return cache_[static_cast<std::size_t>(i) * n_ + j] >= 0;
}

void WalkDatabase::fetch_row(Element a) {
    for (Element b : cols_) read(a, b);
}

void WalkDatabase::fetch_col(Element b) {
    for (Element a : rows_) read(a, b);
}

void WalkDatabase::exchange_a(Element out, Element in) {
    auto it = std::find(a_.begin(), a_.end(), out);
    if (it == a_.end()) throw ParameterViolation("exchange source not in walk position");
    if (std::find(a_.begin(), a_.end(), in) != a_.end())
        throw ParameterViolation("exchange target already in walk position");
    if (in < 0 || in >= n_ || oracle_->in_codomain(in))
        throw ParameterViolation("exchange target must be a non-codomain element");
    *it = in;
    rebuild_axes();
    fetch_row(in);
}

void WalkDatabase::exchange_b(Element out, Element in) {
    auto it = std::find(b_.begin(), b_.end(), out);
    if (it == b_.end()) throw ParameterViolation("exchange source not in walk position");
    if (std::find(b_.begin(), b_.end(), in) != b_.end())
        throw ParameterViolation("exchange target already in walk position");
    if (in < 0 || in >= n_ || oracle_->in_codomain(in))
        throw ParameterViolation("exchange target must be a non-codomain element");
    *it = in;
    rebuild_axes();
    fetch_col(in);
}

std::optional<std::array<Element, 3>> WalkDatabase::find_violation() {
    for (Element a : rows_)
        for (Element b : cols_) {
            const Element ab = read(a, b);
            for (Element c = 0; c < n_; ++c) {
                const Element bc = read(b, c);
                if (read(ab, c) != read(a, bc)) return std::array<Element, 3>{a, b, c};
            }
        }
    return std::nullopt;
}

bool WalkDatabase::verify_against(const MagmaTable& table) const {
    if (table.size() != n_) return false;
    for (Element i = 0; i < n_; ++i)
        for (Element j = 0; j < n_; ++j) {
            const Element v = cache_[static_cast<std::size_t>(i) * n_ + j];
            if (v >= 0 && v != table.at(i, j)) return false;
        }
    return true;
}

std::uint64_t WalkDatabase::queries() const { return oracle_->count(); }

WalkEmulationResult semigroup_walk_emulation(CountingOracle& oracle, int r, std::uint64_t seed) {
    const int n = oracle.size();
    const int k = oracle.codomain_size();
    const auto non_m = non_codomain_elements(n, oracle.codomain());
    const int m = static_cast<int>(non_m.size());
    if (r <= 2 * k) {
        std::ostringstream msg;
        msg << "subset size r=" << r << " must exceed twice the codomain size " << k;
        throw ParameterViolation(msg.str());
    }
    if (r >= m) {
        std::ostringstream msg;
        msg << "subset size r=" << r << " must be below the non-codomain count " << m;
        throw ParameterViolation(msg.str());
    }

    WalkEmulationResult result;
    result.delta = static_cast<double>(m) / (static_cast<double>(r) * (m - r));
    const double frac = static_cast<double>(r - k) / m;
    result.eps_bound = frac * frac;
    result.step_budget = static_cast<int>(std::ceil(1.0 / (result.delta * result.eps_bound)));

    WalkCosts costs;
    costs.setup = static_cast<double>(r + k) * (r + k);
    costs.update = static_cast<double>(r + k);
    costs.check = static_cast<double>(k) * std::ceil(std::sqrt(static_cast<double>(n) * r));
    result.quantum_cost = mnrs_cost(costs, result.delta, result.eps_bound);

    SplitMix64 rng(seed);
    const auto draw_subset = [&]() {
        std::vector<Element> pool = non_m;
        for (int i = 0; i < r; ++i) {
            const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        pool.resize(static_cast<std::size_t>(r));
        return pool;
    };
    WalkDatabase db(oracle, draw_subset(), draw_subset());
    result.charged_cost = costs.setup + costs.check;

    const auto record_hit = [&](const std::array<Element, 3>& w, int step) {
        result.violation_found = true;
        result.witness = w;
        result.steps_taken = step;
    };
    if (auto w = db.find_violation()) {
        record_hit(*w, 0);
    } else {
        for (int t = 1; t <= result.step_budget; ++t) {
            const bool move_a = rng.below(2) == 0;
            const auto& side = move_a ? db.a_side() : db.b_side();
            const Element out = side[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(r)))];
            std::vector<Element> pool;
            pool.reserve(static_cast<std::size_t>(m - r));
            for (Element x : non_m)
                if (std::find(side.begin(), side.end(), x) == side.end()) pool.push_back(x);
            const Element in = pool[static_cast<std::size_t>(rng.below(pool.size()))];
            if (move_a)
                db.exchange_a(out, in);
            else
                db.exchange_b(out, in);
            result.charged_cost += costs.update + costs.check;
            if (auto w = db.find_violation()) {
                record_hit(*w, t);
                break;
            }
            result.steps_taken = t;
        }
    }
    result.queries = oracle.count();
    return result;
}

}  // namespace magma
