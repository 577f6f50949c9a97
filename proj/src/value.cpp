#include "tame/value.hpp"

#include <sstream>

#include "tame/errors.hpp"

namespace tame {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) fail("ParseError", "zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        fail("ParseError", "bad rational '" + s + "'");
    } catch (const std::out_of_range&) {
        fail("ParseError", "rational out of range '" + s + "'");
    }
}

Value::Value(std::vector<Rat> exps) : zero_(false), exps_(std::move(exps)) {
    if (exps_.empty() || exps_.size() > kMaxRank)
        fail("RankMismatch", "value rank must be between 1 and " + std::to_string(kMaxRank));
}

Value mul(const Value& a, const Value& b) {
    if (a.is_zero() || b.is_zero()) return Value::zero();
    if (a.rank() != b.rank())
        fail("RankMismatch", "cannot multiply values of rank " + std::to_string(a.rank()) +
                                 " and " + std::to_string(b.rank()));
    std::vector<Rat> e(a.exps());
    for (size_t i = 0; i < e.size(); ++i) e[i] += b.exps()[i];
    return Value(std::move(e));
}

Value vinv(const Value& a) {
    if (a.is_zero()) fail("RankMismatch", "absorbing element has no inverse");
    std::vector<Rat> e(a.exps());
    for (auto& x : e) x = -x;
    return Value(std::move(e));
}

std::strong_ordering cmp(const Value& a, const Value& b) {
    if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
    if (a.is_zero()) return std::strong_ordering::greater;
    if (b.is_zero()) return std::strong_ordering::less;
    if (a.rank() != b.rank())
        fail("RankMismatch", "cannot compare values of rank " + std::to_string(a.rank()) +
                                 " and " + std::to_string(b.rank()));
    for (int i = 0; i < a.rank(); ++i) {
        if (a.exps()[i] < b.exps()[i]) return std::strong_ordering::less;
        if (a.exps()[i] > b.exps()[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Value root(const Value& a, long long m) {
    if (m < 1) fail("RankMismatch", "root index must be >= 1");
    if (a.is_zero()) return a;
    std::vector<Rat> e(a.exps());
    for (auto& x : e) x /= m;
    return Value(std::move(e));
}

bool mult_le_one(const Value& a) {
    if (a.is_zero()) return true;
    return cmp(a, Value::one(a.rank())) != std::strong_ordering::less;
}

std::string value_str(const Value& a) {
    if (a.is_zero()) return "v=0";
    std::string s = "v=(";
    for (int i = 0; i < a.rank(); ++i) {
        if (i) s += ", ";
        s += rat_str(a.exps()[i]);
    }
    return s + ")";
}

namespace {

/* Solves G x = target over Q for independent generator columns and checks
   integrality of x.  Rank <= 3 keeps plain elimination exact and cheap. */
bool lattice_solve(const std::vector<Value>& gens, const std::vector<Rat>& target) {
    size_t r = target.size(), n = gens.size();
    if (n == 0) {
        for (const auto& c : target)
            if (c != 0) return false;
        return true;
    }
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(n + 1, Rat(0)));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = gens[j].exps()[i];
        m[i][n] = target[i];
    }
    std::vector<int> pivot_col(r, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < r; ++col) {
        size_t pr = row;
        while (pr < r && m[pr][col] == 0) ++pr;
        if (pr == r) continue;
        std::swap(m[row], m[pr]);
        Rat inv = Rat(1) / m[row][col];
        for (size_t j = col; j <= n; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < r; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    for (size_t i = row; i < r; ++i)
        if (m[i][n] != 0) return false;
    /* Columns without a pivot would make membership ambiguous; the desk
       instances always pass independent generators. */
    for (size_t col = 0, pc = 0; col < n; ++col) {
        bool is_pivot = pc < row && pivot_col[pc] == static_cast<int>(col);
        if (is_pivot) {
            if (m[pc][n].denominator() != 1) return false;
            ++pc;
        } else {
            fail("NotInGroup", "lattice generators are linearly dependent");
        }
    }
    return true;
}

}  // namespace

bool in_lattice(const Value& a, const GroupLattice& L) {
    if (a.is_zero()) return false;
    if (a.rank() != L.rank) fail("RankMismatch", "value rank differs from lattice rank");
    for (const auto& g : L.generators)
        if (g.is_zero() || g.rank() != L.rank)
            fail("RankMismatch", "lattice generator of wrong rank");
    return lattice_solve(L.generators, a.exps());
}

std::vector<int> coset_index(const Value& a, const GroupLattice& L) {
    if (a.is_zero()) fail("NotInGroup", "absorbing element has no coset");
    if (a.rank() != L.rank) fail("RankMismatch", "value rank differs from lattice rank");
    size_t r = L.roots.size();
    std::vector<int> idx(r, 0);
    while (true) {
        std::vector<Rat> target(a.exps());
        for (size_t k = 0; k < r; ++k) {
            const auto& rs = L.roots[k];
            if (rs.base.is_zero() || rs.base.rank() != a.rank() || rs.m < 1)
                fail("RankMismatch", "malformed root declaration in lattice");
            for (int i = 0; i < a.rank(); ++i) target[i] -= rs.base.exps()[i] * Rat(idx[k], rs.m);
        }
        if (lattice_solve(L.generators, target)) return idx;
        size_t k = 0;
        while (k < r && ++idx[k] == L.roots[k].m) idx[k++] = 0;
        if (k == r) fail("NotInGroup", "value " + value_str(a) + " lies outside the spanned group");
    }
}

}  // namespace tame
