#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tame/rational.hpp"

namespace tame {

inline constexpr int kMaxRank = 3;

/* Element of a totally ordered value group of rational rank <= 3, written
   additively, plus a distinguished absorbing element for |0|.  Multiplicative
   |x| <= 1 corresponds to additive >= 0 under lexicographic order, and the
   absorbing element sits above every group element additively. */
class Value {
public:
    Value() : zero_(true) {}

    explicit Value(std::vector<Rat> exps);

    static Value zero() { return Value(); }
    static Value of(const Rat& a) { return Value(std::vector<Rat>{a}); }
    static Value one(int rank) { return Value(std::vector<Rat>(static_cast<size_t>(rank), Rat(0))); }

    bool is_zero() const { return zero_; }
    int rank() const { return static_cast<int>(exps_.size()); }
    const std::vector<Rat>& exps() const { return exps_; }

    bool operator==(const Value& o) const { return zero_ == o.zero_ && exps_ == o.exps_; }

private:
    bool zero_;
    std::vector<Rat> exps_;
};

Value mul(const Value& a, const Value& b);
Value vinv(const Value& a);

/* Additive lexicographic order; the absorbing element compares greater than
   every group element (multiplicatively smallest). */
std::strong_ordering cmp(const Value& a, const Value& b);

Value root(const Value& a, long long m);

/* |a| <= 1, i.e. additive >= 0 or absorbing. */
bool mult_le_one(const Value& a);

/* "v=(a/b, c/d)" or "v=0". */
std::string value_str(const Value& a);

struct RootSpec {
    Value base;
    long long m;
};

/* Finitely generated subgroup Gamma_A of the ambient group together with the
   adjoined m-th roots that generate Gamma_B over it. */
struct GroupLattice {
    int rank = 1;
    std::vector<Value> generators;
    std::vector<RootSpec> roots;
};

bool in_lattice(const Value& a, const GroupLattice& L);

/* Class of a in Gamma_B/Gamma_A as (i_1,...,i_r), 0 <= i_k < m_k.
   Exhaustive search over the coset representatives. */
std::vector<int> coset_index(const Value& a, const GroupLattice& L);

}  // namespace tame
