#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>

#include "latcover/solve.hpp"

namespace latcover {

struct InfiniteQuotientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Z^n modulo the column span of a relation matrix, with a canonical normal
// form for coset representatives: in the row basis given by u, coordinate i
// is reduced mod d_i into [0, d_i) when d_i > 0 and left alone when the
// direction is free; the result is mapped back through u_inv.  Two vectors
// represent the same class exactly when their normal forms coincide, and the
// normal form of anything in the span is zero.
class QuotientModule {
  public:
    QuotientModule() = default;
    QuotientModule(std::size_t ambient_rank, IntMatrix relations)
        : n_(ambient_rank), relations_(std::move(relations)) {
        if (relations_.rows != n_)
            throw std::invalid_argument("QuotientModule: relation rows must match rank");
        snf_ = smith_normal_form(relations_);
        std::size_t m = std::min(relations_.rows, relations_.cols);
        for (std::size_t i = 0; i < n_; ++i) {
            Int di = i < m ? snf_.d.at(i, i) : Int(0);
            if (di > 1) torsion_.push_back(di);
            if (di == 0) ++free_rank_;
        }
    }

    std::size_t ambient_rank() const { return n_; }
    const IntMatrix& relations() const { return relations_; }

    // invariant factors > 1, in divisibility order
    const IntVec& torsion() const { return torsion_; }
    std::size_t free_rank() const { return free_rank_; }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    Int order() const {
        if (!is_finite()) throw InfiniteQuotientError("quotient module has free rank");
        Int o = 1;
        for (const Int& t : torsion_) o *= t;
        return o;
    }

    IntVec normal_form(const IntVec& v) const {
        if (v.size() != n_) throw std::invalid_argument("normal_form: length mismatch");
        IntVec y = snf_.u * v;
        std::size_t m = std::min(relations_.rows, relations_.cols);
        for (std::size_t i = 0; i < n_; ++i) {
            Int di = i < m ? snf_.d.at(i, i) : Int(0);
            if (di > 0) {
                y[i] %= di;
                if (y[i] < 0) y[i] += di;
            }
        }
        return snf_.u_inv * y;
    }

    bool same_class(const IntVec& a, const IntVec& b) const {
        return normal_form(a) == normal_form(b);
    }
    bool is_zero_class(const IntVec& v) const { return is_zero_vec(normal_form(v)); }

    // all classes, as normal forms sorted lexicographically; finite case only
    std::vector<IntVec> enumerate() const {
        if (!is_finite())
            throw InfiniteQuotientError(
                "cannot enumerate cosets: quotient has free rank " + std::to_string(free_rank_));
        std::size_t m = std::min(relations_.rows, relations_.cols);
        std::vector<IntVec> out{IntVec(n_)};
        for (std::size_t i = 0; i < n_; ++i) {
            Int di = i < m ? snf_.d.at(i, i) : Int(0);
            if (di <= 1) continue;
            std::vector<IntVec> next;
            next.reserve(out.size() * static_cast<std::size_t>(di));
            for (const IntVec& y : out)
                for (Int r = 0; r < di; ++r) {
                    IntVec y2 = y;
                    y2[i] = r;
                    next.push_back(std::move(y2));
                }
            out = std::move(next);
        }
        for (IntVec& y : out) y = snf_.u_inv * y;
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const QuotientModule& o) const {
        return n_ == o.n_ && relations_ == o.relations_;
    }

  private:
    std::size_t n_ = 0;
    IntMatrix relations_;
    SnfDecomposition snf_;
    IntVec torsion_;
    std::size_t free_rank_ = 0;
};

// a class in a quotient module, always stored in normal form
struct QuotElement {
    const QuotientModule* parent = nullptr;
    IntVec rep;

    bool operator==(const QuotElement& o) const {
        return parent == o.parent ? rep == o.rep
                                  : (parent && o.parent && *parent == *o.parent && rep == o.rep);
    }
};

inline QuotElement project(const QuotientModule& q, const IntVec& v) {
    return QuotElement{&q, q.normal_form(v)};
}

// a full system of coset representatives, with reverse lookup
class CosetSystem {
  public:
    CosetSystem() = default;
    explicit CosetSystem(QuotientModule q) : q_(std::make_shared<QuotientModule>(std::move(q))) {
        reps_ = q_->enumerate();
        for (std::size_t i = 0; i < reps_.size(); ++i) index_[reps_[i]] = i;
    }

    const QuotientModule& quotient() const { return *q_; }
    const std::vector<IntVec>& reps() const { return reps_; }
    std::size_t size() const { return reps_.size(); }
    const IntVec& rep(std::size_t j) const { return reps_.at(j); }

    std::size_t index_of(const IntVec& v) const {
        auto it = index_.find(q_->normal_form(v));
        if (it == index_.end())
            throw std::logic_error("coset lookup failed for " + vec_to_string(v));
        return it->second;
    }

  private:
    std::shared_ptr<QuotientModule> q_;
    std::vector<IntVec> reps_;
    std::map<IntVec, std::size_t> index_;
};

// representatives of Z^rank modulo the columns of relations
inline CosetSystem coset_reps(std::size_t rank, const IntMatrix& relations) {
    return CosetSystem(QuotientModule(rank, relations));
}

}  // namespace latcover
