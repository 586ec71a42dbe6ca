#pragma once

// Elements of A, A (x) A and A (x) A (x) A over a presented algebra A, stored
// on the basis of normal-word tuples. Arity 0 is the scalar field.

#include "hoe/algebra.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hoe {

class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t max_tensor_arity = 3;

class Tensor {
public:
    using Key = std::vector<Word>;
    using TermMap = std::map<Key, Scalar>;

    Tensor() = default;
    Tensor(AlgebraPtr alg, std::size_t arity) : alg_(std::move(alg)), arity_(arity)
    {
        if (arity_ > max_tensor_arity) throw ArityError("tensor arity " + std::to_string(arity_) + " exceeds 3");
    }

    static Tensor scalar(AlgebraPtr alg, const Scalar& c)
    {
        Tensor t(std::move(alg), 0);
        t.add_term({}, c);
        return t;
    }
    static Tensor unit(AlgebraPtr alg, std::size_t arity)
    {
        Tensor t(std::move(alg), arity);
        t.add_term(Key(arity), Scalar(1));
        return t;
    }
    static Tensor basis(AlgebraPtr alg, Key key, const Scalar& c = Scalar(1))
    {
        Tensor t(std::move(alg), key.size());
        t.add_term(std::move(key), c);
        return t;
    }
    static Tensor from_elem(const Elem& e)
    {
        Tensor t(e.algebra(), 1);
        for (const auto& [w, c] : e.poly().terms()) t.add_term({w}, c);
        return t;
    }
    /// e_1 (x) ... (x) e_n for elements of one algebra.
    static Tensor pure(const std::vector<Elem>& parts)
    {
        if (parts.empty()) throw ArityError("pure tensor needs at least one factor");
        Tensor t = from_elem(parts.front());
        for (std::size_t i = 1; i < parts.size(); ++i) t = outer(t, from_elem(parts[i]));
        return t;
    }

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Key k, const Scalar& c)
    {
        if (k.size() != arity_) throw ArityError("term arity does not match tensor arity");
        if (::hoe::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (::hoe::is_zero(it->second)) terms_.erase(it);
        }
    }

    Scalar coeff(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    Tensor& operator+=(const Tensor& o)
    {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o)
    {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    Tensor& operator*=(const Scalar& c)
    {
        if (::hoe::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator-(Tensor a) { return a *= Scalar(-1); }
    friend Tensor operator*(const Scalar& c, Tensor a) { return a *= c; }

    /// Slotwise product (a (x) b)(c (x) d) = ac (x) bd.
    friend Tensor operator*(const Tensor& a, const Tensor& b)
    {
        a.check(b);
        const AlgebraPtr& alg = a.alg_ ? a.alg_ : b.alg_;
        Tensor r(alg, a.arity_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Tensor prod = Tensor::scalar(alg, ca * cb);
                for (std::size_t i = 0; i < a.arity_; ++i)
                    prod = outer(prod, from_poly(alg, alg->multiply_words(ka[i], kb[i])));
                r += prod;
            }
        return r;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    /// Outer product: concatenates slots.
    friend Tensor outer(const Tensor& a, const Tensor& b)
    {
        const AlgebraPtr& alg = a.alg_ ? a.alg_ : b.alg_;
        Tensor r(alg, a.arity_ + b.arity_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Key k = ka;
                k.insert(k.end(), kb.begin(), kb.end());
                r.add_term(std::move(k), ca * cb);
            }
        return r;
    }

    /// Re-reads the tensor over a larger algebra containing this one's normal words.
    Tensor lift(AlgebraPtr target) const
    {
        Tensor r(std::move(target), arity_);
        r.terms_ = terms_;
        return r;
    }

    /// Coefficient of 1 when arity is 0.
    Scalar scalar_value() const { return coeff(Key{}); }

    Elem to_elem() const
    {
        if (arity_ != 1) throw ArityError("only arity-1 tensors convert to elements");
        NCPoly p(alg_->num_generators());
        for (const auto& [k, c] : terms_) p.add_term(k[0], c);
        return Elem::from_normal(alg_, std::move(p));
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string body;
            for (std::size_t i = 0; i < arity_; ++i) {
                if (i) body += " ox ";
                body += alg_->format(it->first[i]);
            }
            if (arity_ == 0) body = "1";
            if (arity_ >= 2 || body != "1") {
                out += format_coeff_term(it->second, body, first);
            } else {
                out += format_coeff_term(it->second, "1", first);
            }
            first = false;
        }
        return out;
    }

    static Tensor from_poly(const AlgebraPtr& alg, const NCPoly& p)
    {
        Tensor t(alg, 1);
        for (const auto& [w, c] : p.terms()) t.add_term({w}, c);
        return t;
    }

private:
    void check(const Tensor& o) const
    {
        if (arity_ != o.arity_) throw ArityError("tensor arity mismatch");
        if (alg_ && o.alg_ && alg_ != o.alg_) throw CarrierMismatch("tensors over different carriers");
    }

    AlgebraPtr alg_;
    std::size_t arity_ = 0;
    TermMap terms_;
};

inline bool is_zero(const Tensor& t) { return t.is_zero(); }

inline Tensor t_mul(const Tensor& u, const Tensor& v) { return u * v; }

/// Per-slot image of a basis word; the returned tensor may have any arity
/// (0 for a scalar-valued map such as the counit).
using SlotFn = std::function<Tensor(const Word&)>;

inline SlotFn identity_slot(AlgebraPtr alg)
{
    return [alg](const Word& w) { return Tensor::basis(alg, {w}); };
}

/// Applies one map per slot and recombines multilinearly over `target`.
inline Tensor slot_map(const Tensor& t, const std::vector<SlotFn>& maps, const AlgebraPtr& target)
{
    if (maps.size() != t.arity()) throw ArityError("one map per slot required");
    std::optional<Tensor> result;
    for (const auto& [k, c] : t.terms()) {
        Tensor prod = Tensor::scalar(target, c);
        for (std::size_t i = 0; i < k.size(); ++i) {
            Tensor img = maps[i](k[i]);
            if (prod.arity() + img.arity() > max_tensor_arity) throw ArityError("slot map result exceeds arity 3");
            prod = outer(prod, img.lift(target));
        }
        if (!result) result = Tensor(target, prod.arity());
        *result += prod;
    }
    if (!result) {
        // Zero input: infer output arity from a probe on the empty word.
        std::size_t ar = 0;
        for (const auto& m : maps) ar += m(Word{}).arity();
        if (ar > max_tensor_arity) throw ArityError("slot map result exceeds arity 3");
        result = Tensor(target, ar);
    }
    return *result;
}

/// Applies f at one slot, identity elsewhere.
inline Tensor slot_apply(const Tensor& t, std::size_t slot, const SlotFn& f)
{
    std::vector<SlotFn> maps(t.arity(), identity_slot(t.algebra()));
    maps.at(slot) = f;
    return slot_map(t, maps, t.algebra());
}

/// The m-slot: multiplies slot i with slot i+1.
inline Tensor multiply_slots(const Tensor& t, std::size_t i)
{
    if (i + 1 >= t.arity()) throw ArityError("no adjacent slot to merge");
    const AlgebraPtr& alg = t.algebra();
    Tensor r(alg, t.arity() - 1);
    for (const auto& [k, c] : t.terms()) {
        NCPoly prod = alg->multiply_words(k[i], k[i + 1]);
        for (const auto& [w, d] : prod.terms()) {
            Tensor::Key nk;
            for (std::size_t j = 0; j < k.size(); ++j) {
                if (j == i) {
                    nk.push_back(w);
                } else if (j != i + 1) {
                    nk.push_back(k[j]);
                }
            }
            r.add_term(std::move(nk), c * d);
        }
    }
    return r;
}

/// Multiplies every slot together, left to right.
inline Elem t_flatten(const Tensor& t)
{
    if (t.arity() == 0) return Elem::scalar(t.algebra(), t.scalar_value());
    Tensor r = t;
    while (r.arity() > 1) r = multiply_slots(r, 0);
    return r.to_elem();
}

/// Swaps slots i and j.
inline Tensor flip(const Tensor& t, std::size_t i = 0, std::size_t j = 1)
{
    Tensor r(t.algebra(), t.arity());
    for (const auto& [key, c] : t.terms()) {
        Tensor::Key k = key;
        std::swap(k.at(i), k.at(j));
        r.add_term(std::move(k), c);
    }
    return r;
}

} // namespace hoe
