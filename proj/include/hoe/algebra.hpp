#pragma once

// Abstract finitely presented algebra with canonical normal forms, and the
// element handle that carries its algebra around.

#include "hoe/freealg.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hoe {

/// A defining relation `lhs = rhs` of an algebra, read as an element lhs - rhs
/// of the two-sided ideal.
struct Relation {
    Word lhs;
    NCPoly rhs;
};

class Algebra {
public:
    Algebra() = default;
    Algebra(const Algebra&) {}
    Algebra& operator=(const Algebra&) { return *this; }
    virtual ~Algebra() = default;

    virtual std::size_t num_generators() const = 0;
    virtual const std::vector<std::string>& generator_names() const = 0;

    /// Normal form of an arbitrary word over the generators.
    virtual NCPoly reduce_word(const Word& w) const = 0;

    /// Relations generating the defining ideal (used for well-definedness of
    /// maps out of this algebra).
    virtual std::vector<Relation> relations() const = 0;

    /// Largest input degree for which normal forms are guaranteed unique, or
    /// nullopt when the rewriting system is confluent in every degree.
    virtual std::optional<std::size_t> certified_degree() const { return std::nullopt; }

    NCPoly reduce(const NCPoly& p) const
    {
        NCPoly r(num_generators());
        for (const auto& [w, c] : p.terms()) {
            NCPoly img = cached_reduce(w);
            img *= c;
            r += img;
        }
        return r;
    }

    /// Product of two normal-form polynomials, reduced.
    NCPoly multiply(const NCPoly& a, const NCPoly& b) const
    {
        NCPoly r(num_generators());
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms()) {
                NCPoly img = cached_reduce(concat(u, v));
                img *= cu * cv;
                r += img;
            }
        return r;
    }

    NCPoly multiply_words(const Word& u, const Word& v) const { return cached_reduce(concat(u, v)); }

    std::string format(const NCPoly& p) const { return format_poly(p, generator_names()); }
    std::string format(const Word& w) const { return format_word(w, generator_names()); }

    std::optional<Symbol> find_generator(const std::string& name) const
    {
        const auto& names = generator_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<Symbol>(i);
        return std::nullopt;
    }

    NCPoly cached_reduce(const Word& w) const
    {
        {
            std::lock_guard lock(cache_mutex_);
            auto it = cache_.find(w);
            if (it != cache_.end()) return it->second;
        }
        NCPoly r = reduce_word(w);
        r.set_alphabet(num_generators());
        std::lock_guard lock(cache_mutex_);
        cache_.emplace(w, r);
        return r;
    }

private:
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<Word, NCPoly, WordHash> cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

class CarrierMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An element of a presented algebra, always stored in normal form.
class Elem {
public:
    Elem() = default;
    Elem(AlgebraPtr alg, const NCPoly& p) : alg_(std::move(alg)), poly_(alg_->reduce(p)) {}

    static Elem from_normal(AlgebraPtr alg, NCPoly p)
    {
        Elem e;
        e.alg_ = std::move(alg);
        p.set_alphabet(e.alg_->num_generators());
        e.poly_ = std::move(p);
        return e;
    }
    static Elem one(AlgebraPtr alg) { return scalar(std::move(alg), Scalar(1)); }
    static Elem zero(AlgebraPtr alg) { return from_normal(std::move(alg), NCPoly()); }
    static Elem scalar(AlgebraPtr alg, const Scalar& c) { return from_normal(std::move(alg), NCPoly::constant(c)); }
    static Elem generator(AlgebraPtr alg, Symbol s) { return Elem(alg, NCPoly::generator(s)); }
    static Elem word(AlgebraPtr alg, const Word& w) { return Elem(alg, NCPoly::monomial(w)); }

    const AlgebraPtr& algebra() const { return alg_; }
    const NCPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    /// Reinterprets the element in another algebra whose normal words contain
    /// this algebra's normal words (e.g. R inside R[x; sigma, delta]).
    Elem lift(AlgebraPtr target) const { return Elem(std::move(target), poly_); }

    Elem& operator+=(const Elem& o)
    {
        check(o);
        poly_ += o.poly_;
        return *this;
    }
    Elem& operator-=(const Elem& o)
    {
        check(o);
        poly_ -= o.poly_;
        return *this;
    }
    Elem& operator*=(const Scalar& c)
    {
        poly_ *= c;
        return *this;
    }
    friend Elem operator+(Elem a, const Elem& b) { return a += b; }
    friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
    friend Elem operator-(Elem a) { return a *= Scalar(-1); }
    friend Elem operator*(const Scalar& c, Elem a) { return a *= c; }
    friend Elem operator*(const Elem& a, const Elem& b)
    {
        a.check(b);
        return from_normal(a.alg_, a.alg_->multiply(a.poly_, b.poly_));
    }
    friend bool operator==(const Elem& a, const Elem& b) { return a.poly_ == b.poly_; }
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

    std::string to_string() const { return alg_ ? alg_->format(poly_) : "0"; }

private:
    void check(const Elem& o) const
    {
        if (alg_ && o.alg_ && alg_ != o.alg_) throw CarrierMismatch("elements of different algebras");
    }

    AlgebraPtr alg_;
    NCPoly poly_;
};

inline bool is_zero(const Elem& e) { return e.is_zero(); }

inline Elem power(const Elem& e, unsigned n)
{
    Elem r = Elem::one(e.algebra());
    for (unsigned i = 0; i < n; ++i) r = r * e;
    return r;
}

} // namespace hoe
