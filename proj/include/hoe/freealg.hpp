#pragma once

// Exact sparse arithmetic in the free associative algebra Q<a_0, ..., a_{n-1}>.
//
// Words are sequences of generator indices; the empty word is the unit.
// Polynomials are kept sorted by the degree-lexicographic order, so the last
// entry of the term map is always the leading word.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoe {

using Scalar = mpq_class;
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

inline bool is_zero(const Scalar& c) { return sgn(c) == 0; }

inline Scalar make_scalar(long num, long den = 1)
{
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Scalar& c)
{
    return c.get_str();
}

/// Degree-lexicographic order: shorter words first, then lexicographic by
/// generator index (which is the declaration order).
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline bool deglex_less(const Word& a, const Word& b) { return DegLexLess{}(a, b); }

inline Word concat(const Word& a, const Word& b)
{
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (Symbol s : w) {
            h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h ^ w.size();
    }
};

class MismatchedGenerators : public std::invalid_argument {
public:
    MismatchedGenerators(std::size_t a, std::size_t b)
        : std::invalid_argument("polynomials over different generator sets (" + std::to_string(a) +
                                " vs " + std::to_string(b) + " generators)")
    {
    }
};

/// Sparse Q-linear combination of words. No stored coefficient is zero.
///
/// `alphabet` records the number of generators of the ambient free algebra;
/// 0 means "unbound" (constants), which is compatible with every alphabet.
class NCPoly {
public:
    using TermMap = std::map<Word, Scalar, DegLexLess>;

    NCPoly() = default;
    explicit NCPoly(std::size_t alphabet) : alphabet_(alphabet) {}

    static NCPoly constant(const Scalar& c, std::size_t alphabet = 0)
    {
        NCPoly p(alphabet);
        p.add_term(Word{}, c);
        return p;
    }
    static NCPoly one(std::size_t alphabet = 0) { return constant(Scalar(1), alphabet); }
    static NCPoly monomial(Word w, const Scalar& c = Scalar(1), std::size_t alphabet = 0)
    {
        NCPoly p(alphabet);
        p.add_term(std::move(w), c);
        return p;
    }
    static NCPoly generator(Symbol s, std::size_t alphabet = 0) { return monomial(Word{s}, Scalar(1), alphabet); }

    std::size_t alphabet() const { return alphabet_; }
    void set_alphabet(std::size_t n) { alphabet_ = n; }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Largest word occurring with nonzero coefficient. Requires !is_zero().
    const Word& leading_word() const { return terms_.rbegin()->first; }
    const Scalar& leading_coeff() const { return terms_.rbegin()->second; }

    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

    Scalar coeff(const Word& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Constant term if the polynomial is a scalar multiple of 1.
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Scalar scalar_value() const { return coeff(Word{}); }

    void add_term(Word w, const Scalar& c)
    {
        if (::hoe::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (::hoe::is_zero(it->second)) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o)
    {
        merge_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o)
    {
        merge_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NCPoly& operator*=(const Scalar& c)
    {
        if (::hoe::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(NCPoly a) { return a *= Scalar(-1); }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
    friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }

    /// Free-algebra product: concatenation extended bilinearly.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b)
    {
        NCPoly r(a.alphabet_);
        r.merge_alphabet(b);
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) r.add_term(concat(u, v), cu * cv);
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Applies f to every word and accumulates c * f(word).
    template <class F>
    NCPoly map_words(F&& f) const
    {
        NCPoly r(alphabet_);
        for (const auto& [w, c] : terms_) {
            NCPoly img = f(w);
            img *= c;
            r += img;
        }
        return r;
    }

private:
    void merge_alphabet(const NCPoly& o)
    {
        if (o.alphabet_ == 0) return;
        if (alphabet_ == 0) {
            alphabet_ = o.alphabet_;
        } else if (alphabet_ != o.alphabet_) {
            throw MismatchedGenerators(alphabet_, o.alphabet_);
        }
    }

    std::size_t alphabet_ = 0;
    TermMap terms_;
};

enum class ArithOp { add, mul, scalar_mul, negate };

/// Single entry point for the four ring operations; the scalar operand is only
/// read for scalar_mul.
inline NCPoly nc_arith(ArithOp op, const NCPoly& p, const NCPoly& q = NCPoly(), const Scalar& c = Scalar(0))
{
    switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::mul: return p * q;
    case ArithOp::scalar_mul: return c * p;
    case ArithOp::negate: return -p;
    }
    throw std::logic_error("unknown op");
}

/// Renders a word with generator names joined by '*'; the empty word is "1".
inline std::string format_word(const Word& w, const std::vector<std::string>& names)
{
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += '*';
        out += w[i] < names.size() ? names[w[i]] : ("a" + std::to_string(w[i]));
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline std::string format_coeff_term(const Scalar& c, const std::string& body, bool first)
{
    std::string out;
    Scalar a = abs(c);
    if (sgn(c) < 0) {
        out += first ? "-" : " - ";
    } else if (!first) {
        out += " + ";
    }
    if (body == "1") return out + a.get_str();
    if (a != 1) out += a.get_str() + "*";
    return out + body;
}

/// Highest-degree terms first, matching how people write polynomials by hand.
inline std::string format_poly(const NCPoly& p, const std::vector<std::string>& names)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        out += format_coeff_term(it->second, format_word(it->first, names), first);
        first = false;
    }
    return out;
}

} // namespace hoe
