#pragma once

// The Ore extension T = R[x; sigma, delta] over a Hopf algebra R.
//
// Normal words of T are u x^k with u a normal word of R, i.e. T is handled as
// the free left R-module on the powers of x. The generator list of T is R's
// generators followed by x.

#include "hoe/hopf.hpp"

#include <map>

namespace hoe {

class OreAlgebra : public Algebra {
public:
    OreAlgebra(PresentationPtr base, AlgebraMap sigma, std::vector<Elem> delta_images, std::string x_name)
        : base_(std::move(base)), sigma_(std::move(sigma)), delta_(std::move(delta_images))
    {
        names_ = base_->generator_names();
        names_.push_back(std::move(x_name));
        x_ = static_cast<Symbol>(base_->num_generators());
    }

    std::size_t num_generators() const override { return names_.size(); }
    const std::vector<std::string>& generator_names() const override { return names_; }
    std::optional<std::size_t> certified_degree() const override { return base_->certified_degree(); }

    Symbol x() const { return x_; }
    const PresentationPtr& base() const { return base_; }
    const AlgebraMap& sigma() const { return sigma_; }
    const std::vector<Elem>& delta_images() const { return delta_; }

    /// Splits a normal word u x^k into (u, k).
    std::pair<Word, std::size_t> split(const Word& w) const
    {
        std::size_t k = 0;
        while (k < w.size() && w[w.size() - 1 - k] == x_) ++k;
        return {Word(w.begin(), w.end() - static_cast<std::ptrdiff_t>(k)), k};
    }

    Word join(Word u, std::size_t k) const
    {
        u.insert(u.end(), k, x_);
        return u;
    }

    /// delta on a word of R via delta(ab) = sigma(a) delta(b) + delta(a) b.
    NCPoly derivation_word(const Word& w) const
    {
        {
            std::lock_guard lock(memo_mutex_);
            auto it = delta_memo_.find(w);
            if (it != delta_memo_.end()) return it->second;
        }
        NCPoly r(base_->num_generators());
        for (std::size_t k = 0; k < w.size(); ++k) {
            Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            Word suffix(w.begin() + static_cast<std::ptrdiff_t>(k + 1), w.end());
            const Elem sp = sigma_.apply_word(prefix);
            NCPoly term = base_->multiply(sp.poly(), delta_.at(w[k]).poly());
            term = base_->multiply(term, base_->cached_reduce(suffix));
            r += term;
        }
        std::lock_guard lock(memo_mutex_);
        delta_memo_.emplace(w, r);
        return r;
    }

    NCPoly derivation(const NCPoly& p) const { return p.map_words([&](const Word& w) { return derivation_word(w); }); }

    /// x^k * p for p in R, as a normal-form element of T.
    NCPoly commute(std::size_t k, const NCPoly& p) const
    {
        NCPoly r(num_generators());
        for (const auto& [u, c] : p.terms()) {
            NCPoly img = commute_word(k, u);
            img *= c;
            r += img;
        }
        return r;
    }

    NCPoly reduce_word(const Word& w) const override
    {
        // (u x^k) * s, accumulated left to right
        NCPoly acc = NCPoly::one(num_generators());
        for (Symbol s : w) {
            NCPoly next(num_generators());
            if (s == x_) {
                for (const auto& [v, c] : acc.terms()) {
                    Word vx = v;
                    vx.push_back(x_);
                    next.add_term(std::move(vx), c);
                }
            } else {
                for (const auto& [v, c] : acc.terms()) {
                    auto [u, k] = split(v);
                    NCPoly moved = commute_word(k, Word{s});
                    for (const auto& [m, d] : moved.terms()) {
                        auto [mu, mk] = split(m);
                        NCPoly coeff = base_->multiply_words(u, mu);
                        for (const auto& [cu, e] : coeff.terms()) next.add_term(join(cu, mk), c * d * e);
                    }
                }
            }
            acc = std::move(next);
        }
        return acc;
    }

    /// R's relations plus x g = sigma(g) x + delta(g) for every generator g of R.
    std::vector<Relation> relations() const override
    {
        std::vector<Relation> out = base_->relations();
        for (Symbol g = 0; g < base_->num_generators(); ++g) {
            NCPoly rhs(num_generators());
            for (const auto& [u, c] : sigma_.image(g).poly().terms()) rhs.add_term(join(u, 1), c);
            rhs += lift_poly(delta_.at(g).poly());
            out.push_back({Word{x_, g}, rhs});
        }
        return out;
    }

    NCPoly lift_poly(NCPoly p) const
    {
        p.set_alphabet(num_generators());
        return p;
    }

private:
    NCPoly commute_word(std::size_t k, const Word& u) const
    {
        if (k == 0) return lift_poly(base_->cached_reduce(u));
        {
            std::lock_guard lock(memo_mutex_);
            auto it = commute_memo_.find({k, u});
            if (it != commute_memo_.end()) return it->second;
        }
        // x^k u = x^{k-1} (sigma(u) x + delta(u))
        NCPoly r(num_generators());
        NCPoly head = commute(k - 1, sigma_.apply_word(u).poly());
        for (const auto& [v, c] : head.terms()) {
            Word vx = v;
            vx.push_back(x_);
            r.add_term(std::move(vx), c);
        }
        r += commute(k - 1, derivation_word(u));
        std::lock_guard lock(memo_mutex_);
        commute_memo_.emplace(std::pair{k, u}, r);
        return r;
    }

    PresentationPtr base_;
    AlgebraMap sigma_;
    std::vector<Elem> delta_;
    std::vector<std::string> names_;
    Symbol x_ = 0;
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<Word, NCPoly, WordHash> delta_memo_;
    mutable std::map<std::pair<std::size_t, Word>, NCPoly> commute_memo_;
};

using OreAlgebraPtr = std::shared_ptr<const OreAlgebra>;

/// Left coefficients of the powers of x: sum_i coeffs[i] x^i.
struct OreElem {
    std::vector<Elem> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const OreElem& a, const OreElem& b) { return a.coeffs == b.coeffs; }
};

class NotAUnit : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// R[x; sigma, delta] together with the Hopf structure of R and sigma^-1.
struct OreExt {
    std::shared_ptr<const HopfAlg> base;
    AlgebraMap sigma;
    AlgebraMap sigma_inv;
    std::vector<Elem> delta_images;
    std::string x_name = "x";
    OreAlgebraPtr T;

    PresentationPtr R() const { return T->base(); }
    Symbol x() const { return T->x(); }
    Elem x_elem() const { return Elem::generator(T, T->x()); }
    Elem lift(const Elem& r) const { return Elem::from_normal(T, T->lift_poly(r.poly())); }
    Tensor lift(const Tensor& t) const { return t.lift(T); }

    Elem sigma_of(const Elem& r) const { return sigma.apply(r); }
    Elem delta_of(const Elem& r) const { return Elem::from_normal(R(), T->derivation(r.poly())); }

    /// T element -> left coefficients.
    OreElem coefficients(const Elem& t) const
    {
        std::map<std::size_t, NCPoly> parts;
        for (const auto& [w, c] : t.poly().terms()) {
            auto [u, k] = T->split(w);
            parts[k].add_term(u, c);
        }
        OreElem out;
        if (parts.empty()) return out;
        out.coeffs.assign(parts.rbegin()->first + 1, Elem::zero(R()));
        for (auto& [k, p] : parts) out.coeffs[k] = Elem::from_normal(R(), p);
        return out;
    }

    Elem from_coefficients(const OreElem& e) const
    {
        NCPoly p(T->num_generators());
        for (std::size_t k = 0; k < e.coeffs.size(); ++k)
            for (const auto& [u, c] : e.coeffs[k].poly().terms()) p.add_term(T->join(u, k), c);
        return Elem::from_normal(T, p);
    }
};

inline OreExt make_ore(std::shared_ptr<const HopfAlg> base, std::vector<Elem> sigma_images,
                       std::vector<Elem> sigma_inv_images, std::vector<Elem> delta_images, std::string x_name = "x")
{
    auto R = std::dynamic_pointer_cast<const Presentation>(base->alg);
    if (!R) throw std::invalid_argument("Ore extension base must be a presented algebra");
    OreExt e;
    e.base = base;
    e.sigma = make_algebra_map(R, R, std::move(sigma_images), "sigma");
    e.sigma_inv = make_algebra_map(R, R, std::move(sigma_inv_images), "sigma^-1");
    if (delta_images.size() != R->num_generators()) throw std::invalid_argument("delta: one image per generator");
    e.delta_images = std::move(delta_images);
    e.x_name = std::move(x_name);
    e.T = std::make_shared<OreAlgebra>(R, e.sigma, e.delta_images, e.x_name);
    return e;
}

/// Checks that sigma, sigma^-1 are mutually inverse well-defined endomorphisms
/// and that the sigma-Leibniz extension of delta kills every relation of R.
inline Report validate_ore(const OreExt& e)
{
    Report rep;
    const auto& R = *e.R();
    for (const auto* m : {&e.sigma, &e.sigma_inv}) {
        auto f = m->well_definedness();
        rep.add(m->name() + " well-defined", !f, f ? std::string(f->what()) : "");
    }
    if (!rep.verdict()) return rep;
    for (Symbol g = 0; g < R.num_generators(); ++g) {
        Elem gg = Elem::generator(e.R(), g);
        Elem a = e.sigma.apply(e.sigma_inv.image(g));
        Elem b = e.sigma_inv.apply(e.sigma.image(g));
        rep.add("sigma o sigma^-1 = id [" + R.generator_names()[g] + "]", a == gg, a == gg ? "" : a.to_string());
        rep.add("sigma^-1 o sigma = id [" + R.generator_names()[g] + "]", b == gg, b == gg ? "" : b.to_string());
    }
    for (const auto& rel : R.relations()) {
        NCPoly lhs = e.T->derivation_word(rel.lhs);
        NCPoly rhs = e.T->derivation(rel.rhs);
        NCPoly res = lhs - rhs;
        std::string label = R.format(rel.lhs) + " = " + R.format(rel.rhs);
        rep.add("delta Leibniz on " + label, res.is_zero(), res.is_zero() ? "" : "residue " + R.format(res));
    }
    return rep;
}

/// Normal form of a mixed word/polynomial in R's generators and x.
inline OreElem ore_normal_form(const OreExt& e, const NCPoly& expr) { return e.coefficients(Elem(e.T, expr)); }

// ---------------------------------------------------------------------------
// Changes of the variable x

enum class ChangeKind { shift, left_unit, right_unit };

struct VarChange {
    ChangeKind kind = ChangeKind::shift;
    Scalar c;      // shift: x' = x - c
    Elem u, u_inv; // left_unit: x' = u x, right_unit: x' = x u
};

inline VarChange shift_by(const Scalar& c) { return VarChange{ChangeKind::shift, c, {}, {}}; }
inline VarChange left_unit(Elem u, Elem u_inv) { return VarChange{ChangeKind::left_unit, 0, std::move(u), std::move(u_inv)}; }
inline VarChange right_unit(Elem u, Elem u_inv) { return VarChange{ChangeKind::right_unit, 0, std::move(u), std::move(u_inv)}; }

inline std::string describe(const VarChange& ch)
{
    switch (ch.kind) {
    case ChangeKind::shift: return "shift(" + ch.c.get_str() + ")";
    case ChangeKind::left_unit: return "left_unit(" + ch.u.to_string() + ")";
    case ChangeKind::right_unit: return "right_unit(" + ch.u.to_string() + ")";
    }
    return "?";
}

/// Result of a change of variable: the new extension and the isomorphisms
/// between the old and new algebras (identity on R).
struct ChangedOre {
    OreExt ext;
    AlgebraMap old_to_new; // T -> T'
    AlgebraMap new_to_old; // T' -> T
    std::string description;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline AlgebraMap ore_iso(const OreExt& from, const OreExt& to, const Elem& x_image, std::string name)
{
    std::vector<Elem> imgs;
    for (Symbol g = 0; g < from.R()->num_generators(); ++g) imgs.push_back(to.lift(Elem::generator(from.R(), g)));
    imgs.push_back(x_image);
    return make_algebra_map(from.T, to.T, std::move(imgs), std::move(name));
}

} // namespace detail

/// shift:      x' = x - c,  sigma' = sigma,               delta'(r) = delta(r) + sigma(r) c - c r
/// left_unit:  x' = u x,    sigma'(r) = u sigma(r) u^-1,  delta'(r) = u delta(r)
/// right_unit: x' = x u,    sigma'(r) = sigma(u r u^-1),  delta'(r) = delta(u r u^-1) u
inline ChangedOre change_var(const OreExt& e, const VarChange& ch)
{
    auto R = e.R();
    const std::size_t n = R->num_generators();
    std::vector<Elem> sig, sig_inv, del;
    if (ch.kind != ChangeKind::shift) {
        Elem one = Elem::one(R);
        if (ch.u.algebra() != R || ch.u_inv.algebra() != R) throw NotAUnit("unit must be an element of R");
        if (ch.u * ch.u_inv != one || ch.u_inv * ch.u != one)
            throw NotAUnit(ch.u.to_string() + " * " + ch.u_inv.to_string() + " is not 1");
    }
    for (Symbol g = 0; g < n; ++g) {
        Elem r = Elem::generator(R, g);
        switch (ch.kind) {
        case ChangeKind::shift:
            sig.push_back(e.sigma.image(g));
            sig_inv.push_back(e.sigma_inv.image(g));
            del.push_back(e.delta_images[g] + ch.c * e.sigma.image(g) - ch.c * r);
            break;
        case ChangeKind::left_unit:
            sig.push_back(ch.u * e.sigma.image(g) * ch.u_inv);
            sig_inv.push_back(e.sigma_inv.apply(ch.u_inv * r * ch.u));
            del.push_back(ch.u * e.delta_images[g]);
            break;
        case ChangeKind::right_unit: {
            Elem conj = ch.u * r * ch.u_inv;
            sig.push_back(e.sigma.apply(conj));
            sig_inv.push_back(ch.u_inv * e.sigma_inv.image(g) * ch.u);
            del.push_back(e.delta_of(conj) * ch.u);
            break;
        }
        }
    }
    ChangedOre out;
    out.ext = make_ore(e.base, std::move(sig), std::move(sig_inv), std::move(del), e.x_name);
    Report rv = validate_ore(out.ext);
    if (!rv.verdict()) throw InternalError("change of variable produced an invalid Ore datum: " + rv.failures().front()->name);

    const OreExt& ne = out.ext;
    Elem xo = e.x_elem(), xn = ne.x_elem();
    switch (ch.kind) {
    case ChangeKind::shift:
        out.old_to_new = detail::ore_iso(e, ne, xn + Elem::scalar(ne.T, ch.c), "phi");
        out.new_to_old = detail::ore_iso(ne, e, xo - Elem::scalar(e.T, ch.c), "phi^-1");
        break;
    case ChangeKind::left_unit:
        out.old_to_new = detail::ore_iso(e, ne, ne.lift(ch.u_inv) * xn, "phi");
        out.new_to_old = detail::ore_iso(ne, e, e.lift(ch.u) * xo, "phi^-1");
        break;
    case ChangeKind::right_unit:
        out.old_to_new = detail::ore_iso(e, ne, xn * ne.lift(ch.u_inv), "phi");
        out.new_to_old = detail::ore_iso(ne, e, xo * e.lift(ch.u), "phi^-1");
        break;
    }
    out.description = describe(ch);
    return out;
}

/// Applies an algebra map slotwise to a tensor.
inline Tensor map_tensor(const AlgebraMap& f, const Tensor& t, const AlgebraPtr& target)
{
    SlotFn fs = [f](const Word& w) { return Tensor::from_elem(f.apply_word(w)); };
    return slot_map(t, std::vector<SlotFn>(t.arity(), fs), target);
}

} // namespace hoe
