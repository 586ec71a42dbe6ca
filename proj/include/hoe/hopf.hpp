#pragma once

// Maps given on generators, Hopf structure data, the Hopf axiom suite and
// winding automorphisms.

#include "hoe/report.hpp"
#include "hoe/rewrite.hpp"
#include "hoe/tensor.hpp"

#include <random>
#include <unordered_map>

namespace hoe {

inline std::string describe(const Scalar& c) { return c.get_str(); }
inline std::string describe(const Elem& e) { return e.to_string(); }
inline std::string describe(const Tensor& t) { return t.to_string(); }

class WellDefinednessFailure : public std::runtime_error {
public:
    WellDefinednessFailure(std::string map_name, std::string relation, std::string lhs_image, std::string rhs_image,
                           std::string residue)
        : std::runtime_error(map_name + " is not well defined on relation " + relation + ": lhs -> " + lhs_image +
                             ", rhs -> " + rhs_image + ", residue " + residue),
          map_name_(std::move(map_name)), relation_(std::move(relation)), lhs_image_(std::move(lhs_image)),
          rhs_image_(std::move(rhs_image)), residue_(std::move(residue))
    {
    }
    const std::string& relation() const { return relation_; }
    const std::string& lhs_image() const { return lhs_image_; }
    const std::string& rhs_image() const { return rhs_image_; }
    const std::string& residue() const { return residue_; }

private:
    std::string map_name_, relation_, lhs_image_, rhs_image_, residue_;
};

enum class Variance { homomorphism, antihomomorphism };

/// A map out of a presented algebra determined by generator images, extended
/// multiplicatively (or anti-multiplicatively) and linearly. V is the target
/// value type: Elem, Tensor or Scalar.
template <class V>
class GenMap {
public:
    GenMap() = default;
    GenMap(std::string name, AlgebraPtr source, std::vector<V> images, V unit,
           Variance variance = Variance::homomorphism)
        : impl_(std::make_shared<Impl>())
    {
        if (images.size() != source->num_generators())
            throw std::invalid_argument(name + ": expected one image per generator");
        impl_->name = std::move(name);
        impl_->source = std::move(source);
        impl_->images = std::move(images);
        impl_->unit = std::move(unit);
        impl_->variance = variance;
    }

    const std::string& name() const { return impl_->name; }
    const AlgebraPtr& source() const { return impl_->source; }
    const std::vector<V>& images() const { return impl_->images; }
    const V& image(Symbol g) const { return impl_->images.at(g); }
    const V& unit() const { return impl_->unit; }
    V zero() const { return Scalar(0) * impl_->unit; }
    Variance variance() const { return impl_->variance; }

    V apply_word(const Word& w) const
    {
        {
            std::lock_guard lock(impl_->mutex);
            auto it = impl_->memo.find(w);
            if (it != impl_->memo.end()) return it->second;
        }
        V r = impl_->unit;
        if (impl_->variance == Variance::homomorphism) {
            for (Symbol s : w) r = V(r * impl_->images.at(s));
        } else {
            for (auto it = w.rbegin(); it != w.rend(); ++it) r = V(r * impl_->images.at(*it));
        }
        std::lock_guard lock(impl_->mutex);
        impl_->memo.emplace(w, r);
        return r;
    }

    V apply(const NCPoly& p) const
    {
        V r = zero();
        for (const auto& [w, c] : p.terms()) r = V(r + V(c * apply_word(w)));
        return r;
    }
    V apply(const Elem& e) const { return apply(e.poly()); }
    V operator()(const Elem& e) const { return apply(e); }

    /// First relation whose two sides have different images, if any.
    std::optional<WellDefinednessFailure> well_definedness() const
    {
        const auto& alg = *impl_->source;
        for (const auto& rel : alg.relations()) {
            V l = apply_word(rel.lhs);
            V r = apply(rel.rhs);
            V residue = V(l - r);
            if (!is_zero(residue))
                return WellDefinednessFailure(impl_->name, alg.format(rel.lhs) + " = " + alg.format(rel.rhs),
                                              describe(l), describe(r), describe(residue));
        }
        return std::nullopt;
    }

    void require_well_defined() const
    {
        if (auto f = well_definedness()) throw *f;
    }

private:
    struct Impl {
        std::string name;
        AlgebraPtr source;
        std::vector<V> images;
        V unit;
        Variance variance = Variance::homomorphism;
        std::mutex mutex;
        std::unordered_map<Word, V, WordHash> memo;
    };
    std::shared_ptr<Impl> impl_;
};

using Character = GenMap<Scalar>;
using AlgebraMap = GenMap<Elem>;
using CoproductMap = GenMap<Tensor>;

/// Extends f to e; throws WellDefinednessFailure when f does not respect the
/// defining relations.
template <class V>
V extend_hom(const GenMap<V>& f, const Elem& e)
{
    f.require_well_defined();
    return f.apply(e);
}

inline Character make_character(AlgebraPtr alg, std::vector<Scalar> values, std::string name = "chi")
{
    return Character(std::move(name), std::move(alg), std::move(values), Scalar(1));
}

inline AlgebraMap make_algebra_map(AlgebraPtr source, AlgebraPtr target, std::vector<Elem> images, std::string name,
                                   Variance v = Variance::homomorphism)
{
    return AlgebraMap(std::move(name), std::move(source), std::move(images), Elem::one(std::move(target)), v);
}

inline AlgebraMap identity_map(const AlgebraPtr& alg, std::string name = "id")
{
    std::vector<Elem> imgs;
    for (Symbol g = 0; g < alg->num_generators(); ++g) imgs.push_back(Elem::generator(alg, g));
    return make_algebra_map(alg, alg, std::move(imgs), std::move(name));
}

/// Hopf structure on a presented algebra, given on generators.
struct HopfAlg {
    AlgebraPtr alg;
    CoproductMap delta;
    Character counit;
    AlgebraMap antipode;
    std::size_t verified_degree = 0;

    HopfAlg() = default;
    HopfAlg(AlgebraPtr a, std::vector<Tensor> d, std::vector<Scalar> e, std::vector<Elem> s)
        : alg(a), delta("Delta", a, std::move(d), Tensor::unit(a, 2)), counit("epsilon", a, std::move(e), Scalar(1)),
          antipode("S", a, std::move(s), Elem::one(a), Variance::antihomomorphism)
    {
    }

    Elem gen(Symbol g) const { return Elem::generator(alg, g); }
    Elem one() const { return Elem::one(alg); }

    Tensor Delta(const Elem& r) const { return delta.apply(r); }
    Scalar eps(const Elem& r) const { return counit.apply(r); }
    Elem S(const Elem& r) const { return antipode.apply(r); }

    SlotFn delta_slot() const
    {
        return [d = delta](const Word& w) { return d.apply_word(w); };
    }
    SlotFn counit_slot() const
    {
        return [e = counit, a = alg](const Word& w) { return Tensor::scalar(a, e.apply_word(w)); };
    }
    SlotFn antipode_slot() const
    {
        return [s = antipode](const Word& w) { return Tensor::from_elem(s.apply_word(w)); };
    }
    SlotFn character_slot(const Character& chi) const
    {
        return [chi, a = alg](const Word& w) { return Tensor::scalar(a, chi.apply_word(w)); };
    }

    /// Delta equals its flip on every generator.
    bool cocommutative() const
    {
        for (Symbol g = 0; g < alg->num_generators(); ++g) {
            const Tensor& d = delta.image(g);
            if (d != flip(d)) return false;
        }
        return true;
    }
};

// Slot-map conveniences used by the Sweedler-notation computations.
inline Tensor delta_at(const HopfAlg& H, const Tensor& t, std::size_t slot) { return slot_apply(t, slot, H.delta_slot()); }
inline Tensor counit_at(const HopfAlg& H, const Tensor& t, std::size_t slot) { return slot_apply(t, slot, H.counit_slot()); }
inline Tensor antipode_at(const HopfAlg& H, const Tensor& t, std::size_t slot)
{
    return slot_apply(t, slot, H.antipode_slot());
}

inline bool is_grouplike(const HopfAlg& H, const Elem& r)
{
    if (r.is_zero()) return false;
    return H.Delta(r) == Tensor::pure({r, r}) && H.eps(r) == 1;
}

inline bool is_skew_primitive(const HopfAlg& H, const Elem& r, const Elem& a, const Elem& b)
{
    return H.Delta(r) == Tensor::pure({a, r}) + Tensor::pure({r, b});
}

struct HopfSuiteOptions {
    std::size_t samples = 30;
    std::size_t sample_degree = 5;
    unsigned seed = 20240917;
};

namespace detail {

inline void axioms_on(const HopfAlg& H, const Elem& r, const std::string& label, Report& rep)
{
    const AlgebraPtr& A = H.alg;
    Tensor d = H.Delta(r);
    Tensor left = delta_at(H, d, 0);
    Tensor right = delta_at(H, d, 1);
    rep.add("coassociativity[" + label + "]", left == right, left == right ? "" : describe(left - right));

    Elem cl = counit_at(H, d, 0).to_elem();
    Elem cr = counit_at(H, d, 1).to_elem();
    rep.add("counit-left[" + label + "]", cl == r, cl == r ? "" : describe(cl - r));
    rep.add("counit-right[" + label + "]", cr == r, cr == r ? "" : describe(cr - r));

    Elem target = Elem::scalar(A, H.eps(r));
    Elem sl = t_flatten(antipode_at(H, d, 0));
    Elem sr = t_flatten(antipode_at(H, d, 1));
    rep.add("antipode-left[" + label + "]", sl == target,
            sl == target ? "" : "m(S(x)I)Delta = " + describe(sl) + ", epsilon = " + describe(target));
    rep.add("antipode-right[" + label + "]", sr == target,
            sr == target ? "" : "m(I(x)S)Delta = " + describe(sr) + ", epsilon = " + describe(target));
}

} // namespace detail

/// Hopf axioms on every generator plus well-definedness of the three
/// structure maps. Both sides of coassociativity and of the counit laws are
/// algebra maps, and the convolution identities are closed under products
/// when S is an antihomomorphism, so generators suffice; a deterministic
/// sample of monomials is checked on top.
inline Report hopf_axiom_suite(const HopfAlg& H, const HopfSuiteOptions& opt = {})
{
    Report rep;
    auto wd = [&](const std::string& name, const auto& map) {
        auto f = map.well_definedness();
        rep.add(name + " well-defined", !f.has_value(), f ? std::string(f->what()) : "");
    };
    wd("Delta", H.delta);
    wd("epsilon", H.counit);
    wd("S", H.antipode);
    if (!rep.verdict()) return rep;

    for (Symbol g = 0; g < H.alg->num_generators(); ++g) detail::axioms_on(H, H.gen(g), H.alg->generator_names()[g], rep);

    if (opt.samples > 0) {
        std::mt19937 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> len(2, std::max<std::size_t>(2, opt.sample_degree));
        std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(H.alg->num_generators() - 1));
        Report sampled;
        for (std::size_t i = 0; i < opt.samples; ++i) {
            Word w(len(rng));
            for (auto& s : w) s = sym(rng);
            Elem r = Elem::word(H.alg, w);
            if (r.is_zero()) continue;
            detail::axioms_on(H, r, H.alg->format(w), sampled);
        }
        auto bad = sampled.failures();
        rep.add("sampled monomials (" + std::to_string(opt.samples) + ")", bad.empty(),
                bad.empty() ? "" : bad.front()->name + " :: " + bad.front()->witness);
    }
    return rep;
}

enum class Side { left, right };

/// Winding automorphism: left r -> sum chi(r1) r2, right r -> sum r1 chi(r2).
inline AlgebraMap winding(const HopfAlg& H, const Character& chi, Side side)
{
    chi.require_well_defined();
    std::vector<Elem> imgs;
    for (Symbol g = 0; g < H.alg->num_generators(); ++g) {
        Tensor d = H.delta.image(g);
        Tensor img = slot_apply(d, side == Side::left ? 0 : 1, H.character_slot(chi));
        imgs.push_back(img.to_elem());
    }
    return make_algebra_map(H.alg, H.alg, std::move(imgs), side == Side::left ? "tau_l" : "tau_r");
}

/// ad(beta^-1) composed with the right winding: r -> beta^-1 tau_r(r) beta.
inline AlgebraMap conjugated_right_winding(const HopfAlg& H, const Character& chi, const Elem& beta,
                                           const Elem& beta_inv)
{
    AlgebraMap tr = winding(H, chi, Side::right);
    std::vector<Elem> imgs;
    for (Symbol g = 0; g < H.alg->num_generators(); ++g) imgs.push_back(beta_inv * tr.image(g) * beta);
    return make_algebra_map(H.alg, H.alg, std::move(imgs), "ad(beta^-1)tau_r");
}

/// chi o S, the convolution inverse of a character.
inline Character character_inverse(const HopfAlg& H, const Character& chi)
{
    std::vector<Scalar> vals;
    for (Symbol g = 0; g < H.alg->num_generators(); ++g) vals.push_back(chi.apply(H.antipode.image(g)));
    return make_character(H.alg, std::move(vals), chi.name() + "oS");
}

/// Generator-wise equality of two maps into the same algebra.
inline std::optional<std::string> maps_differ(const AlgebraMap& f, const AlgebraMap& g)
{
    for (Symbol s = 0; s < f.source()->num_generators(); ++s)
        if (f.image(s) != g.image(s))
            return f.source()->generator_names()[s] + ": " + f.image(s).to_string() + " vs " + g.image(s).to_string();
    return std::nullopt;
}

inline Elem compose_apply(const AlgebraMap& outer_map, const AlgebraMap& inner, const Elem& r)
{
    return outer_map.apply(inner.apply(r));
}

} // namespace hoe
