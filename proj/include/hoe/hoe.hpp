#pragma once

// Hopf structures on Ore extensions T = R[x; sigma, delta].
//
// Delta(x) is read on the left R (x) R-basis {x^i (x) x^j} of T (x) T as
//     Delta(x) = s(1 (x) x) + t(x (x) 1) + v(x (x) x) + w,
// the coassociativity identities that this shape forces are evaluated exactly,
// and changes of variable bring Delta(x) to the standard shape
//     Delta(x) = beta^-1 (x) x + x (x) 1 + w,   beta grouplike.
// The standard shape is then checked against the three structural conditions
// (grouplike/antipode constraint, winding automorphism, delta relation plus
// w-cocycle) and, independently, against the Hopf axioms on T itself.

#include "hoe/ore.hpp"

namespace hoe {

class HigherDegreeTerm : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A named equation that did not hold; carries the nonzero difference.
class VerificationFailure : public std::runtime_error {
public:
    VerificationFailure(std::string equation, std::string witness, Report partial = {})
        : std::runtime_error(equation + " failed: " + witness), equation_(std::move(equation)),
          witness_(std::move(witness)), partial_(std::move(partial))
    {
    }
    const std::string& equation() const { return equation_; }
    const std::string& witness() const { return witness_; }
    const Report& partial() const { return partial_; }

private:
    std::string equation_;
    std::string witness_;
    Report partial_;
};

struct DeltaXForm {
    Tensor s, t, v, w;
};

/// Delta(x), eps(x) on an Ore extension whose coefficient ring carries a Hopf structure.
struct HoeCandidate {
    OreExt ore;
    Tensor delta_x;
    Scalar counit_x = 0;
};

enum class SignVariant { displayed, commutator };

inline std::string to_string(SignVariant s) { return s == SignVariant::displayed ? "displayed" : "commutator"; }

/// Datum (beta, w, chi) of a standard-shape Hopf structure.
struct HOEData {
    Elem beta;
    Tensor w;
    Character chi;
};

namespace detail {

inline void expect_equal(Report& rep, const std::string& name, const Tensor& lhs, const Tensor& rhs)
{
    bool ok = lhs == rhs;
    rep.add(name, ok, ok ? "" : "lhs - rhs = " + describe(lhs - rhs));
}

inline void expect_equal(Report& rep, const std::string& name, const Elem& lhs, const Elem& rhs)
{
    bool ok = lhs == rhs;
    rep.add(name, ok, ok ? "" : "lhs - rhs = " + describe(lhs - rhs));
}

inline void expect_equal(Report& rep, const std::string& name, const Scalar& lhs, const Scalar& rhs)
{
    bool ok = lhs == rhs;
    rep.add(name, ok, ok ? "" : "lhs = " + lhs.get_str() + ", rhs = " + rhs.get_str());
}

/// Throws on the most recent check if it failed.
inline void require_last(const Report& rep)
{
    const Check& c = rep.checks.back();
    if (!c.pass) throw VerificationFailure(c.name, c.witness, rep);
}

inline Tensor one_ox(const Tensor& t) { return outer(Tensor::unit(t.algebra(), 1), t); }
inline Tensor ox_one(const Tensor& t) { return outer(t, Tensor::unit(t.algebra(), 1)); }

inline Elem counit_left(const HopfAlg& H, const Tensor& t) { return counit_at(H, t, 0).to_elem(); }  // sum eps(t1) t2
inline Elem counit_right(const HopfAlg& H, const Tensor& t) { return counit_at(H, t, 1).to_elem(); } // sum t1 eps(t2)
inline Scalar counit_both(const HopfAlg& H, const Tensor& t) { return counit_at(H, counit_at(H, t, 1), 0).scalar_value(); }

} // namespace detail

// ---------------------------------------------------------------------------
// Decomposition

/// Reads the left coefficients w_{i,j} of x^i (x) x^j. Anything beyond
/// i, j <= 1 is outside the supported shape.
inline DeltaXForm decompose_delta_x(const OreExt& e, const Tensor& dx)
{
    if (dx.arity() != 2) throw ArityError("Delta(x) must live in T (x) T");
    auto R = e.R();
    DeltaXForm f{Tensor(R, 2), Tensor(R, 2), Tensor(R, 2), Tensor(R, 2)};
    for (const auto& [k, c] : dx.terms()) {
        auto [u1, i] = e.T->split(k[0]);
        auto [u2, j] = e.T->split(k[1]);
        if (i > 1 || j > 1)
            throw HigherDegreeTerm("Delta(x) has a term in x^" + std::to_string(i) + " (x) x^" + std::to_string(j) + ": " +
                                   e.T->format(k[0]) + " ox " + e.T->format(k[1]));
        Tensor* slot = (i == 0 && j == 1) ? &f.s : (i == 1 && j == 0) ? &f.t : (i == 1) ? &f.v : &f.w;
        slot->add_term({u1, u2}, c);
    }
    return f;
}

/// s(1 (x) x) + t(x (x) 1) + v(x (x) x) + w, over T.
inline Tensor assemble_delta_x(const OreExt& e, const DeltaXForm& f)
{
    Tensor out(e.T, 2);
    auto put = [&](const Tensor& part, std::size_t i, std::size_t j) {
        for (const auto& [k, c] : part.terms()) out.add_term({e.T->join(k[0], i), e.T->join(k[1], j)}, c);
    };
    put(f.s, 0, 1);
    put(f.t, 1, 0);
    put(f.v, 1, 1);
    put(f.w, 0, 0);
    return out;
}

struct AlphaBeta {
    Elem alpha;
    Elem beta;
};

/// alpha = (I (x) eps)(s), beta = (eps (x) I)(t), after checking the counit
/// consequences 1 = sum eps(s1) s2 = sum t1 eps(t2) and eps(alpha) = eps(beta) = 1.
inline AlphaBeta compute_alpha_beta(const HopfAlg& H, const DeltaXForm& f, Report* trace = nullptr)
{
    Report rep;
    Elem one = H.one();
    detail::expect_equal(rep, "identity: sum eps(s1) s2 = 1", detail::counit_left(H, f.s), one);
    detail::require_last(rep);
    detail::expect_equal(rep, "identity: sum t1 eps(t2) = 1", detail::counit_right(H, f.t), one);
    detail::require_last(rep);
    AlphaBeta ab{detail::counit_right(H, f.s), detail::counit_left(H, f.t)};
    detail::expect_equal(rep, "eps(alpha) = 1", H.eps(ab.alpha), Scalar(1));
    detail::require_last(rep);
    detail::expect_equal(rep, "eps(beta) = 1", H.eps(ab.beta), Scalar(1));
    detail::require_last(rep);
    if (trace) trace->merge(rep);
    return ab;
}

/// The coefficient identities forced by coassociativity of the decomposed
/// Delta(x), and their counit/antipode contractions.
inline Report identity_suite(const HopfAlg& H, const DeltaXForm& f)
{
    using detail::one_ox;
    using detail::ox_one;
    Report rep;
    const auto& [s, t, v, w] = f;
    auto IxD = [&](const Tensor& a) { return delta_at(H, a, 1); };
    auto DxI = [&](const Tensor& a) { return delta_at(H, a, 0); };

    detail::expect_equal(rep, "te1: (I(x)D)(v)(1(x)v) = (D(x)I)(v)(v(x)1)", IxD(v) * one_ox(v), DxI(v) * ox_one(v));
    detail::expect_equal(rep, "te2: (I(x)D)(s)(1(x)t) = (D(x)I)(t)(s(x)1)", IxD(s) * one_ox(t), DxI(t) * ox_one(s));
    detail::expect_equal(rep, "te4: (I(x)D)(s)(1(x)v) = (D(x)I)(v)(s(x)1)", IxD(s) * one_ox(v), DxI(v) * ox_one(s));
    detail::expect_equal(rep, "te5: (I(x)D)(s)(1(x)s) = (D(x)I)(s) + (D(x)I)(v)(w(x)1)", IxD(s) * one_ox(s),
                         DxI(s) + DxI(v) * ox_one(w));
    detail::expect_equal(rep, "te7: (I(x)D)(v)(1(x)t) = (D(x)I)(t)(v(x)1)", IxD(v) * one_ox(t), DxI(t) * ox_one(v));

    Elem alpha = detail::counit_right(H, s);
    Scalar eps_v = detail::counit_both(H, v);
    Elem v_right = detail::counit_right(H, v); // sum v1 eps(v2)
    Elem v_left = detail::counit_left(H, v);   // sum eps(v1) v2
    detail::expect_equal(rep, "alphav: alpha eps(v) = (sum v1 eps(v2)) alpha", eps_v * alpha, v_right * alpha);
    detail::expect_equal(rep, "epsilonv: (sum eps(v1)v2)^2 = (sum eps(v1)v2) eps(v)", v_left * v_left, eps_v * v_left);
    detail::expect_equal(rep, "Sv: sum S(v1) v2 = 0", t_flatten(antipode_at(H, v, 0)), Elem::zero(H.alg));
    detail::expect_equal(rep, "ISv: sum eps(v1) eps(v2) = 0", eps_v, Scalar(0));
    detail::expect_equal(rep, "sc: s(1(x)sum eps(v1)v2) = v(alpha(x)1)", s * Tensor::pure({H.one(), v_left}),
                         v * Tensor::pure({alpha, H.one()}));
    return rep;
}

/// Requires v = 0 after checking the contractions that force it in a domain.
inline DeltaXForm eliminate_v(const HopfAlg& H, const DeltaXForm& f, const Elem& alpha, Report* trace = nullptr)
{
    Report rep;
    Elem zero = Elem::zero(H.alg);
    detail::expect_equal(rep, "sum eps(v1) eps(v2) = 0", detail::counit_both(H, f.v), Scalar(0));
    detail::require_last(rep);
    detail::expect_equal(rep, "sum v1 eps(v2) = 0", detail::counit_right(H, f.v), zero);
    detail::require_last(rep);
    detail::expect_equal(rep, "sum eps(v1) v2 = 0", detail::counit_left(H, f.v), zero);
    detail::require_last(rep);
    Tensor va = f.v * Tensor::pure({alpha, H.one()});
    rep.add("v(alpha(x)1) = 0", va.is_zero(), va.is_zero() ? "" : "v(alpha(x)1) = " + describe(va));
    detail::require_last(rep);
    rep.add("v = 0", f.v.is_zero(),
            f.v.is_zero() ? "" : "v = " + describe(f.v) + " is annihilated by alpha(x)1: R(x)R has zero divisors");
    detail::require_last(rep);
    if (trace) trace->merge(rep);
    DeltaXForm out = f;
    out.v = Tensor(f.v.algebra(), 2);
    return out;
}

// ---------------------------------------------------------------------------
// Structure maps on T

/// Delta on T: Delta of R on R's generators, the given Delta(x) on x.
inline CoproductMap coproduct_on_T(const HoeCandidate& c)
{
    const auto& T = c.ore.T;
    std::vector<Tensor> imgs;
    for (Symbol g = 0; g < c.ore.R()->num_generators(); ++g) imgs.push_back(c.ore.base->delta.image(g).lift(T));
    imgs.push_back(c.delta_x);
    return CoproductMap("Delta_T", T, std::move(imgs), Tensor::unit(T, 2));
}

inline Character counit_on_T(const HoeCandidate& c)
{
    std::vector<Scalar> vals = c.ore.base->counit.images();
    vals.push_back(c.counit_x);
    return Character("epsilon_T", c.ore.T, std::move(vals), Scalar(1));
}

/// Re-expresses Delta(x'), eps(x') after a change of variable.
inline HoeCandidate transport(const HoeCandidate& c, const ChangedOre& ch)
{
    Elem x_new_in_old = ch.new_to_old.image(ch.ext.x());
    Tensor d_old = coproduct_on_T(c).apply(x_new_in_old);
    HoeCandidate out{ch.ext, map_tensor(ch.old_to_new, d_old, ch.ext.T), counit_on_T(c).apply(x_new_in_old)};
    return out;
}

/// Applies a change of variable to the whole candidate; the isomorphisms are
/// returned through `changed` when requested.
inline HoeCandidate change_candidate(const HoeCandidate& c, const VarChange& ch, ChangedOre* changed = nullptr)
{
    ChangedOre co = change_var(c.ore, ch);
    HoeCandidate out = transport(c, co);
    if (changed) *changed = std::move(co);
    return out;
}

/// f: T2 -> T0 composed after g: T1 -> T2.
inline AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g)
{
    std::vector<Elem> imgs;
    for (const auto& im : g.images()) imgs.push_back(f.apply(im));
    return make_algebra_map(g.source(), f.unit().algebra(), std::move(imgs), f.name() + " o " + g.name());
}

// ---------------------------------------------------------------------------
// Normalization

struct NormalizationState {
    Elem alpha, alpha_inv, beta;
    DeltaXForm form;
    HoeCandidate current;
    std::vector<std::string> log;
};

struct NormalizationResult {
    HoeCandidate output; // standard shape
    DeltaXForm form;     // s = beta^-1 (x) 1, t = 1 (x) 1, v = 0
    Elem beta, beta_inv; // of R
    Elem antipode_x;     // S(x) in the output T
    Report report;       // every equation verified along the way
    std::vector<std::string> log;
    AlgebraMap to_input;   // output T -> input T
    NormalizationState first_stage; // alpha, beta of the input after the epsilon shift
};

/// Brings Delta(x) to the standard shape beta^-1 (x) x + x (x) 1 + w.
/// Every intermediate equation is verified exactly; the first failure aborts
/// with a VerificationFailure naming it.
inline NormalizationResult normalize(const HoeCandidate& input)
{
    NormalizationResult res;
    Report& rep = res.report;
    const HopfAlg& H = *input.ore.base;
    auto R = input.ore.R();
    Elem one = Elem::one(R);
    HoeCandidate cur = input;
    AlgebraMap to_input = identity_map(input.ore.T, "id");

    auto apply_change = [&](const VarChange& ch) {
        ChangedOre co = change_var(cur.ore, ch);
        cur = transport(cur, co);
        to_input = compose(to_input, co.new_to_old);
        res.log.push_back(co.description);
    };
    auto fail_on_last = [&] { detail::require_last(rep); };

    // step 0: eps(x) = 0
    if (!is_zero(cur.counit_x)) apply_change(shift_by(cur.counit_x));
    rep.add("eps(x) = 0", is_zero(cur.counit_x), cur.counit_x.get_str());
    fail_on_last();

    // step 1: decomposition, alpha, beta, the identity suite, v = 0
    DeltaXForm f = decompose_delta_x(cur.ore, cur.delta_x);
    AlphaBeta ab = compute_alpha_beta(H, f, &rep);
    Report ids = identity_suite(H, f);
    rep.merge(ids);
    if (!ids.verdict()) throw VerificationFailure(ids.failures().front()->name, ids.failures().front()->witness, rep);
    f = eliminate_v(H, f, ab.alpha, &rep);

    // step 2: alpha^-1 = sum S(s1) s2 and the identities around it
    Elem alpha_inv = t_flatten(antipode_at(H, f.s, 0));
    detail::expect_equal(rep, "alpha alpha^-1 = 1", ab.alpha * alpha_inv, one);
    fail_on_last();
    detail::expect_equal(rep, "alpha^-1 alpha = 1", alpha_inv * ab.alpha, one);
    fail_on_last();
    res.first_stage = NormalizationState{ab.alpha, alpha_inv, ab.beta, f, cur, res.log};

    const Tensor& s = f.s;
    const Tensor& t = f.t;
    auto DxI = [&](const Tensor& a) { return delta_at(H, a, 0); };
    auto IxD = [&](const Tensor& a) { return delta_at(H, a, 1); };
    detail::expect_equal(rep, "newte5: (I(x)D)(s)(1(x)s) = (D(x)I)(s)", IxD(s) * detail::one_ox(s), DxI(s));
    fail_on_last();
    detail::expect_equal(rep, "alphainver: s(1(x)beta) = t(alpha(x)1)", s * Tensor::pure({one, ab.beta}),
                         t * Tensor::pure({ab.alpha, one}));
    fail_on_last();
    detail::expect_equal(rep, "e7: s(alpha^-1(x)beta) = t", s * Tensor::pure({alpha_inv, ab.beta}), t);
    fail_on_last();
    Tensor d_alpha_inv = H.Delta(alpha_inv);
    Tensor dxi_s = DxI(s);
    detail::expect_equal(rep, "gbeta: (D(x)I)(s)(1(x)alpha^-1(x)beta) = (D(x)I)(s)(D(alpha^-1)(x)beta)(s(x)1)",
                         dxi_s * Tensor::pure({one, alpha_inv, ab.beta}),
                         dxi_s * outer(d_alpha_inv, Tensor::from_elem(ab.beta)) * detail::ox_one(s));
    fail_on_last();
    Tensor d_alpha = H.Delta(ab.alpha);
    detail::expect_equal(rep, "deltaalpha: D(alpha)(1(x)alpha^-1) = D(alpha)D(alpha^-1)s",
                         d_alpha * Tensor::pure({one, alpha_inv}), d_alpha * d_alpha_inv * s);
    fail_on_last();
    detail::expect_equal(rep, "deltaalphainver: 1(x)alpha^-1 = D(alpha^-1)s", Tensor::pure({one, alpha_inv}),
                         d_alpha_inv * s);
    fail_on_last();

    // step 3: x <- alpha^-1 x gives Delta(x) = 1 (x) x + x (x) beta' + w
    apply_change(left_unit(alpha_inv, ab.alpha));
    DeltaXForm f8 = decompose_delta_x(cur.ore, cur.delta_x);
    Elem beta1 = alpha_inv * ab.beta;
    detail::expect_equal(rep, "e8: s = 1(x)1", f8.s, Tensor::unit(R, 2));
    fail_on_last();
    detail::expect_equal(rep, "e8: t = 1(x)alpha^-1 beta", f8.t, Tensor::pure({one, beta1}));
    fail_on_last();
    detail::expect_equal(rep, "e8: v = 0", f8.v, Tensor(R, 2));
    fail_on_last();
    rep.add("grouplike: Delta(beta) = beta(x)beta, eps(beta) = 1", is_grouplike(H, beta1),
            "beta = " + beta1.to_string() + ", Delta(beta) = " + describe(H.Delta(beta1)));
    fail_on_last();
    Elem beta1_inv = H.S(beta1);
    detail::expect_equal(rep, "beta S(beta) = 1", beta1 * beta1_inv, one);
    fail_on_last();

    // step 4: x <- x beta^-1 gives Delta(x) = beta^-1 (x) x + x (x) 1 + w
    apply_change(right_unit(beta1_inv, beta1));
    DeltaXForm fs = decompose_delta_x(cur.ore, cur.delta_x);
    detail::expect_equal(rep, "newdelta: s = beta^-1(x)1", fs.s, Tensor::pure({beta1_inv, one}));
    fail_on_last();
    detail::expect_equal(rep, "newdelta: t = 1(x)1", fs.t, Tensor::unit(R, 2));
    fail_on_last();
    detail::expect_equal(rep, "newdelta: v = 0", fs.v, Tensor(R, 2));
    fail_on_last();
    detail::expect_equal(rep, "eps(x) = 0 after substitution", cur.counit_x, Scalar(0));
    fail_on_last();

    // step 5: antipode of the standard form
    Elem w_s = t_flatten(antipode_at(H, fs.w, 1)); // sum w1 S(w2)
    Elem s_w = t_flatten(antipode_at(H, fs.w, 0)); // sum S(w1) w2
    detail::expect_equal(rep, "beta sum w1 S(w2) = sum S(w1) w2", beta1 * w_s, s_w);
    fail_on_last();
    const OreExt& oe = cur.ore;
    res.antipode_x = -(oe.lift(beta1) * (oe.x_elem() + oe.lift(w_s)));

    res.output = cur;
    res.form = fs;
    res.beta = beta1;
    res.beta_inv = beta1_inv;
    res.to_input = to_input;
    return res;
}

// ---------------------------------------------------------------------------
// Standard-shape structure conditions

inline HoeCandidate candidate_from_hoe(const OreExt& e, const HOEData& d)
{
    const HopfAlg& H = *e.base;
    Elem beta_inv = H.S(d.beta);
    DeltaXForm f{Tensor::pure({beta_inv, H.one()}), Tensor::unit(e.R(), 2), Tensor(e.R(), 2), d.w};
    return HoeCandidate{e, assemble_delta_x(e, f), Scalar(0)};
}

/// (beta, w, chi) from a standard-shape Delta(x); chi = eps o sigma, which is
/// forced when sigma is the left winding by chi.
inline HOEData derive_hoe_data(const HoeCandidate& c)
{
    const HopfAlg& H = *c.ore.base;
    DeltaXForm f = decompose_delta_x(c.ore, c.delta_x);
    if (f.t != Tensor::unit(c.ore.R(), 2) || !f.v.is_zero() || !is_zero(c.counit_x))
        throw VerificationFailure("standard shape", "Delta(x) is not of the form beta^-1 ox x + x ox 1 + w");
    Elem beta_inv = detail::counit_right(H, f.s);
    if (f.s != Tensor::pure({beta_inv, H.one()}))
        throw VerificationFailure("standard shape", "s is not of the form beta^-1 ox 1");
    std::vector<Scalar> chi;
    for (Symbol g = 0; g < c.ore.R()->num_generators(); ++g) chi.push_back(H.eps(c.ore.sigma.image(g)));
    return HOEData{H.S(beta_inv), f.w, make_character(c.ore.R(), std::move(chi))};
}

inline Report check_structure(const OreExt& e, const HOEData& d, SignVariant sign, std::size_t degree_bound = 4)
{
    Report rep;
    const HopfAlg& H = *e.base;
    auto R = e.R();
    Elem one = H.one();
    rep.metadata["sign_variant"] = to_string(sign);

    // (1)
    bool gl = is_grouplike(H, d.beta);
    rep.add("beta grouplike", gl, gl ? "" : "Delta(beta) = " + describe(H.Delta(d.beta)));
    if (!gl) return rep;
    Elem beta_inv = H.S(d.beta);
    Elem w_s = t_flatten(antipode_at(H, d.w, 1));
    Elem s_w = t_flatten(antipode_at(H, d.w, 0));
    detail::expect_equal(rep, "beta sum w1 S(w2) = sum S(w1) w2", d.beta * w_s, s_w);

    // (2)
    auto chi_fail = d.chi.well_definedness();
    rep.add("chi is a character", !chi_fail, chi_fail ? std::string(chi_fail->what()) : "");
    if (chi_fail) return rep;
    AlgebraMap tl = winding(H, d.chi, Side::left);
    AlgebraMap adtr = conjugated_right_winding(H, d.chi, d.beta, beta_inv);
    auto diff1 = maps_differ(e.sigma, tl);
    rep.add("sigma = tau^l_chi", !diff1, diff1.value_or(""));
    auto diff2 = maps_differ(tl, adtr);
    rep.add("tau^l_chi = ad(beta^-1) tau^r_chi", !diff2, diff2.value_or(""));

    // (3)
    Tensor binv1 = Tensor::pure({beta_inv, one});
    SlotFn delta_slot = [&](const Word& u) { return Tensor::from_poly(R, e.T->derivation_word(u)); };
    auto residue = [&](const Elem& r) {
        Tensor dr = H.Delta(r);
        Tensor res = H.Delta(e.delta_of(r)) - slot_apply(dr, 0, delta_slot) - binv1 * slot_apply(dr, 1, delta_slot) -
                     d.w * dr;
        Tensor tail = H.Delta(e.sigma_of(r)) * d.w;
        return sign == SignVariant::displayed ? res - tail : res + tail;
    };
    bool all_ok = true;
    std::string first_witness;
    for (Symbol g = 0; g < R->num_generators(); ++g) {
        Tensor res = residue(Elem::generator(R, g));
        rep.add("delta relation [" + R->generator_names()[g] + "]", res.is_zero(),
                res.is_zero() ? "" : "residue " + describe(res));
    }
    std::size_t monomials = 0;
    for (const Word& u : R->normal_words(degree_bound)) {
        if (u.size() < 2) continue;
        ++monomials;
        Tensor res = residue(Elem::word(R, u));
        if (!res.is_zero() && all_ok) {
            all_ok = false;
            first_witness = R->format(u) + ": residue " + describe(res);
        }
    }
    rep.add("delta relation on " + std::to_string(monomials) + " monomials of degree <= " +
                std::to_string(degree_bound),
            all_ok, first_witness);
    Tensor lhs = outer(d.w, Tensor::unit(R, 1)) + delta_at(H, d.w, 0);
    Tensor rhs = outer(Tensor::from_elem(beta_inv), d.w) + delta_at(H, d.w, 1);
    detail::expect_equal(rep, "w-cocycle: w(x)1 + (D(x)I)w = beta^-1(x)w + (I(x)D)w", lhs, rhs);
    return rep;
}

struct BuiltHoe {
    std::shared_ptr<const HopfAlg> hopf; // Hopf structure on T
    Elem antipode_x;
    Report report;
};

/// Installs Delta(x) = beta^-1 (x) x + x (x) 1 + w, eps(x) = 0,
/// S(x) = -beta(x + sum w1 S(w2)) on T and verifies the Hopf axioms on T
/// directly. This is the ground truth the structural conditions must agree with.
inline BuiltHoe build_hoe(const OreExt& e, const HOEData& d, const HopfSuiteOptions& opt = {})
{
    BuiltHoe out;
    Report& rep = out.report;
    const HopfAlg& H = *e.base;
    auto R = e.R();
    const auto& T = e.T;
    Elem x = e.x_elem();
    Elem beta_inv = H.S(d.beta);
    Elem w_s = t_flatten(antipode_at(H, d.w, 1));
    out.antipode_x = -(e.lift(d.beta) * (x + e.lift(w_s)));
    HoeCandidate cand = candidate_from_hoe(e, d);

    std::vector<Tensor> dimgs;
    std::vector<Scalar> eimgs;
    std::vector<Elem> simgs;
    for (Symbol g = 0; g < R->num_generators(); ++g) {
        dimgs.push_back(H.delta.image(g).lift(T));
        eimgs.push_back(H.counit.image(g));
        simgs.push_back(e.lift(H.antipode.image(g)));
    }
    dimgs.push_back(cand.delta_x);
    eimgs.push_back(Scalar(0));
    simgs.push_back(out.antipode_x);
    auto HT = std::make_shared<HopfAlg>(T, std::move(dimgs), std::move(eimgs), std::move(simgs));

    for (Symbol g = 0; g < R->num_generators(); ++g) {
        const std::string& name = R->generator_names()[g];
        Elem r = Elem::generator(R, g);
        Elem rt = e.lift(r), sr = e.lift(e.sigma_of(r)), dr = e.lift(e.delta_of(r));
        Tensor lhs = HT->Delta(x) * HT->Delta(rt);
        Tensor rhs = HT->Delta(sr) * HT->Delta(x) + HT->Delta(dr);
        detail::expect_equal(rep, "Delta(x)Delta(r) = Delta(sigma(r))Delta(x) + Delta(delta(r)) [" + name + "]", lhs, rhs);
        Scalar el = HT->eps(x) * HT->eps(rt);
        Scalar er = HT->eps(sr) * HT->eps(x) + HT->eps(dr);
        detail::expect_equal(rep, "eps(x)eps(r) = eps(sigma(r))eps(x) + eps(delta(r)) [" + name + "]", el, er);
        Elem sl = HT->S(rt) * HT->S(x);
        Elem srr = HT->S(x) * HT->S(sr) + HT->S(dr);
        detail::expect_equal(rep, "S(r)S(x) = S(x)S(sigma(r)) + S(delta(r)) [" + name + "]", sl, srr);
    }
    rep.merge(hopf_axiom_suite(*HT, opt), "T: ");

    OreElem sx = e.coefficients(out.antipode_x);
    bool linear = sx.coeffs.size() == 2;
    bool unit = linear && sx.coeffs[1] * (-beta_inv) == Elem::one(R) && (-beta_inv) * sx.coeffs[1] == Elem::one(R);
    rep.add("S(x) = a x + b with a a unit", linear && unit, "S(x) = " + out.antipode_x.to_string());
    out.hopf = HT;
    return out;
}

struct SignResolution {
    bool ground_truth = false;
    bool displayed_agrees = false;
    bool commutator_agrees = false;
    Report ground;
    Report displayed;
    Report commutator;

    std::string label() const
    {
        if (displayed_agrees && commutator_agrees) return "either";
        if (displayed_agrees) return "displayed";
        if (commutator_agrees) return "commutator";
        return "none";
    }
};

/// Runs both readings of the delta relation and the ground truth, and records
/// which reading agrees with it.
inline SignResolution resolve_sign(const OreExt& e, const HOEData& d, std::size_t degree_bound = 4,
                                   const HopfSuiteOptions& opt = {})
{
    SignResolution s;
    s.ground = build_hoe(e, d, opt).report;
    s.ground_truth = s.ground.verdict();
    s.displayed = check_structure(e, d, SignVariant::displayed, degree_bound);
    s.commutator = check_structure(e, d, SignVariant::commutator, degree_bound);
    s.displayed_agrees = s.displayed.verdict() == s.ground_truth;
    s.commutator_agrees = s.commutator.verdict() == s.ground_truth;
    return s;
}

} // namespace hoe
