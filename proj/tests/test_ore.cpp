#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hoe;
using fixtures::gen;
using fixtures::q;
using fixtures::zoo;

namespace {

/// Laurent coefficients with sigma(g) = 2g and the given delta images.
OreExt laurent_ore(const Assembled& l, Elem dg, Elem dG)
{
    Elem g = gen(l, "g"), G = gen(l, "G");
    return make_ore(l.hopf, {Scalar(2) * g, q(1, 2) * G}, {q(1, 2) * g, Scalar(2) * G}, {std::move(dg), std::move(dG)});
}

NCPoly random_expr(std::mt19937& rng, std::size_t alphabet)
{
    std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(alphabet - 1));
    std::uniform_int_distribution<int> len(0, 3), coef(-2, 2);
    NCPoly p;
    for (int t = 0; t < 3; ++t) {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& s : w) s = sym(rng);
        p.add_term(w, Scalar(coef(rng)));
    }
    return p;
}

/// Checks x' r = sigma'(r) x' + delta'(r) inside the old extension, where x'
/// is the new variable written in old coordinates.
void expect_oracle(const OreExt& old, const ChangedOre& ch)
{
    Elem xnew_old = ch.new_to_old.image(ch.ext.x());
    for (Symbol s = 0; s < old.R()->num_generators(); ++s) {
        Elem r = Elem::generator(old.R(), s);
        Elem lhs = xnew_old * old.lift(r);
        Elem rhs = old.lift(ch.ext.sigma.image(s)) * xnew_old + old.lift(ch.ext.delta_images[s]);
        EXPECT_EQ(lhs, rhs) << ch.description << " on " << old.R()->generator_names()[s];
    }
}

void expect_same_data(const OreExt& a, const OreExt& b)
{
    for (Symbol s = 0; s < a.R()->num_generators(); ++s) {
        EXPECT_EQ(a.sigma.image(s), b.sigma.image(s));
        EXPECT_EQ(a.sigma_inv.image(s), b.sigma_inv.image(s));
        EXPECT_EQ(a.delta_images[s], b.delta_images[s]);
    }
}

} // namespace

TEST(ValidateOre, CommutativeIdentityIsValid)
{
    auto h = zoo("heisenberg");
    EXPECT_TRUE(validate_ore(*h.ore).verdict());
}

TEST(ValidateOre, LaurentScalingIsValid)
{
    auto l = zoo("laurent");
    Report r = validate_ore(laurent_ore(l, Elem::zero(l.R), Elem::zero(l.R)));
    EXPECT_TRUE(r.verdict()) << r.to_text();
}

TEST(ValidateOre, LeibnizForcesDeltaOfInverse)
{
    auto l = zoo("laurent");
    Elem G = gen(l, "G");
    Report good = validate_ore(laurent_ore(l, Elem::one(l.R), q(-1, 2) * G * G));
    EXPECT_TRUE(good.verdict()) << good.to_text();
    Report bad = validate_ore(laurent_ore(l, Elem::one(l.R), Elem::zero(l.R)));
    EXPECT_FALSE(bad.verdict());
    EXPECT_FALSE(bad.find("delta Leibniz on g*G = 1")->pass);
}

TEST(ValidateOre, NonInverseSigmaRejected)
{
    auto l = zoo("laurent");
    Elem g = gen(l, "g"), G = gen(l, "G");
    OreExt e = make_ore(l.hopf, {Scalar(2) * g, q(1, 2) * G}, {g, G}, {Elem::zero(l.R), Elem::zero(l.R)});
    Report r = validate_ore(e);
    EXPECT_FALSE(r.verdict());
    EXPECT_FALSE(r.find("sigma o sigma^-1 = id [g]")->pass);
}

TEST(OreNormalForm, Examples)
{
    auto l = zoo("laurent-q2");
    const OreExt& e = *l.ore;
    Symbol x = e.x(), g = 0, h = 0;
    OreElem nf = ore_normal_form(e, NCPoly::monomial({x, g}));
    ASSERT_EQ(nf.coeffs.size(), 2u);
    EXPECT_TRUE(nf.coeffs[0].is_zero());
    EXPECT_EQ(nf.coeffs[1], Scalar(2) * gen(l, "g"));

    auto p = zoo("poly-shift");
    OreElem nh = ore_normal_form(*p.ore, NCPoly::monomial({p.ore->x(), h}));
    ASSERT_EQ(nh.coeffs.size(), 2u);
    EXPECT_EQ(nh.coeffs[1], gen(p, "h") + Elem::one(p.R));
    EXPECT_EQ(Elem(p.ore->T, NCPoly::monomial({p.ore->x(), h})).to_string(), "h*x + x");

    auto hz = zoo("heisenberg");
    EXPECT_EQ(Elem(hz.ore->T, NCPoly::monomial({hz.ore->x(), 0})).to_string(), "y*x");
}

TEST(OreNormalForm, HigherPowersUseRecursion)
{
    auto p = zoo("poly-shift-derivation");
    const OreExt& e = *p.ore;
    Symbol x = e.x();
    // x h = (h+1) x + h; x^2 h = (h+2) x^2 + (2h+1) x + h
    OreElem nf = ore_normal_form(e, NCPoly::monomial({x, x, 0}));
    Elem h = gen(p, "h"), one = Elem::one(p.R);
    ASSERT_EQ(nf.coeffs.size(), 3u);
    EXPECT_EQ(nf.coeffs[2], h + Scalar(2) * one);
    EXPECT_EQ(nf.coeffs[1], Scalar(2) * h + one);
    EXPECT_EQ(nf.coeffs[0], h);
}

TEST(OreNormalForm, IsAnAlgebraMap)
{
    std::mt19937 rng(3);
    for (const char* name : {"laurent-q2", "poly-shift-derivation", "heisenberg"}) {
        auto a = zoo(name);
        const auto& T = a.ore->T;
        for (int i = 0; i < 40; ++i) {
            NCPoly p1 = random_expr(rng, T->num_generators()), p2 = random_expr(rng, T->num_generators());
            EXPECT_EQ(Elem(T, p1 * p2), Elem(T, p1) * Elem(T, p2)) << name;
            EXPECT_EQ((Elem(T, p1) * Elem(T, p2)) * Elem(T, p1), Elem(T, p1) * (Elem(T, p2) * Elem(T, p1))) << name;
        }
    }
}

TEST(OreNormalForm, FreeModuleLaw)
{
    std::mt19937 rng(5);
    auto a = zoo("poly-shift-derivation");
    const OreExt& e = *a.ore;
    for (int i = 0; i < 40; ++i) {
        Elem t1(e.T, random_expr(rng, e.T->num_generators())), t2(e.T, random_expr(rng, e.T->num_generators()));
        OreElem c1 = e.coefficients(t1), c2 = e.coefficients(t2), c = e.coefficients(t1 + t2);
        std::size_t n = std::max(c1.coeffs.size(), c2.coeffs.size());
        for (std::size_t k = 0; k < n; ++k) {
            Elem a1 = k < c1.coeffs.size() ? c1.coeffs[k] : Elem::zero(e.R());
            Elem a2 = k < c2.coeffs.size() ? c2.coeffs[k] : Elem::zero(e.R());
            Elem s = k < c.coeffs.size() ? c.coeffs[k] : Elem::zero(e.R());
            EXPECT_EQ(s, a1 + a2);
        }
        EXPECT_EQ(e.from_coefficients(c1), t1);
        if (!c.is_zero()) {
            EXPECT_FALSE(c.coeffs.back().is_zero());
        }
    }
}

TEST(ChangeVar, ShiftByOne)
{
    auto l = zoo("laurent-q2");
    ChangedOre ch = change_var(*l.ore, shift_by(1));
    EXPECT_EQ(ch.ext.delta_images[0], gen(l, "g"));
    EXPECT_EQ(ch.ext.sigma.image(0), Scalar(2) * gen(l, "g"));
    expect_oracle(*l.ore, ch);
}

TEST(ChangeVar, LeftUnitByGrouplike)
{
    auto l = zoo("laurent-q2");
    ChangedOre ch = change_var(*l.ore, left_unit(gen(l, "g"), gen(l, "G")));
    EXPECT_EQ(ch.ext.sigma.image(0), Scalar(2) * gen(l, "g"));
    expect_oracle(*l.ore, ch);
}

TEST(ChangeVar, RightUnitByGrouplike)
{
    auto l = zoo("laurent-q2");
    ChangedOre ch = change_var(*l.ore, right_unit(gen(l, "g"), gen(l, "G")));
    EXPECT_EQ(ch.ext.sigma.image(0), Scalar(2) * gen(l, "g"));
    expect_oracle(*l.ore, ch);
}

TEST(ChangeVar, ClosedFormsAgreeWithDirectRewriting)
{
    // noncentral units and a nonzero derivation
    auto s = zoo("smash-z-scale");
    Elem h = gen(s, "h"), g = gen(s, "g"), G = gen(s, "G");
    // sigma = conjugation by g; delta(r) = h r - sigma(r) h
    OreExt e = make_ore(s.hopf, {g * h * G, g, G}, {G * h * g, g, G}, {-(h * h), h * g - g * h, h * G - G * h});
    ASSERT_TRUE(validate_ore(e).verdict()) << validate_ore(e).to_text();
    for (const auto& ch : {shift_by(q(-3, 2)), left_unit(g, G), left_unit(G, g), right_unit(g, G), right_unit(G, g),
                           left_unit(q(2) * g, q(1, 2) * G), right_unit(q(-1, 3) * G, q(-3) * g)}) {
        ChangedOre co = change_var(e, ch);
        expect_oracle(e, co);
        // isomorphisms are mutually inverse on generators
        for (Symbol k = 0; k < e.T->num_generators(); ++k) {
            Elem t = Elem::generator(e.T, k);
            EXPECT_EQ(co.new_to_old.apply(co.old_to_new.apply(t)), t) << co.description;
        }
    }
}

TEST(ChangeVar, RoundTrips)
{
    auto p = zoo("poly-shift-derivation");
    const OreExt& e = *p.ore;
    ChangedOre a = change_var(e, shift_by(q(5, 7)));
    ChangedOre b = change_var(a.ext, shift_by(q(-5, 7)));
    expect_same_data(e, b.ext);

    auto l = zoo("laurent-q2");
    Elem g = gen(l, "g"), G = gen(l, "G");
    OreExt le = laurent_ore(l, Elem::one(l.R), q(-1, 2) * G * G);
    ChangedOre c = change_var(le, left_unit(Scalar(3) * g, q(1, 3) * G));
    ChangedOre d = change_var(c.ext, left_unit(q(1, 3) * G, Scalar(3) * g));
    expect_same_data(le, d.ext);
}

TEST(ChangeVar, NonUnitRejected)
{
    auto p = zoo("poly-shift");
    Elem h = gen(p, "h"), one = Elem::one(p.R);
    EXPECT_THROW(change_var(*p.ore, left_unit(h, one)), NotAUnit);
    EXPECT_THROW(change_var(*p.ore, right_unit(Scalar(2) * one, one)), NotAUnit);
}
