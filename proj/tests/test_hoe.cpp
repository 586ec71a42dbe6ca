#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace hoe;
using fixtures::gen;
using fixtures::q;
using fixtures::zoo;

namespace {

Tensor unit2(const Assembled& a) { return Tensor::unit(a.R, 2); }

bool same_ore_data(const OreExt& a, const OreExt& b)
{
    for (Symbol s = 0; s < a.R()->num_generators(); ++s)
        if (a.sigma.image(s) != b.sigma.image(s) || a.delta_images[s] != b.delta_images[s]) return false;
    return true;
}

} // namespace

TEST(Decompose, Heisenberg)
{
    auto a = zoo("heisenberg");
    DeltaXForm f = decompose_delta_x(*a.ore, a.candidate->delta_x);
    EXPECT_EQ(f.s, unit2(a));
    EXPECT_EQ(f.t, unit2(a));
    EXPECT_TRUE(f.v.is_zero());
    EXPECT_EQ(f.w, Tensor::pure({gen(a, "y"), gen(a, "z")}));
    EXPECT_EQ(assemble_delta_x(*a.ore, f), a.candidate->delta_x);
}

TEST(Decompose, TwistedLaurent)
{
    auto a = zoo("laurent-twisted");
    Elem g = gen(a, "g"), one = Elem::one(a.R);
    DeltaXForm f = decompose_delta_x(*a.ore, a.candidate->delta_x);
    EXPECT_EQ(f.s, Tensor::pure({g, one}));
    EXPECT_EQ(f.t, Tensor::pure({one, g}));
    EXPECT_TRUE(f.v.is_zero());
    EXPECT_TRUE(f.w.is_zero());
}

TEST(Decompose, HigherPowerRejected)
{
    auto a = zoo("heisenberg");
    const OreExt& e = *a.ore;
    Elem x = e.x_elem();
    Tensor bad = a.candidate->delta_x + Tensor::pure({x * x, Elem::one(e.T)});
    EXPECT_THROW(decompose_delta_x(e, bad), HigherDegreeTerm);
}

TEST(AlphaBeta, Examples)
{
    auto h = zoo("heisenberg");
    auto hb = compute_alpha_beta(*h.hopf, decompose_delta_x(*h.ore, h.candidate->delta_x));
    EXPECT_EQ(hb.alpha, Elem::one(h.R));
    EXPECT_EQ(hb.beta, Elem::one(h.R));

    auto l = zoo("laurent-twisted");
    auto lb = compute_alpha_beta(*l.hopf, decompose_delta_x(*l.ore, l.candidate->delta_x));
    EXPECT_EQ(lb.alpha, gen(l, "g"));
    EXPECT_EQ(lb.beta, gen(l, "g"));
}

TEST(AlphaBeta, CorruptedCoefficientRejected)
{
    auto h = zoo("heisenberg");
    DeltaXForm f = decompose_delta_x(*h.ore, h.candidate->delta_x);
    f.s = Scalar(2) * unit2(h);
    try {
        compute_alpha_beta(*h.hopf, f);
        FAIL() << "expected a verification failure";
    } catch (const VerificationFailure& ex) {
        EXPECT_EQ(ex.equation(), "identity: sum eps(s1) s2 = 1");
        EXPECT_EQ(ex.witness(), "lhs - rhs = 1");
    }
}

TEST(IdentitySuite, HeisenbergAndTwistedLaurentPass)
{
    for (const char* name : {"heisenberg", "laurent-twisted", "laurent-q2"}) {
        auto a = zoo(name);
        Report r = identity_suite(*a.hopf, decompose_delta_x(*a.ore, a.candidate->delta_x));
        EXPECT_TRUE(r.verdict()) << name << "\n" << r.to_text();
        EXPECT_EQ(r.checks.size(), 10u);
    }
}

TEST(IdentitySuite, SyntheticVFailsScalarIdentity)
{
    auto a = zoo("heisenberg");
    Elem y = gen(a, "y"), z = gen(a, "z");
    DeltaXForm f{unit2(a), unit2(a), Tensor::pure({y, z}), Tensor(a.R, 2)};
    Report r = identity_suite(*a.hopf, f);
    EXPECT_TRUE(r.find("ISv: sum eps(v1) eps(v2) = 0")->pass);
    const Check* sc = r.find("sc: s(1(x)sum eps(v1)v2) = v(alpha(x)1)");
    ASSERT_NE(sc, nullptr);
    EXPECT_FALSE(sc->pass);
    EXPECT_EQ(sc->witness, "lhs - rhs = -y ox z");
}

TEST(EliminateV, PassThroughWhenZero)
{
    auto a = zoo("heisenberg");
    DeltaXForm f = decompose_delta_x(*a.ore, a.candidate->delta_x);
    DeltaXForm g = eliminate_v(*a.hopf, f, Elem::one(a.R));
    EXPECT_EQ(g.s, f.s);
    EXPECT_EQ(g.w, f.w);
    EXPECT_TRUE(g.v.is_zero());
}

TEST(EliminateV, NilpotentCoefficientReported)
{
    auto d = zoo("dual-numbers");
    Elem y = gen(d, "y"), one = Elem::one(d.R);
    // only the counit is consulted
    HopfAlg H(d.R, {Tensor::pure({y, one}) + Tensor::pure({one, y})}, {Scalar(0)}, {-y});
    DeltaXForm f{Tensor::unit(d.R, 2), Tensor::unit(d.R, 2), Tensor::pure({y, y}), Tensor(d.R, 2)};
    try {
        eliminate_v(H, f, one);
        FAIL() << "expected a verification failure";
    } catch (const VerificationFailure& ex) {
        EXPECT_EQ(ex.equation(), "v(alpha(x)1) = 0");
        EXPECT_EQ(ex.witness(), "v(alpha(x)1) = y ox y");
    }
}

TEST(Normalize, TwistedLaurent)
{
    auto a = zoo("laurent-twisted");
    NormalizationResult r = normalize(*a.candidate);
    EXPECT_EQ(r.log, (std::vector<std::string>{"left_unit(G)", "right_unit(1)"}));
    EXPECT_EQ(r.beta, Elem::one(a.R));
    EXPECT_EQ(r.first_stage.alpha, gen(a, "g"));
    EXPECT_EQ(r.first_stage.alpha_inv, gen(a, "G"));
    EXPECT_EQ(r.antipode_x.to_string(), "-x");
    EXPECT_EQ(r.output.delta_x.to_string(), "x ox 1 + 1 ox x");
    EXPECT_TRUE(same_ore_data(*a.ore, r.output.ore));
    EXPECT_TRUE(r.report.verdict());
    for (const char* eq : {"alphainver: s(1(x)beta) = t(alpha(x)1)", "deltaalphainver: 1(x)alpha^-1 = D(alpha^-1)s",
                           "grouplike: Delta(beta) = beta(x)beta, eps(beta) = 1", "beta sum w1 S(w2) = sum S(w1) w2"})
        EXPECT_NE(r.report.find(eq), nullptr) << eq;
}

TEST(Normalize, HeisenbergIsFixedPoint)
{
    auto a = zoo("heisenberg");
    NormalizationResult r = normalize(*a.candidate);
    EXPECT_EQ(r.output.delta_x, a.candidate->delta_x);
    EXPECT_EQ(r.antipode_x.to_string(), "y*z - x");
    EXPECT_EQ(r.beta, Elem::one(a.R));
    EXPECT_TRUE(same_ore_data(*a.ore, r.output.ore));
    // x is unchanged
    EXPECT_EQ(r.to_input.image(r.output.ore.x()).to_string(), "x");
}

TEST(Normalize, StandardLaurentKeepsBeta)
{
    auto a = zoo("laurent-q2");
    NormalizationResult r = normalize(*a.candidate);
    EXPECT_EQ(r.log, (std::vector<std::string>{"left_unit(g)", "right_unit(G)"}));
    EXPECT_EQ(r.beta, gen(a, "g"));
    EXPECT_EQ(r.antipode_x.to_string(), "-g*x");
    // the new variable is g x g^-1 = x/2
    EXPECT_EQ(r.to_input.image(r.output.ore.x()).to_string(), "1/2*x");
}

TEST(Normalize, IdempotentOnStandardForms)
{
    for (const char* name : {"heisenberg", "laurent-q2", "laurent-twisted", "poly-shift", "poly-shift-derivation"}) {
        auto a = zoo(name);
        NormalizationResult once = normalize(*a.candidate);
        NormalizationResult twice = normalize(once.output);
        EXPECT_EQ(twice.beta, once.beta) << name;
        EXPECT_EQ(twice.form.w, once.form.w) << name;
        EXPECT_EQ(twice.form.s, once.form.s) << name;
        EXPECT_TRUE(same_ore_data(once.output.ore, twice.output.ore)) << name;
    }
}

TEST(Normalize, CounitShiftComesFirst)
{
    auto a = zoo("heisenberg");
    HoeCandidate shifted = change_candidate(*a.candidate, shift_by(q(3)));
    EXPECT_EQ(shifted.counit_x, q(-3));
    NormalizationResult r = normalize(shifted);
    ASSERT_FALSE(r.log.empty());
    EXPECT_EQ(r.log.front(), "shift(-3)");
    EXPECT_EQ(r.output.delta_x.to_string(), a.candidate->delta_x.to_string());
}

TEST(Normalize, TwistRecoversScalarMultipleAndCoboundary)
{
    auto a = zoo("laurent-q2");
    Elem g = gen(a, "g"), G = gen(a, "G");
    ChangedOre c1, c2;
    HoeCandidate t1 = change_candidate(*a.candidate, shift_by(q(2)), &c1);
    HoeCandidate t2 = change_candidate(t1, left_unit(g * g, G * G), &c2);
    NormalizationResult r = normalize(t2);
    AlgebraMap to_orig = compose(c1.new_to_old, compose(c2.new_to_old, r.to_input));
    OreElem img = a.ore->coefficients(to_orig.image(r.output.ore.x()));
    ASSERT_EQ(img.coeffs.size(), 2u);
    Elem lambda = img.coeffs[1], r0 = img.coeffs[0];
    ASSERT_TRUE(lambda.poly().is_scalar());
    Scalar lam = lambda.poly().coeff({});
    EXPECT_NE(lam, 0);
    EXPECT_EQ(r.beta, g);
    const HopfAlg& H = *a.hopf;
    Tensor expected = lam * a.hoe->w + H.Delta(r0) - Tensor::pure({G, r0}) - Tensor::pure({r0, Elem::one(a.R)});
    EXPECT_EQ(r.form.w, expected);
}

TEST(CheckStructure, HeisenbergSignVariants)
{
    auto a = zoo("heisenberg");
    Report com = check_structure(*a.ore, *a.hoe, SignVariant::commutator);
    EXPECT_TRUE(com.verdict()) << com.to_text();
    Report dis = check_structure(*a.ore, *a.hoe, SignVariant::displayed);
    EXPECT_FALSE(dis.verdict());
    const Check* c = dis.find("delta relation [y]");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->pass);
    EXPECT_EQ(c->witness, "residue -2*y^2 ox z - 2*y ox y*z");
    EXPECT_TRUE(dis.find("beta grouplike")->pass);
    EXPECT_TRUE(dis.find("sigma = tau^l_chi")->pass);
}

TEST(CheckStructure, LaurentPassesEitherSign)
{
    auto a = zoo("laurent-q2");
    EXPECT_TRUE(check_structure(*a.ore, *a.hoe, SignVariant::commutator).verdict());
    EXPECT_TRUE(check_structure(*a.ore, *a.hoe, SignVariant::displayed).verdict());
}

TEST(CheckStructure, WrongCharacterFailsWinding)
{
    auto a = zoo("heisenberg");
    HOEData d = *a.hoe;
    d.chi = make_character(a.R, {q(1), q(0)});
    Report r = check_structure(*a.ore, d, SignVariant::commutator);
    const Check* c = r.find("sigma = tau^l_chi");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->pass);
    EXPECT_EQ(c->witness, "y: y vs y + 1");
}

TEST(BuildHoe, HeisenbergGroundTruth)
{
    auto a = zoo("heisenberg");
    BuiltHoe b = build_hoe(*a.ore, *a.hoe);
    EXPECT_TRUE(b.report.verdict()) << b.report.to_text();
    EXPECT_EQ(b.antipode_x.to_string(), "y*z - x");
    EXPECT_TRUE(b.report.find("T: coassociativity[x]")->pass);
}

TEST(BuildHoe, LaurentAntipodeOnX)
{
    auto a = zoo("laurent-q2");
    BuiltHoe b = build_hoe(*a.ore, *a.hoe);
    EXPECT_TRUE(b.report.verdict()) << b.report.to_text();
    EXPECT_EQ(b.antipode_x.to_string(), "-g*x");
    const OreExt& e = *a.ore;
    Tensor dx = b.hopf->Delta(e.x_elem());
    EXPECT_TRUE(t_flatten(antipode_at(*b.hopf, dx, 0)).is_zero());
}

TEST(BuildHoe, AntipodeSabotageFailsAtX)
{
    auto a = zoo("heisenberg");
    BuiltHoe b = build_hoe(*a.ore, *a.hoe);
    const OreExt& e = *a.ore;
    // Delta(x) with w = y ox y while S(x) stays -x + yz
    std::vector<Tensor> d = b.hopf->delta.images();
    Elem y = e.lift(gen(a, "y"));
    d[e.x()] = d[e.x()] - Tensor::pure({y, e.lift(gen(a, "z"))}) + Tensor::pure({y, y});
    HopfAlg bad(e.T, d, b.hopf->counit.images(), b.hopf->antipode.images());
    Report r = hopf_axiom_suite(bad);
    const Check* c = r.find("antipode-left[x]");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->pass);
    EXPECT_EQ(c->witness, "m(S(x)I)Delta = y*z - y^2, epsilon = 0");
}

TEST(BuildHoe, CoboundaryWIsGenuinelyValid)
{
    auto a = zoo("heisenberg");
    HOEData d = *a.hoe;
    Elem y = gen(a, "y");
    d.w = Tensor::pure({y, y});
    EXPECT_TRUE(build_hoe(*a.ore, d).report.verdict());
}

TEST(BuildHoe, NonCocycleWFailsCoassociativity)
{
    auto a = zoo("heisenberg");
    HOEData d = *a.hoe;
    Elem y = gen(a, "y"), z = gen(a, "z");
    d.w = Tensor::pure({y * y, z});
    Report thm = check_structure(*a.ore, d, SignVariant::commutator);
    const Check* cyc = thm.find("w-cocycle: w(x)1 + (D(x)I)w = beta^-1(x)w + (I(x)D)w");
    ASSERT_NE(cyc, nullptr);
    EXPECT_FALSE(cyc->pass);
    EXPECT_EQ(cyc->witness, "lhs - rhs = 2*y ox y ox z");
    BuiltHoe b = build_hoe(*a.ore, d);
    const Check* co = b.report.find("T: coassociativity[x]");
    ASSERT_NE(co, nullptr);
    EXPECT_FALSE(co->pass);
    EXPECT_FALSE(co->witness.empty());
}

TEST(BuildHoe, AntipodeIsLinearInX)
{
    for (const char* name : {"heisenberg", "laurent-q2", "poly-shift", "poly-shift-derivation"}) {
        auto a = zoo(name);
        BuiltHoe b = build_hoe(*a.ore, *a.hoe);
        EXPECT_TRUE(b.report.find("S(x) = a x + b with a a unit")->pass) << name;
    }
}

TEST(SignResolution, Labels)
{
    auto h = zoo("heisenberg");
    EXPECT_EQ(resolve_sign(*h.ore, *h.hoe).label(), "commutator");
    auto l = zoo("laurent-q2");
    EXPECT_EQ(resolve_sign(*l.ore, *l.hoe).label(), "either");
}

TEST(IdentitySuite, UniversalOnBuiltStructures)
{
    for (const auto& e : zoo_entries()) {
        if (!e.hoe) continue;
        auto a = hoe::assemble(e.source());
        NormalizationResult n = normalize(*a.candidate);
        HOEData d = derive_hoe_data(n.output);
        ASSERT_TRUE(build_hoe(n.output.ore, d).report.verdict()) << e.name;
        for (const HoeCandidate* c : {&*a.candidate, &n.output}) {
            Report r = identity_suite(*a.hopf, decompose_delta_x(c->ore, c->delta_x));
            EXPECT_TRUE(r.verdict()) << e.name << "\n" << r.to_text();
        }
    }
}
