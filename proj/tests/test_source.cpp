#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace hoe;

namespace {

const char* header = "algebra t\ngen y\n";

ParseError parse_error(const std::string& text)
{
    try {
        parse_source(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return ParseError(0, 0, "");
}

} // namespace

TEST(Parse, HeisenbergObjectGraph)
{
    auto a = fixtures::zoo("heisenberg");
    EXPECT_EQ(a.name, "heisenberg");
    EXPECT_EQ(a.R->generator_names(), (std::vector<std::string>{"y", "z"}));
    ASSERT_TRUE(a.hopf && a.ore && a.candidate && a.hoe);
    EXPECT_EQ(a.candidate->delta_x.to_string(), "x ox 1 + y ox z + 1 ox x");
    EXPECT_EQ(a.hoe->w.to_string(), "y ox z");
    EXPECT_EQ(a.assertions, (std::vector<std::string>{"noetherian", "domain"}));
}

TEST(Parse, CommentsRationalsAndInverses)
{
    SourceFile sf = parse_source("# header\nalgebra q  # trailing\ngen g inv G\nrel G*g = 1\n"
                                 "delta g = g ox g\ndelta G = G ox G\ncounit g = 1\ncounit G = 1\n"
                                 "antipode g = G\nantipode G = g\nore x\nauto sigma g = -3/4*g\n"
                                 "autoinv sigma g = -4/3*g\nauto sigma G = -4/3*G\nautoinv sigma G = -3/4*G\n");
    EXPECT_EQ(sf.name, "q");
    ASSERT_EQ(sf.inverse.size(), 2u);
    EXPECT_EQ(sf.inverse[0], std::optional<Symbol>(1));
    EXPECT_EQ(NCPoly::monomial(Word{0}, fixtures::q(-3, 4)), sf.sigma.at(0));
    auto a = assemble(sf);
    EXPECT_TRUE(validate_ore(*a.ore).verdict());
}

TEST(Parse, UndeclaredSymbolCarriesPosition)
{
    try {
        parse_source("algebra t\ngen y\nrel z*y = y*z\n");
        FAIL() << "expected UndeclaredSymbol";
    } catch (const UndeclaredSymbol& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 5u);
        EXPECT_EQ(e.name(), "z");
    }
}

TEST(Parse, DanglingTensorIsSyntaxError)
{
    try {
        parse_source(std::string(header) + "delta y = y ox\n");
        FAIL() << "expected a syntax error";
    } catch (const UndeclaredSymbol&) {
        FAIL() << "dangling tensor reported as an undeclared symbol";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 15u);
    }
}

TEST(Parse, StructuralErrors)
{
    EXPECT_EQ(parse_error(std::string(header) + "gen y\n").line(), 3u);
    EXPECT_EQ(parse_error(std::string(header) + "frobnicate y\n").line(), 3u);
    EXPECT_EQ(parse_error(std::string(header) + "auto sigma y = y\n").line(), 3u);
    EXPECT_EQ(parse_error(std::string(header) + "delta y = y ox 1 ox 1\n").line(), 3u);
    EXPECT_EQ(parse_error(std::string(header) + "counit y = y\n").line(), 3u);
    EXPECT_EQ(parse_error(std::string(header) + "rel y*y = 1/0\n").line(), 3u);
    EXPECT_EQ(parse_error(std::string(header) + "rel y*y = (y\n").line(), 3u);
}

TEST(Parse, UnorientableRelationRejected)
{
    EXPECT_THROW(assemble(parse_source(std::string(header) + "rel y = 2*y\n")), UnorientableRelation);
}

TEST(Assemble, MissingHopfLineRejected)
{
    SourceFile sf = parse_source(std::string(header) + "delta y = y ox 1 + 1 ox y\ncounit y = 0\n");
    EXPECT_THROW(assemble(sf), AssemblyError);
}

TEST(Assemble, NonConfluentRejected)
{
    SourceFile sf = parse_source("algebra bad\ngen a b c\nrel a*b = 1\nrel b*c = 1\n");
    try {
        assemble(sf);
        FAIL() << "expected ConfluenceFailure";
    } catch (const ConfluenceFailure& e) {
        ASSERT_TRUE(e.report().divergence);
        EXPECT_EQ(format_word(e.report().divergence->word, sf.gens), "a*b*c");
    }
}

TEST(RoundTrip, EveryZooSource)
{
    for (const auto& e : zoo_entries()) {
        SourceFile sf = e.source();
        std::string printed = print_source(sf);
        SourceFile again = parse_source(printed);
        EXPECT_TRUE(again == sf) << e.name << "\n" << printed;
        EXPECT_EQ(print_source(again), printed) << e.name;
    }
}

TEST(RoundTrip, ShippedDataFilesMatchZoo)
{
    namespace fs = std::filesystem;
    std::size_t seen = 0;
    for (const auto& entry : fs::directory_iterator(HOE_DATA_DIR)) {
        if (entry.path().extension() != ".hopf") continue;
        ++seen;
        std::string name = entry.path().stem().string();
        const ZooEntry* z = find_zoo_entry(name);
        ASSERT_NE(z, nullptr) << name;
        SourceFile file = parse_source_file(entry.path().string());
        EXPECT_TRUE(file == z->source()) << name;
    }
    EXPECT_EQ(seen, zoo_entries().size());
}
