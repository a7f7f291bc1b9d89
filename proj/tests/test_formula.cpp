#include <catch2/catch_amalgamated.hpp>

#include "specwl/formula.hpp"
#include "specwl/generators.hpp"
#include "specwl/randgraph.hpp"

using namespace specwl;

TEST_CASE("parsing the running examples") {
    Formula isolated = parse_formula("Ex x All y ~E(x,y)");
    CHECK(width(isolated) == 2);
    CHECK(free_variables(isolated).empty());

    Formula atom = parse_formula("E(x,y)");
    CHECK(free_variables(atom) == std::vector<std::string>{"x", "y"});
    CHECK(width(atom) == 2);

    Formula counting = parse_formula("Ex^3 z (E(x,z) & x=z)");
    CHECK(counting->kind == FormulaKind::exists);
    CHECK(counting->threshold == 3);
    CHECK(free_variables(counting) == std::vector<std::string>{"x"});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_formula(""), parse_error);
    CHECK_THROWS_AS(parse_formula("E(x y)"), parse_error);
    CHECK_THROWS_AS(parse_formula("Ex x"), parse_error);
    CHECK_THROWS_AS(parse_formula("E(x,y) )"), parse_error);
    CHECK_THROWS_AS(parse_formula("Ex^0 x E(x,y)"), parse_error);
    CHECK_THROWS_AS(parse_formula("true=false"), parse_error);
}

TEST_CASE("print then parse is the identity") {
    std::vector<std::string> sources = {
        "Ex x All y ~E(x,y)",
        "E(x,y) & x=y | ~E(y,x)",
        "Ex^2 x (E(x,y) -> Ex y E(y,x))",
        "Ex^=2 x E(x,y)",
        "true & ~false",
        "All x (E(x,y) -> ~x=y)",
        "(E(a,b) | E(b,c)) & (E(c,a) | a=c)",
    };
    for (const std::string& src : sources) {
        Formula f = parse_formula(src);
        Formula again = parse_formula(print_formula(f));
        CHECK(equal(f, again));
    }
}

TEST_CASE("evaluation semantics") {
    Graph c4 = cycle(4);
    Graph star = complete_bipartite(1, 4);
    Graph pair = disjoint_union(cycle(4), complete(1));

    Formula isolated = parse_formula("Ex x All y ~E(x,y)");
    CHECK(eval(pair, isolated));
    CHECK_FALSE(eval(star, isolated));

    CHECK(eval(c4, f_true()));
    CHECK_FALSE(eval(c4, f_false()));

    // every C4 vertex has exactly two neighbours
    Formula exact2 = parse_formula("Ex^=2 y E(x,y)");
    CHECK(eval(c4, exact2, {{"x", 0}}));
    CHECK_FALSE(eval(star, exact2, {{"x", 0}}));

    CHECK_THROWS_AS(eval(c4, parse_formula("E(x,y)"), {{"x", 0}}), input_error);
    CHECK_THROWS_AS(eval(c4, parse_formula("E(x,y)"), {{"x", 0}, {"y", 9}}), input_error);
}

TEST_CASE("counting quantifier against direct counting") {
    std::mt19937_64 rng(23);
    Formula body = parse_formula("E(x,y)");
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
        int x = static_cast<int>(rng() % g.n());
        int degree = g.degree(x);
        for (long i = 1; i <= g.n(); ++i) {
            CHECK(eval(g, f_exists(i, "y", body), {{"x", x}}) == (degree >= i));
            CHECK(eval(g, f_exists_exactly(i, "y", body), {{"x", x}}) == (degree == i));
        }
        CHECK(eval(g, f_exists_exactly(0, "y", body), {{"x", x}}) == (degree == 0));
    }
}

TEST_CASE("exists-exactly matches its desugaring everywhere") {
    std::mt19937_64 rng(29);
    Formula body = parse_formula("E(x,y) & ~E(y,z)");
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 5));
        for (long i = 1; i <= 3; ++i) {
            Formula sugar = f_exists_exactly(i, "y", body);
            Formula manual = f_and({f_exists(i, "y", body), f_not(f_exists(i + 1, "y", body))});
            for (int x = 0; x < g.n(); ++x)
                for (int z = 0; z < g.n(); ++z)
                    CHECK(eval(g, sugar, {{"x", x}, {"z", z}}) ==
                          eval(g, manual, {{"x", x}, {"z", z}}));
        }
    }
}

TEST_CASE("forall desugars to the counting core") {
    Formula all = parse_formula("All y E(x,y)");
    CHECK(all->kind == FormulaKind::negation);
    Graph k3 = complete(3);
    // in K3 every vertex sees the others but not itself
    CHECK_FALSE(eval(k3, all, {{"x", 0}}));
    Formula all_other = parse_formula("All y (x=y | E(x,y))");
    CHECK(eval(k3, all_other, {{"x", 0}}));
}

TEST_CASE("evaluator memo survives across assignments") {
    Graph g = cycle(6);
    Formula f = parse_formula("Ex^=2 y (E(x,y) & Ex^=2 z E(y,z))");
    Evaluator ev(g, f);
    for (int x = 0; x < g.n(); ++x) CHECK(ev.eval({{"x", x}}));
}
