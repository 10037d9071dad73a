#include "helpers.hpp"

#include <doctest.h>

using namespace stratkit;
using namespace testing_helpers;

TEST_CASE("validate representations") {
    SUBCASE("projectives satisfy the relations by construction") {
        CHECK_FALSE(validate(ex2()->projective(0)).has_value());
    }
    SUBCASE("identity maps on the three-cycle violate the cubic relations") {
        auto alg = ex1();
        std::vector<MatQ> maps(3, MatQ::identity(1, alg->field()));
        Representation bad(alg, {1, 1, 1}, maps);
        auto v = validate(bad);
        REQUIRE(v.has_value());
        CHECK(v->relation == 0);
    }
    SUBCASE("zero representation is fine") { CHECK_FALSE(validate(Representation::zero(ex1())).has_value()); }
}

TEST_CASE("hom dimensions: Yoneda oracle dim Hom(P(i), X) == dim X_i") {
    for (const auto& alg : {ex1(), ex2()}) {
        std::vector<Representation> zoo;
        for (int i = 0; i < 3; ++i) {
            zoo.push_back(alg->projective(i));
            zoo.push_back(alg->injective(i));
            zoo.push_back(alg->simple(i));
        }
        for (int i = 0; i < 3; ++i)
            for (const auto& x : zoo) CHECK(hom_dim(alg->projective(i), x) == x.dim_at(i));
    }
}

TEST_CASE("hom dimensions: full uniserial table against the closed formula") {
    for (int a = 1; a <= 3; ++a)
        for (int l = 1; l <= 3; ++l)
            for (int b = 1; b <= 3; ++b)
                for (int m = 1; m <= 3; ++m) {
                    CAPTURE(a);
                    CAPTURE(l);
                    CAPTURE(b);
                    CAPTURE(m);
                    CHECK(hom_dim(ex1_u(a, l), ex1_u(b, m)) == nakayama_hom_dim(a, l, b, m));
                }
}

TEST_CASE("hom basis members are morphisms") {
    auto homs = hom_basis(ex1_u(1, 3), ex1_u(1, 2));
    CHECK(homs.size() == 1);
    for (const auto& h : homs) CHECK(h.commutes());
    CHECK(hom_dim(ex2()->projective(1), ex2()->projective(1)) == 2);
}

TEST_CASE("morphism parts") {
    auto alg = ex2();
    SUBCASE("identity morphism") {
        Representation p = alg->projective(0);
        auto parts = morphism_parts(Morphism::identity(p));
        CHECK(parts.kernel.rep.total_dim() == 0);
        CHECK(parts.image.rep.dims() == p.dims());
        CHECK(parts.cokernel.rep.total_dim() == 0);
    }
    SUBCASE("cover of the first simple has the radical as kernel") {
        Cover c = projective_cover(alg->simple(0));
        auto parts = morphism_parts(c.epi);
        CHECK(parts.kernel.rep.dims() == std::vector<int>{1, 1, 1});
        CHECK_FALSE(validate(parts.kernel.rep).has_value());
        CHECK(parts.kernel.rep.total_dim() + parts.image.rep.total_dim() == c.p0.rep().total_dim());
    }
    SUBCASE("zero morphism") {
        Representation x = ex1_u(1, 2), y = ex1_u(2, 2);
        auto parts = morphism_parts(Morphism::zero(x, y));
        CHECK(parts.kernel.rep.dims() == x.dims());
        CHECK(parts.cokernel.rep.dims() == y.dims());
    }
}

TEST_CASE("direct sums") {
    auto alg = ex1();
    std::vector<Representation> ps{alg->projective(0), alg->projective(1), alg->projective(2)};
    DirectSum ds = direct_sum(alg, ps);
    CHECK(ds.rep.dims() == std::vector<int>{3, 3, 3});
    CHECK_FALSE(validate(ds.rep).has_value());
    for (int k = 0; k < 3; ++k) {
        CHECK(ds.inj[k].commutes());
        CHECK(ds.proj[k].commutes());
    }
    DirectSum empty = direct_sum(alg, std::span<const Representation>{});
    CHECK(empty.rep.total_dim() == 0);
    SearchOpts opts;
    std::vector<Representation> with_zero{ex1_u(1, 2), Representation::zero(alg)};
    CHECK(is_isomorphic(direct_sum(alg, with_zero).rep, ex1_u(1, 2), opts).verdict == Tri::Yes);
}

TEST_CASE("trace submodules and canonical sequences") {
    auto alg = ex1();
    SUBCASE("trace of the later projectives inside P(1)") {
        std::vector<Representation> tail{alg->projective(1), alg->projective(2)};
        SubObject t = trace_submodule(direct_sum(alg, tail).rep, alg->projective(0));
        CHECK(t.rep.dims() == std::vector<int>{0, 1, 1});  // the radical 2/3
    }
    SUBCASE("trace of S(2) inside the length-two module is the socle") {
        SubObject t = trace_submodule(alg->simple(1), ex1_u(1, 2));
        CHECK(t.rep.dims() == std::vector<int>{0, 1, 0});
    }
    SUBCASE("trace of X in X is X, and the trace is idempotent") {
        Representation x = ex1_u(2, 2);
        SubObject t = trace_submodule(x, x);
        CHECK(t.rep.dims() == x.dims());
        SubObject tt = trace_submodule(x, t.rep);
        CHECK(tt.rep.dims() == t.rep.dims());
    }
    SUBCASE("largest-submodule property: nothing maps to the quotient") {
        Representation x = direct_sum(alg, std::vector<Representation>{alg->projective(1), alg->projective(2)}).rep;
        ShortExactSequence s = canonical_sequence(x, alg->projective(0));
        CHECK(hom_dim(x, s.quot) == 0);
    }
    SUBCASE("two-cycle canonical sequence of P(1) against P(2)+P(3)") {
        auto a2 = ex2();
        std::vector<Representation> tail{a2->projective(1), a2->projective(2)};
        ShortExactSequence s = canonical_sequence(direct_sum(a2, tail).rep, a2->projective(0));
        CHECK(s.quot.dims() == std::vector<int>{1, 0, 0});
        CHECK(s.sub.dims() == std::vector<int>{1, 1, 1});
    }
    SUBCASE("module already torsion gives zero quotient") {
        ShortExactSequence s = canonical_sequence(alg->projective(0), ex1_u(1, 2));
        CHECK(s.quot.total_dim() == 0);
    }
    SUBCASE("no homs at all gives zero kernel") {
        ShortExactSequence s = canonical_sequence(alg->simple(1), alg->simple(0));
        CHECK(s.sub.total_dim() == 0);
        CHECK(s.quot.dims() == alg->simple(0).dims());
    }
}

TEST_CASE("Fac membership") {
    auto alg = ex1();
    CHECK(in_fac(alg->projective(0), ex1_u(1, 2)));
    std::vector<Representation> pair{ex1_u(1, 2), alg->projective(0)};
    CHECK_FALSE(in_fac(direct_sum(alg, pair).rep, alg->simple(1)));
    CHECK(in_fac(alg->simple(0), Representation::zero(alg)));
    // stability: adding a summand with no maps into N changes nothing
    Representation n = ex1_u(1, 2);
    for (int add = 0; add < 3; ++add) {
        Representation z = alg->simple(add);
        if (hom_dim(z, n) != 0) continue;
        std::vector<Representation> x1{alg->projective(0)};
        std::vector<Representation> x2{alg->projective(0), z};
        CHECK(in_fac(direct_sum(alg, x1).rep, n) == in_fac(direct_sum(alg, x2).rep, n));
    }
}

TEST_CASE("isomorphism testing") {
    SearchOpts opts;
    auto alg = ex1();
    CHECK(is_isomorphic(ex1_u(2, 2), ex1_u(2, 2), opts).verdict == Tri::Yes);
    CHECK(is_isomorphic(alg->projective(0), alg->projective(1), opts).verdict == Tri::No);
    CHECK(is_isomorphic(ex1_u(1, 2), alg->simple(0), opts).verdict == Tri::No);
    // equivalence relation on a sample: symmetry and transitivity via labels
    std::vector<Representation> zoo;
    for (int t = 1; t <= 3; ++t)
        for (int l = 1; l <= 3; ++l) zoo.push_back(ex1_u(t, l));
    for (size_t i = 0; i < zoo.size(); ++i)
        for (size_t j = 0; j < zoo.size(); ++j) {
            bool ij = is_isomorphic(zoo[i], zoo[j], opts).verdict == Tri::Yes;
            bool ji = is_isomorphic(zoo[j], zoo[i], opts).verdict == Tri::Yes;
            CHECK(ij == ji);
            CHECK(ij == (i == j));  // the nine uniserials are pairwise distinct
        }
}

TEST_CASE("indecomposability and decomposition") {
    SearchOpts opts;
    auto alg = ex1();
    CHECK(is_indecomposable(alg->simple(0), opts).verdict == Tri::Yes);
    CHECK(is_indecomposable(ex1_u(1, 2), opts).verdict == Tri::Yes);
    std::vector<Representation> two{alg->projective(0), alg->simple(0)};
    CHECK(is_indecomposable(direct_sum(alg, two).rep, opts).verdict == Tri::No);

    SUBCASE("regular module decomposes into the three projectives") {
        std::vector<Representation> ps{alg->projective(0), alg->projective(1), alg->projective(2)};
        DecomposeResult dec = decompose(direct_sum(alg, ps).rep, opts);
        CHECK(dec.complete == Tri::Yes);
        REQUIRE(dec.summands.size() == 3);
        int matched = 0;
        for (const auto& s : dec.summands)
            for (int i = 0; i < 3; ++i)
                if (is_isomorphic(s, alg->projective(i), opts).verdict == Tri::Yes) ++matched;
        CHECK(matched == 3);
    }
    SUBCASE("square of a projective splits into two copies") {
        std::vector<Representation> pp{alg->projective(0), alg->projective(0)};
        DecomposeResult dec = decompose(direct_sum(alg, pp).rep, opts);
        CHECK(dec.complete == Tri::Yes);
        REQUIRE(dec.summands.size() == 2);
        for (const auto& s : dec.summands)
            CHECK(is_isomorphic(s, alg->projective(0), opts).verdict == Tri::Yes);
    }
    SUBCASE("zero module decomposes into nothing") {
        CHECK(decompose(Representation::zero(alg), opts).summands.empty());
    }
    SUBCASE("decompose then direct-sum returns the input up to isomorphism") {
        std::vector<Representation> mix{ex1_u(1, 2), alg->simple(2), alg->projective(1)};
        Representation x = direct_sum(alg, mix).rep;
        DecomposeResult dec = decompose(x, opts);
        REQUIRE(dec.complete == Tri::Yes);
        Representation back = direct_sum(alg, dec.summands).rep;
        CHECK(is_isomorphic(x, back, opts).verdict == Tri::Yes);
    }
    SUBCASE("two-cycle projectives are indecomposable with two-dimensional endomorphisms") {
        auto a2 = ex2();
        CHECK(hom_dim(a2->projective(1), a2->projective(1)) == 2);
        CHECK(is_indecomposable(a2->projective(1), opts).verdict == Tri::Yes);
        CHECK(is_indecomposable(a2->projective(0), opts).verdict == Tri::Yes);
    }
}

TEST_CASE("hom additivity over direct sums") {
    auto alg = ex1();
    std::vector<std::pair<Representation, Representation>> pairs = {
        {ex1_u(1, 2), ex1_u(2, 2)}, {alg->projective(0), alg->simple(1)}, {ex1_u(3, 1), ex1_u(3, 3)}};
    for (const auto& [x, y] : pairs) {
        for (int t = 1; t <= 3; ++t) {
            Representation z = ex1_u(t, 1);
            std::vector<Representation> xz{x, z};
            Representation sum = direct_sum(alg, xz).rep;
            CHECK(hom_dim(sum, y) == hom_dim(x, y) + hom_dim(z, y));
            CHECK(hom_dim(y, sum) == hom_dim(y, x) + hom_dim(y, z));
        }
    }
}

TEST_CASE("top and radical") {
    auto alg = ex1();
    SUBCASE("projective over the three-cycle") {
        TopRadical tr = top_and_radical(alg->projective(0));
        CHECK(tr.top.rep.dims() == std::vector<int>{1, 0, 0});
        CHECK(tr.radical.rep.dims() == std::vector<int>{0, 1, 1});
    }
    SUBCASE("semisimple module has zero radical") {
        std::vector<Representation> ss{alg->simple(0), alg->simple(2)};
        TopRadical tr = top_and_radical(direct_sum(alg, ss).rep);
        CHECK(tr.radical.rep.total_dim() == 0);
    }
    SUBCASE("two-cycle projective radical") {
        TopRadical tr = top_and_radical(ex2()->projective(0));
        CHECK(tr.top.rep.dims() == std::vector<int>{1, 0, 0});
        CHECK(tr.radical.rep.dims() == std::vector<int>{1, 1, 1});
    }
}

TEST_CASE("short exact sequence validation catches broken data") {
    auto alg = ex1();
    Representation x = ex1_u(1, 2);
    ShortExactSequence good = canonical_sequence(alg->simple(1), x);
    CHECK_NOTHROW(validate_ses(good));
    ShortExactSequence bad = good;
    bad.quot = alg->projective(0);  // wrong quotient
    CHECK_THROWS_AS(validate_ses(bad), MathError);
}
