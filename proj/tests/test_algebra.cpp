#include "helpers.hpp"

#include <doctest.h>

using namespace stratkit;
using namespace testing_helpers;

TEST_CASE("three-cycle algebra: basis, dimensions, admissibility") {
    auto alg = ex1();
    CHECK(alg->dim() == 9);
    CHECK(alg->bound() == 3);
    CHECK(alg->minimal_verified_bound() == 3);
    // one basis path between every ordered pair of vertices
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(alg->basis_between(i, j).size() == 1);
}

TEST_CASE("three-cycle algebra: projectives, injectives, simples") {
    auto alg = ex1();
    for (int i = 0; i < 3; ++i) {
        Representation p = alg->projective(i);
        CHECK(p.dims() == std::vector<int>{1, 1, 1});
        CHECK_FALSE(validate(p).has_value());
        Representation s = alg->simple(i);
        CHECK(s.total_dim() == 1);
        CHECK(s.dim_at(i) == 1);
        Representation inj = alg->injective(i);
        CHECK(inj.dims() == std::vector<int>{1, 1, 1});
        CHECK_FALSE(validate(inj).has_value());
    }
    // self-injective Nakayama: I(1) is the projective with socle S(1)
    SearchOpts opts;
    CHECK(is_isomorphic(alg->injective(0), alg->projective(1), opts).verdict == Tri::Yes);
}

TEST_CASE("two-cycle algebra: basis and recorded dimensions") {
    auto alg = ex2();
    CHECK(alg->dim() == 10);
    CHECK(alg->bound() == 4);
    CHECK(alg->minimal_verified_bound() == 3);
    CHECK(alg->basis_between(0, 0).size() == 2);  // e_1 and the identified loop class
    CHECK(alg->projective(0).dims() == std::vector<int>{2, 1, 1});
    CHECK(alg->projective(1).dims() == std::vector<int>{1, 2, 0});
    CHECK(alg->projective(2).dims() == std::vector<int>{1, 0, 2});
    CHECK(alg->injective(0).dims() == std::vector<int>{2, 1, 1});
    for (int i = 0; i < 3; ++i) {
        CHECK_FALSE(validate(alg->projective(i)).has_value());
        CHECK_FALSE(validate(alg->injective(i)).has_value());
    }
}

TEST_CASE("two-cycle algebra: quadratic monomial relations are not redundant") {
    // dropping the mixed quadratics leaves a 14-dimensional algebra whose
    // first projective has dimension vector (2,2,2)
    const char* doc = R"({
      "field": "Q", "vertices": ["1","2","3"],
      "arrows": [
        {"name":"b1","src":"3","tgt":"1"},{"name":"a1","src":"1","tgt":"3"},
        {"name":"b2","src":"1","tgt":"2"},{"name":"a2","src":"2","tgt":"1"}],
      "relations": [
        [{"coeff":"1","path":["b1","a1","b1"]}],
        [{"coeff":"1","path":["b1","a1"]}, {"coeff":"-1","path":["a2","b2"]}],
        [{"coeff":"1","path":["a2","b2","a2"]}]
      ],
      "bound": 4})";
    auto alg = algebra_from_string(doc);
    CHECK(alg->dim() == 14);
    CHECK(alg->projective(0).dims() == std::vector<int>{2, 2, 2});
    CHECK(alg->projective(1).dims() == std::vector<int>{1, 2, 1});
}

TEST_CASE("single vertex, no arrows, bound 1") {
    auto alg = algebra_from_string(R"({"field":"Q","vertices":["1"],"arrows":[],"bound":1})");
    CHECK(alg->dim() == 1);
    CHECK(alg->projective(0).total_dim() == 1);
    CHECK(alg->injective(0).total_dim() == 1);
    CHECK(alg->minimal_verified_bound() == 1);
}

TEST_CASE("input errors") {
    SUBCASE("relation outside the radical square") {
        const char* doc = R"({
          "field":"Q","vertices":["1","2"],
          "arrows":[{"name":"a","src":"1","tgt":"2"}],
          "relations":[[{"coeff":"1","path":["a"]}]],
          "bound":2})";
        CHECK_THROWS_WITH_AS(algebra_from_string(doc), doctest::Contains("radical square"), InputError);
    }
    SUBCASE("not admissible at the declared bound") {
        // the three-cycle with no relations: length-2 paths never reduce
        const char* doc = R"({
          "field":"Q","vertices":["1","2","3"],
          "arrows":[{"name":"a","src":"1","tgt":"2"},{"name":"b","src":"2","tgt":"3"},
                    {"name":"c","src":"3","tgt":"1"}],
          "relations":[],
          "bound":2})";
        CHECK_THROWS_WITH_AS(algebra_from_string(doc), doctest::Contains("not admissible"), InputError);
    }
    SUBCASE("non-composable relation") {
        const char* doc = R"({
          "field":"Q","vertices":["1","2"],
          "arrows":[{"name":"a","src":"1","tgt":"2"}],
          "relations":[[{"coeff":"1","path":["a","a"]}]],
          "bound":2})";
        CHECK_THROWS_AS(algebra_from_string(doc), InputError);
    }
    SUBCASE("mismatched endpoints between relation terms") {
        const char* doc = R"({
          "field":"Q","vertices":["1","2","3"],
          "arrows":[{"name":"a","src":"1","tgt":"2"},{"name":"b","src":"2","tgt":"3"},
                    {"name":"c","src":"3","tgt":"1"},{"name":"d","src":"2","tgt":"1"}],
          "relations":[[{"coeff":"1","path":["b","a"]},{"coeff":"1","path":["d","a","c"]}]],
          "bound":3})";
        CHECK_THROWS_AS(algebra_from_string(doc), InputError);
    }
}

TEST_CASE("multiplication of basis classes is associative") {
    auto alg = ex2();
    int d = alg->dim();
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                std::map<int, Scalar> left, right;
                for (const auto& [b, c] : alg->mult(x, y))
                    for (const auto& [b2, c2] : alg->mult(b, z)) {
                        auto& slot = left.try_emplace(b2, Scalar::zero(alg->field())).first->second;
                        slot += c * c2;
                    }
                for (const auto& [b, c] : alg->mult(y, z))
                    for (const auto& [b2, c2] : alg->mult(x, b)) {
                        auto& slot = right.try_emplace(b2, Scalar::zero(alg->field())).first->second;
                        slot += c * c2;
                    }
                for (const auto& [k, v] : left) {
                    if (v.is_zero()) continue;
                    auto it = right.find(k);
                    REQUIRE(it != right.end());
                    CHECK(v == it->second);
                }
                for (const auto& [k, v] : right)
                    if (!v.is_zero()) CHECK(left.count(k) == 1);
            }
}

TEST_CASE("total dimension equals the sum over the projectives") {
    for (const auto& alg : {ex1(), ex2()}) {
        int total = 0;
        for (int i = 0; i < alg->n(); ++i) total += alg->projective(i).total_dim();
        CHECK(total == alg->dim());
    }
}

TEST_CASE("operations reject mixed algebras") {
    auto a = ex1();
    auto b = load_algebra("EX1").alg;  // a second, distinct instance
    std::vector<Representation> mixed{a->projective(0), b->projective(1)};
    CHECK_THROWS_AS(direct_sum(a, mixed), MathError);
    CHECK_THROWS_AS(hom_dim(a->simple(0), b->simple(0)), MathError);
}

TEST_CASE("prime-field variant of the three-cycle algebra") {
    const char* doc = R"({
      "field": {"Fp": 5}, "vertices": ["1","2","3"],
      "arrows":[{"name":"a","src":"1","tgt":"2"},{"name":"b","src":"2","tgt":"3"},
                {"name":"c","src":"3","tgt":"1"}],
      "relations":[[{"coeff":"1","path":["c","b","a"]}],
                   [{"coeff":"1","path":["a","c","b"]}],
                   [{"coeff":"1","path":["b","a","c"]}]],
      "bound":3})";
    auto alg = algebra_from_string(doc);
    CHECK(alg->dim() == 9);
    CHECK(alg->field().p == 5);
    CHECK(alg->projective(0).dims() == std::vector<int>{1, 1, 1});
    CHECK(hom_dim(alg->projective(0), alg->simple(0)) == 1);
}
