#include <random>

#include "doctest.h"
#include "pcoh/exterior.hpp"

using namespace pcoh;

namespace {

MultiVector basis(int n, std::vector<int> alpha, std::vector<int> beta, std::vector<int> subset,
                  long coeff = 1) {
    return MultiVector::term(n, Monomial(std::move(alpha), std::move(beta)),
                             WedgeIndex(std::move(subset)), GaussianRational(coeff));
}

MultiVector random_homogeneous(int n, int d, int p, std::mt19937& rng) {
    GradedCell cell = enumerate_cell(n, d, p);
    std::uniform_int_distribution<long> coeff(-4, 4);
    MultiVector x(n);
    for (const auto& key : cell.basis) x.add_term(key, GaussianRational(coeff(rng)));
    return x;
}

}  // namespace

TEST_CASE("wedge signs and alternation") {
    int n = 1;
    MultiVector dz = basis(n, {0}, {0}, {1});
    MultiVector dw = basis(n, {0}, {0}, {2});
    CHECK(wedge(dz, dw) == basis(n, {0}, {0}, {1, 2}));
    CHECK(wedge(dw, dz) == basis(n, {0}, {0}, {1, 2}, -1));
    CHECK(wedge(dz, dz).is_zero());
    CHECK(wedge(basis(n, {1}, {0}, {1}), basis(n, {0}, {1}, {2})) == basis(n, {1}, {1}, {1, 2}));
}

TEST_CASE("wedge is associative and graded-commutative") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2;
        int p = trial % 3, q = (trial / 3) % 3;
        MultiVector x = random_homogeneous(n, 1, p, rng);
        MultiVector y = random_homogeneous(n, 2, q, rng);
        MultiVector z = random_homogeneous(n, 0, 1, rng);
        CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
        MultiVector yx = wedge(y, x);
        if ((p * q) % 2 == 1) yx = GaussianRational(-1) * yx;
        CHECK(wedge(x, y) == yx);
    }
}

TEST_CASE("grade") {
    MultiVector x = basis(2, {1, 0}, {0, 1}, {1, 4});
    CHECK(grade(x) == std::set<std::pair<int, int>>{{2, 2}});
    CHECK(grade(MultiVector(2)).empty());
}

TEST_CASE("cell dimensions") {
    CHECK(cell_dimension(2, 8, 2) == 990);
    CHECK(cell_dimension(2, 9, 3) == 880);
    CHECK(cell_dimension(1, 0, 2) == 1);
    CHECK(cell_dimension(1, -1, 0) == 0);
    CHECK(cell_dimension(1, 2, 3) == 0);
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 10; ++d)
            for (int p = 0; p <= 2 * n; ++p)
                CHECK(cell_dimension(n, d, p) ==
                      static_cast<long long>(enumerate_cell(n, d, p).basis.size()));
}

TEST_CASE("canonical enumeration order") {
    GradedCell cell = enumerate_cell(1, 1, 1);
    REQUIRE(cell.basis.size() == 4);
    CHECK(cell.basis[0] == BasisKey{Monomial({1}, {0}), WedgeIndex({1})});  // z dz
    CHECK(cell.basis[1] == BasisKey{Monomial({1}, {0}), WedgeIndex({2})});  // z dw
    CHECK(cell.basis[2] == BasisKey{Monomial({0}, {1}), WedgeIndex({1})});  // w dz
    CHECK(cell.basis[3] == BasisKey{Monomial({0}, {1}), WedgeIndex({2})});  // w dw

    CHECK(enumerate_cell(1, 0, 0).basis ==
          std::vector<BasisKey>{BasisKey{Monomial::one(1), WedgeIndex(std::vector<int>{})}});
    CHECK(enumerate_cell(2, 0, 4).basis ==
          std::vector<BasisKey>{BasisKey{Monomial::one(2), WedgeIndex({1, 2, 3, 4})}});
}

TEST_CASE("index_of round-trips the basis") {
    GradedCell cell = enumerate_cell(2, 3, 2);
    for (std::size_t j = 0; j < cell.basis.size(); ++j)
        CHECK(cell.index_of(cell.basis[j]) == static_cast<long>(j));
}

TEST_CASE("coefficient round-trip through an assembled multivector") {
    std::mt19937 rng(5);
    GradedCell cell = enumerate_cell(2, 2, 1);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<GaussianRational> coeffs;
    MultiVector x(2);
    for (const auto& key : cell.basis) {
        coeffs.push_back(GaussianRational(coeff(rng), coeff(rng)));
        x.add_term(key, coeffs.back());
    }
    for (std::size_t j = 0; j < cell.basis.size(); ++j)
        CHECK(x.coefficient(cell.basis[j]) == coeffs[j]);
}

TEST_CASE("lambda decomposition") {
    int n = 1;
    SUBCASE("single part") {
        MultiVector x = basis(n, {2}, {1}, {1}) + basis(n, {1}, {2}, {2});
        auto parts = lambda_decompose(x);
        REQUIRE(parts.size() == 1);
        CHECK(parts.begin()->first == std::vector<int>{1, 1});
        CHECK(parts.begin()->second == x);
    }
    SUBCASE("euler field") {
        MultiVector x = basis(n, {1}, {0}, {1});
        auto parts = lambda_decompose(x);
        REQUIRE(parts.size() == 1);
        CHECK(parts.begin()->first == std::vector<int>{0, 0});
    }
    SUBCASE("negative coordinate") {
        MultiVector x = basis(n, {0}, {2}, {1});
        auto parts = lambda_decompose(x);
        REQUIRE(parts.size() == 1);
        CHECK(parts.begin()->first == std::vector<int>{-1, 2});
    }
    SUBCASE("parts sum to input and keys obey the -1 constraint") {
        std::mt19937 rng(9);
        for (int trial = 0; trial < 10; ++trial) {
            MultiVector x = random_homogeneous(2, 3, 1, rng);
            auto parts = lambda_decompose(x);
            MultiVector total(2);
            for (const auto& [lambda, part] : parts) {
                int minus_ones = 0;
                for (int v : lambda) {
                    CHECK(v >= -1);
                    if (v == -1) ++minus_ones;
                }
                CHECK(minus_ones <= 1);
                total = total + part;
            }
            CHECK(total == x);
        }
    }
    SUBCASE("wedge degree != 1 rejected") {
        CHECK_THROWS_AS(lambda_decompose(basis(1, {0}, {0}, {1, 2})), grading_error);
    }
}

TEST_CASE("term text form") {
    MultiVector t = MultiVector::term(2, Monomial({2, 0}, {0, 2}), WedgeIndex({2, 3}),
                                      GaussianRational(2));
    CHECK(to_term_strings(t) == std::vector<std::string>{"2*z1^2*w2^2 dz2^dw1"});
    CHECK(to_term_strings(basis(1, {0}, {0}, {1, 2})) == std::vector<std::string>{"dz^dw"});
    CHECK(to_term_strings(basis(1, {1}, {1}, {}, -1)) == std::vector<std::string>{"-z*w"});
    MultiVector c = MultiVector::term(2, Monomial({1, 0}, {0, 0}), WedgeIndex({1}),
                                      GaussianRational(mpq_class(1, 2), mpq_class(1)));
    CHECK(to_term_strings(c) == std::vector<std::string>{"(1/2+i)*z1 dz1"});
}

TEST_CASE("mismatched n is a dimension error") {
    CHECK_THROWS_AS(wedge(MultiVector(1), MultiVector(2)), dimension_error);
}
