#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ekr/matrix_io.hpp"
#include "ekr/pseudoadjacency.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

using namespace ekr;

TEST_CASE("header and payload for the Petersen-shaped Wilson matrix") {
    const SchemeParams p(5, 2, 1);
    const DenseRationalMatrix omega = materialize(p, wilson_descriptor(p).coefficients);
    CHECK(omega.nonzero_count() == 30); // A_2 of J(5,2) is 3-regular on 10 vertices

    std::ostringstream out;
    write_matrix_coo(out, omega);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "rational-coo 10 10 15");

    std::string line;
    std::size_t payload = 0;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++payload;
        CHECK(line.substr(line.rfind(' ') + 1) == "1/2");
    }
    CHECK(payload == 15);
}

TEST_CASE("round trip is the identity") {
    std::mt19937 rng(8080);
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 20);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 1 + trial % 9;
        DenseRationalMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i; j < dim; ++j) {
                m.at(i, j) = Rational(num(rng), den(rng));
                m.at(j, i) = m.at(i, j);
            }
        }
        std::ostringstream out;
        write_matrix_coo(out, m);
        std::istringstream in(out.str());
        CHECK(read_matrix_coo(in) == m);
    }
}

TEST_CASE("malformed inputs are rejected") {
    std::istringstream bad_magic("coo 2 2 0\n");
    CHECK_THROWS_AS(read_matrix_coo(bad_magic), std::domain_error);

    std::istringstream not_square("rational-coo 2 3 0\n");
    CHECK_THROWS_AS(read_matrix_coo(not_square), std::domain_error);

    std::istringstream truncated("rational-coo 2 2 2\n0 0 1\n");
    CHECK_THROWS_AS(read_matrix_coo(truncated), std::domain_error);

    std::istringstream lower_triangle("rational-coo 2 2 1\n1 0 1\n");
    CHECK_THROWS_AS(read_matrix_coo(lower_triangle), std::domain_error);

    std::istringstream out_of_range("rational-coo 2 2 1\n0 5 1\n");
    CHECK_THROWS_AS(read_matrix_coo(out_of_range), std::domain_error);
}
