#include <sstream>

#include "doctest.h"
#include "magma/core.hpp"
#include "magma/errors.hpp"
#include "magma/instances.hpp"
#include "magma/table_io.hpp"

using namespace magma;

TEST_CASE("table construction validates shape and range") {
    CHECK_THROWS_AS(MagmaTable(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(MagmaTable(2, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MagmaTable(2, {0, 1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(MagmaTable(2, {0, 0, 0, 0}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(MagmaTable(2, {0, 0, 0, 0}, {}, 2), std::invalid_argument);
}

TEST_CASE("declared codomain must cover occurring values") {
    CHECK_THROWS_AS(MagmaTable(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 1}), std::invalid_argument);
    const MagmaTable t(3, {0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 1, 2});
    CHECK(t.codomain_size() == 3);
    CHECK(t.in_codomain(2));
}

TEST_CASE("default codomain is the set of occurring values") {
    const MagmaTable t(4, std::vector<Element>(16, 0));
    CHECK(t.codomain() == std::vector<Element>{0});
    const MagmaTable u = make_single_witness_table(6, 3);
    CHECK(u.codomain() == std::vector<Element>{0, 1});
}

TEST_CASE("associativity check and witness order") {
    CHECK(is_associative(make_cyclic_group(5)).holds);
    CHECK(is_associative(make_truncated_add_monoid(7)).holds);
    const MagmaTable w = make_single_witness_table(6, 0);
    const auto report = is_associative(w);
    CHECK_FALSE(report.holds);
    REQUIRE(report.witness.size() == 3);
    // the lone violating triple is (u, u, 1) for the table's u >= 2
    const Element u = report.witness[0];
    CHECK(u >= 2);
    CHECK(report.witness == std::vector<Element>{u, u, 1});
    CHECK(count_associativity_witnesses(w) == 1);
}

TEST_CASE("identity search on both sides") {
    const MagmaTable cyc = make_cyclic_group(4);
    CHECK(find_identity(cyc, IdentitySide::Right) == 0);
    CHECK(find_identity(cyc, IdentitySide::Left) == 0);
    CHECK(find_identity(cyc, IdentitySide::TwoSided) == 0);
    CHECK(is_two_sided_identity(cyc, 0));
    CHECK_FALSE(is_two_sided_identity(cyc, 1));

    // right identity only: x*y = x
    const MagmaTable proj(3, {0, 0, 0, 1, 1, 1, 2, 2, 2});
    CHECK(find_identity(proj, IdentitySide::Right) == 0);
    CHECK_FALSE(find_identity(proj, IdentitySide::Left).has_value());
    CHECK_FALSE(find_identity(proj, IdentitySide::TwoSided).has_value());
}

TEST_CASE("quasigroup and loop checks") {
    CHECK(is_quasigroup(make_cyclic_group(6)).holds);
    CHECK(is_loop(make_cyclic_group(6)).holds);
    const auto loop_report = is_loop(make_cyclic_group(6));
    REQUIRE(loop_report.witness.size() == 1);
    CHECK(loop_report.witness[0] == 0);

    // constant table: rows are not permutations
    const MagmaTable c(2, {0, 0, 0, 0});
    const auto q = is_quasigroup(c);
    CHECK_FALSE(q.holds);
    REQUIRE(q.witness.size() == 2);

    // Latin square without identity: quasigroup but not loop
    const MagmaTable latin(3, {1, 0, 2, 0, 2, 1, 2, 1, 0});
    CHECK(is_quasigroup(latin).holds);
    CHECK_FALSE(is_loop(latin).holds);
}

TEST_CASE("group check over generated instances") {
    for (int n : {1, 2, 3, 4, 5, 8, 12}) CHECK(is_group(make_cyclic_group(n)).holds);
    CHECK_FALSE(is_group(make_monoid_with_absorber(6)).holds);
    CHECK_FALSE(is_group(make_truncated_add_monoid(5)).holds);
    CHECK(is_monoid(make_monoid_with_absorber(6)));
    CHECK(is_monoid(make_truncated_add_monoid(5)));
    CHECK_FALSE(is_monoid(make_single_witness_table(5, 1)));

    const auto product = make_direct_product(make_cyclic_group(2), make_cyclic_group(3));
    CHECK(is_group(product).holds);
    CHECK(product.declared_identity() == 0);

    const auto shuffled = relabel(make_cyclic_group(8), random_permutation(8, 42));
    CHECK(is_group(shuffled).holds);
}

TEST_CASE("element order walks the power sequence to the first repeat") {
    const MagmaTable cyc = make_cyclic_group(4);
    const auto ord = element_order(cyc, 1);
    CHECK(ord.powers == std::vector<Element>{1, 2, 3, 0, 1});
    CHECK(ord.s == 1);
    CHECK(ord.t == 5);
    CHECK(ord.identity_power == 4);

    const auto ord0 = element_order(cyc, 0);
    CHECK(ord0.powers == std::vector<Element>{0, 0});
    CHECK(ord0.identity_power == 1);

    const MagmaTable absorber = make_monoid_with_absorber(5);
    const auto bottom = element_order(absorber, 4);
    CHECK(bottom.powers == std::vector<Element>{4, 4});
    CHECK_FALSE(bottom.identity_power.has_value());
}

TEST_CASE("inverse modes agree on groups and split the absorber monoid") {
    const MagmaTable cyc = make_cyclic_group(5);
    for (Element a = 0; a < 5; ++a) {
        CHECK(has_inverse(cyc, a, 0, InverseMode::RightRow));
        CHECK(has_inverse(cyc, a, 0, InverseMode::TwoSided));
    }
    const MagmaTable absorber = make_monoid_with_absorber(4);
    CHECK_FALSE(has_inverse(absorber, 3, 0, InverseMode::RightRow));
    CHECK_THROWS_AS(has_inverse(absorber, 1, 2, InverseMode::RightRow), PromiseViolation);
}

TEST_CASE("table text round trip") {
    const MagmaTable cyc = make_cyclic_group(3);
    const std::string text = format_table(cyc, "cyclic 3");
    const MagmaTable back = parse_table_string(text, "roundtrip");
    CHECK(back.entries() == cyc.entries());
    CHECK(back.declared_identity() == 0);
    CHECK(back.size() == 3);
}

TEST_CASE("parser reports line and column") {
    CHECK_THROWS_AS(parse_table_string("n=2\n0 1\n1 9\n", "bad"), ParseError);
    try {
        parse_table_string("n=2\n0 1\n1 9\n", "bad");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find("bad:3:3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_table_string("", "empty"), ParseError);
    CHECK_THROWS_AS(parse_table_string("n=2\n0 1\n", "short"), ParseError);
    CHECK_THROWS_AS(parse_table_string("n=2\n0 1 0\n1 0\n", "wide"), ParseError);
    CHECK_THROWS_AS(parse_table_string("n=2\nidentity=5\n0 1\n1 0\n", "id"), ParseError);
    CHECK_THROWS_AS(parse_table_string("n=2\ncodomain=0\n0 1\n1 0\n", "codomain"), ParseError);
    CHECK_THROWS_AS(parse_table_string("n=x\n", "n"), ParseError);
}

TEST_CASE("comments and headers parse") {
    const std::string text = "# a comment\nn=2\nidentity=0\ncodomain=0 1\n0 1\n1 0\n";
    const MagmaTable t = parse_table_string(text, "ok");
    CHECK(t.size() == 2);
    CHECK(t.declared_identity() == 0);
    CHECK(t.codomain() == std::vector<Element>{0, 1});
}

TEST_CASE("bit matrix round trip and range errors") {
    BitMatrix m(3);
    m.set(0, 1, true);
    m.set(2, 2, true);
    const std::string text = format_bit_matrix(m, "sparse");
    const BitMatrix back = parse_bit_matrix_string(text, "roundtrip");
    CHECK(back == m);
    CHECK_THROWS_AS(parse_bit_matrix_string("n=2\n0 2\n0 0\n", "bits"), ParseError);
}

TEST_CASE("relabel validates permutations") {
    CHECK_THROWS_AS(relabel(make_cyclic_group(3), {0, 1}), ParameterViolation);
    CHECK_THROWS_AS(relabel(make_cyclic_group(3), {0, 1, 1}), ParameterViolation);
    CHECK_THROWS_AS(relabel(make_cyclic_group(3), {0, 1, 3}), ParameterViolation);
}
