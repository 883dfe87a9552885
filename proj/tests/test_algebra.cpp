/*
 *   Copyright 2026 The ybe-growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <ybe/algebra/conjugacy.hpp>
#include <ybe/algebra/group_table.hpp>
#include <ybe/algebra/length_series.hpp>
#include <ybe/algebra/permutation.hpp>
#include <ybe/algebra/quandle.hpp>
#include <ybe/algebra/set_partition.hpp>

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace ybe;

namespace {

std::vector<std::size_t> class_sizes(const FiniteGroupTable& g) {
  const auto dec = conjugacy_classes(g);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dec.count(); ++i) out.push_back(dec.size(i));
  return out;
}

}  // namespace

TEST_CASE("permutations compose right to left", "[algebra]") {
  const auto a = Permutation::transposition(3, 0, 1);
  const auto b = Permutation::transposition(3, 1, 2);
  const auto p = a * b;
  CHECK(p(2) == 0);
  CHECK(p.to_string() == "(1 2 3)");
  CHECK(p.transposition_length() == 2);
  CHECK((p * p.inverse()).is_identity());
  for (std::uint64_t r = 0; r < 120; ++r) CHECK(Permutation::unrank(5, r).rank() == r);
}

TEST_CASE("symmetric and dihedral groups", "[algebra]") {
  const auto s4 = make_symmetric_group(4);
  CHECK(s4.order() == 24);
  CHECK(s4.label(s4.identity()) == "()");
  CHECK(class_sizes(make_symmetric_group(3)) == std::vector<std::size_t>{1, 2, 3});
  CHECK(class_sizes(s4) == std::vector<std::size_t>{1, 3, 6, 6, 8});
  CHECK(class_sizes(make_dihedral_group(5)) == std::vector<std::size_t>{1, 2, 2, 5});
  CHECK(class_sizes(make_dihedral_group(6)) == std::vector<std::size_t>{1, 1, 2, 2, 3, 3});

  const auto d5 = make_dihedral_group(5);
  CHECK(d5.label(0) == "1");
  CHECK(d5.label(3) == "r^3");
  CHECK(d5.label(7) == "s_2");
  // s_2 s_0 is the rotation by 2
  CHECK(d5.mult(7, 5) == 2);
  CHECK(d5.inv(2) == 3);
}

TEST_CASE("groups from explicit tables are validated", "[algebra]") {
  const auto z3 = FiniteGroupTable::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(z3.order() == 3);
  CHECK(z3.inv(1) == 2);
  CHECK_THROWS(FiniteGroupTable::from_table({{0, 1, 2}, {1, 0, 0}, {2, 1, 1}}));
}

TEST_CASE("commutator subgroups and commutator length", "[algebra]") {
  const auto s4 = make_symmetric_group(4);
  CHECK(commutator_subgroup(s4).size() == 12);
  CHECK(commutator_subgroup(make_dihedral_group(9)).size() == 9);
  CHECK(commutator_subgroup(make_dihedral_group(6)).size() == 3);
  for (int d = 2; d <= 6; ++d) {
    const auto g = make_symmetric_group(d);
    CHECK(has_commutator_length_one(g, conjugacy_classes(g)));
  }
}

TEST_CASE("class product table of S3", "[algebra]") {
  const auto g = make_symmetric_group(3);
  const auto dec = conjugacy_classes(g);
  const auto t = class_product_table(g, dec);
  // classes: identity, 3-cycles, transpositions
  CHECK(t.at(1, 1) == 0b011);
  CHECK(t.at(1, 2) == 0b100);
  CHECK(t.at(2, 2) == 0b011);
  CHECK(dec.all_self_inverse());
}

TEST_CASE("transposition length series is the Solomon polynomial", "[algebra]") {
  const auto g = make_symmetric_group(4);
  std::vector<Element> ts;
  for (Element x = 0; x < g.order(); ++x)
    if (symmetric_element(4, x).transposition_length() == 1) ts.push_back(x);
  const auto ls = generic_length_series(g, ts, 4);
  CHECK(ls.complete);
  CHECK(ls.series == TruncatedSeries::from_integers(std::vector<int>{1, 6, 11, 6, 0}));
}

TEST_CASE("quandle solutions", "[algebra]") {
  const auto t4 = transposition_solution(4);
  CHECK(t4.size() == 6);
  CHECK(t4.involutory());
  const auto r5 = reflection_solution(5);
  CHECK(r5.op(1, 3) == 4);
  CHECK(r5.op_inverse(1, r5.op(1, 3)) == 3);
  const auto back = quandle_from_json(to_json(r5));
  CHECK(back.table() == r5.table());
  CHECK_THROWS(quandle_from_json(Json::parse(R"({"op": [[0, 1], [0]]})")));
  // a non-quandle table: x > x must be x
  CHECK_THROWS(quandle_from_json(Json::parse(R"({"op": [[1, 0], [1, 0]]})")));
  const auto full = full_conjugation_solution(make_symmetric_group(3));
  CHECK(full.size() == 6);
}

TEST_CASE("set partitions", "[algebra]") {
  CHECK(enumerate_set_partitions(5).size() == 52);
  CHECK(integer_partitions(5).size() == 7);
  CHECK(integer_partition_multiplicity({2, 2, 1}, 5) == 15);
  const SetPartition p({{0, 1}, {2}, {3}});
  const SetPartition q({{0}, {1}, {2, 3}});
  CHECK(partitions_join(p, q).to_string() == "{{1,2},{3,4}}");
  CHECK(partitions_join(p, SetPartition({{0, 2}, {1}, {3}})).to_string() == "{{1,2,3},{4}}");
}
