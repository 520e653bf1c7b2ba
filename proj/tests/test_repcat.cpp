#include <random>

#include "doctest.h"
#include "hallkit/io.hpp"
#include "hallkit/repcat.hpp"
#include "support.hpp"

using namespace hallkit;
using hallkit::testing::A;

namespace {

ThetaMatrix random_matrix(std::mt19937& rng, int n, int max_len, int max_segments) {
  std::uniform_int_distribution<int> vert(1, n), len(1, max_len), mult(1, 2), count(0, max_segments);
  std::vector<Segment> segs;
  for (int k = 0, c = count(rng); k < c; ++k) segs.push_back({vert(rng), len(rng), mult(rng)});
  return ThetaMatrix(n, segs);
}

DimVector random_dim(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> e(-4, 4);
  std::vector<int> x(static_cast<std::size_t>(n));
  for (auto& v : x) v = e(rng);
  return DimVector(x);
}

}  // namespace

TEST_CASE("parsing and canonical segments") {
  auto a = ThetaMatrix::parse(3, "3.1.1,1.3.1,2.1.1,3.1.1");
  CHECK(a.to_string() == "1.3.1,2.1.1,3.1.2");
  CHECK(a == A(6));
  CHECK(a.mult(3, 1) == 2);
  CHECK(a.mult(2, 2) == 0);
  CHECK(ThetaMatrix::parse(2, "").is_zero());
  CHECK_THROWS_AS(ThetaMatrix::parse(3, "4.1.1"), std::invalid_argument);
  CHECK_THROWS_AS(ThetaMatrix::parse(3, "1.0.1"), std::invalid_argument);
  CHECK_THROWS_AS(ThetaMatrix::parse(3, "1.1"), std::invalid_argument);
  CHECK(DimVector::parse("1,2,3") == DimVector({1, 2, 3}));
}

TEST_CASE("core entries are periodic") {
  auto a = A(9);  // S1[3], S2[2], S3[1]
  CHECK(a.entry(1, 4) == 1);
  CHECK(a.entry(2, 4) == 1);
  CHECK(a.entry(3, 4) == 1);
  CHECK(a.entry(4, 7) == 1);
  CHECK(a.entry(-2, 1) == 1);
  CHECK(a.entry(1, 2) == 0);
  CHECK(a.entry(2, 1) == 0);
}

TEST_CASE("dim stats examples") {
  auto s6 = dim_stats(A(6));
  CHECK(s6.dim_vector == DimVector({1, 2, 3}));
  CHECK(s6.dim == 6);
  CHECK(s6.aperiodic);
  auto s18 = dim_stats(A(18));
  CHECK(s18.period == 1);
  CHECK(s18.loewy == 1);
  CHECK(s18.strongly_periodic);
  CHECK_FALSE(s18.aperiodic);
  auto z = dim_stats(ThetaMatrix(2));
  CHECK(z.dim == 0);
  CHECK(z.loewy == 0);
  CHECK(z.period == 0);
  CHECK(z.aperiodic);
  CHECK(z.strongly_periodic);
  // {S1[2], S2[2]} n=2: periods 1 and 2 both full
  auto p = ThetaMatrix::parse(2, "1.2.1,2.2.1");
  CHECK(p.period() == 2);
  CHECK(p.strongly_periodic());
  auto q = ThetaMatrix::parse(2, "1.1.1,2.1.1,1.3.1");
  CHECK(q.period() == 1);
  CHECK_FALSE(q.strongly_periodic());
}

TEST_CASE("dimension invariants on random matrices") {
  std::mt19937 rng(1);
  for (int it = 0; it < 500; ++it) {
    const int n = 2 + it % 3;
    auto a = random_matrix(rng, n, 7, 5);
    long long dim = 0;
    for (auto& s : a.segments()) dim += static_cast<long long>(s.mult) * s.length;
    CHECK(a.dim() == dim);
    CHECK(a.dim_vector().sigma() == dim);
    auto layers = socle_layers(a);
    CHECK(static_cast<int>(layers.size()) == a.loewy());
    DimVector sum = DimVector::zero(n);
    for (auto& l : layers) sum += l;
    CHECK(sum == a.dim_vector());
    if (!layers.empty()) {
      CHECK(layers.front().leq(a.top()));
      CHECK(layers.back() == a.socle());
    }
    CHECK(ThetaMatrix::parse(n, a.to_string()) == a);
    CHECK(io::matrix_from_json(io::to_json(a)) == a);
  }
}

TEST_CASE("socle layer examples") {
  CHECK(socle_layers(ThetaMatrix::parse(2, "1.2.1,2.2.1")) == std::vector{DimVector({1, 1}), DimVector({1, 1})});
  CHECK(socle_layers(ThetaMatrix::parse(2, "1.1.2")) == std::vector{DimVector({2, 0})});
  CHECK(socle_layers(ThetaMatrix::parse(3, "1.3.1")) ==
        std::vector{DimVector({1, 0, 0}), DimVector({0, 1, 0}), DimVector({0, 0, 1})});
  // mixed lengths: the short segment sits in the bottom layer
  CHECK(socle_layers(ThetaMatrix::parse(2, "1.2.1,2.1.1")) == std::vector{DimVector({1, 0}), DimVector({0, 2})});
}

TEST_CASE("hom formula examples") {
  CHECK(dim_hom_indec(1, 3, 1, 3, 3) == 1);
  CHECK(dim_hom_indec(1, 1, 2, 1, 3) == 0);
  CHECK(dim_hom_indec(2, 2, 1, 2, 3) == 1);
}

TEST_CASE("hom formula against the brute-force oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int l = 1; l <= 6; ++l) {
          for (int m = 1; m <= 6; ++m) {
            CHECK_MESSAGE(dim_hom_indec(i, l, j, m, n) == hallkit::testing::hom_oracle(i, l, j, m, n),
                          "n=" << n << " S" << i << "[" << l << "] -> S" << j << "[" << m << "]");
          }
        }
      }
    }
  }
}

TEST_CASE("delta goldens") {
  CHECK(delta(A(6)) == 2);
  CHECK(delta(A(12)) == 3);
  CHECK(delta(A(16)) == 6);
  CHECK(delta(A(15)) == 4);
  CHECK(delta(A(18)) == 8);
  std::mt19937 rng(4);
  for (int it = 0; it < 200; ++it) {
    auto a = random_matrix(rng, 3, 5, 4);
    CHECK(delta(a) == hallkit::testing::hom_oracle(a, a) - a.dim());
    auto b = random_matrix(rng, 3, 5, 4);
    CHECK(dim_hom(a, b) == hallkit::testing::hom_oracle(a, b));
  }
}

TEST_CASE("euler form") {
  CHECK(euler_form(DimVector({1, 0}), DimVector({0, 1})) == -1);
  CHECK(euler_form(DimVector({0, 1}), DimVector({1, 0})) == -1);
  CHECK(euler_form(DimVector({1, 0, 0}), DimVector({0, 0, 1})) == 0);
  CHECK(euler_form(DimVector({1, 1, 1}), DimVector({1, 1, 1})) == 0);
  std::mt19937 rng(8);
  for (int it = 0; it < 300; ++it) {
    const int n = 2 + it % 4;
    auto a = random_dim(rng, n), b = random_dim(rng, n), c = random_dim(rng, n);
    CHECK(euler_form(a + b, c) == euler_form(a, c) + euler_form(b, c));
    CHECK(euler_form(a, b + c) == euler_form(a, b) + euler_form(a, c));
    long long expect = 0;
    for (int i = 1; i <= n; ++i) expect += static_cast<long long>(a[i]) * b[i] - static_cast<long long>(a[i]) * b[vertex_mod(i + 1, n)];
    CHECK(euler_form(a, b) == expect);
  }
}

TEST_CASE("hook sums") {
  auto h = hook_sums(ThetaMatrix::parse(2, "1.1.1"), DimVector({1, 1}));
  CHECK(h.hook == DimVector({1, 0}));
  CHECK(h.diagonal == DimVector({0, 1}));
  auto z = hook_sums(ThetaMatrix(2), DimVector({2, 3}));
  CHECK(z.diagonal == DimVector({2, 3}));
  auto r = hook_sums(ThetaMatrix::parse(2, "1.2.1"), DimVector({2, 1}));
  CHECK(r.hook == DimVector({1, 0}));
  CHECK(r.diagonal == DimVector({1, 1}));
  CHECK_THROWS_AS(hook_sums(ThetaMatrix::parse(2, "1.1.2"), DimVector({1, 0})), std::invalid_argument);
}

TEST_CASE("direct sum adds multiplicities") {
  auto a = ThetaMatrix::parse(3, "1.1.1,2.2.1");
  auto b = ThetaMatrix::parse(3, "2.2.2,3.1.1");
  CHECK(a.direct_sum(b).to_string() == "1.1.1,2.2.3,3.1.1");
  CHECK(a.direct_sum(ThetaMatrix(3)) == a);
}
