#include "nsymkit/matrix.hpp"
#include "nsymkit/transmat.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace nsymkit;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Textbook Gauss-Jordan with rational pivots, used as the reference inverse.
std::optional<RationalMatrix> gauss_jordan_inverse(RationalMatrix a) {
  const std::size_t n = a.rows();
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(pivot, j));
      std::swap(inv(col, j), inv(pivot, j));
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix m(n, n);
  std::uniform_int_distribution<int> zero(0, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = zero(rng) ? testing::random_rational(rng) : Rational(0);
  return m;
}

}  // namespace

TEST_SUITE("transmat") {
  TEST_CASE("change-of-basis examples") {
    CHECK(cob_matrix(QSymBasis::F, QSymBasis::M, 2).entries == from_rows({{1, 1}, {0, 1}}));
    CHECK(cob_matrix(NSymBasis::R, NSymBasis::H, 2).entries == from_rows({{1, 0}, {-1, 1}}));
    for (int n = 1; n <= 4; ++n) {
      for (auto b : kNSymBases) CHECK(cob_matrix(b, b, n).entries == RationalMatrix::identity(1u << (n - 1)));
      for (auto b : kQSymBases) CHECK(cob_matrix(b, b, n).entries == RationalMatrix::identity(1u << (n - 1)));
    }
    const auto m = cob_matrix(NSymBasis::Psi, NSymBasis::H, 3);
    CHECK(m.index == enumerate_compositions(3));
    CHECK(m.entries(0, 0) == 3);
    CHECK(m.entries(0, 1) == -2);
  }

  TEST_CASE("named matrices") {
    CHECK(named_matrix(NamedMatrix::K, 2).entries == from_rows({{1, 1}, {0, 1}}));
    CHECK(named_matrix(NamedMatrix::K, 2).entries == cob_matrix(QSymBasis::F, QSymBasis::M, 2).entries);
    CHECK(named_matrix(NamedMatrix::Eps, 2).entries == from_rows({{-1, 0}, {0, 1}}));
    CHECK(named_matrix(NamedMatrix::K, 1).entries == from_rows({{1}}));
    CHECK(named_matrix(NamedMatrix::Z, 3).entries == RationalMatrix::diagonal({3, 2, 2, 6}));
    const auto j = named_matrix(NamedMatrix::JPsi, 3).entries;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) CHECK(j(r, c) == (r + c == 3 ? 1 : 0));
    CHECK(parse_named_matrix("J_psi") == NamedMatrix::JPsi);
    CHECK(parse_named_matrix("eps") == NamedMatrix::Eps);
    CHECK(parse_named_matrix("L_phi") == NamedMatrix::LPhi);
    CHECK_THROWS_AS(parse_named_matrix("Q"), std::invalid_argument);
    CHECK_THROWS_AS(named_matrix(NamedMatrix::K, 0), std::invalid_argument);
    CHECK_THROWS_AS(named_matrix(NamedMatrix::K, kMaxMatrixDegree + 1), std::invalid_argument);
  }

  TEST_CASE("J matrices are symmetric involutions") {
    for (int n = 1; n <= 8; ++n) {
      for (auto name : {NamedMatrix::JPsi, NamedMatrix::JRho, NamedMatrix::JOmega}) {
        const auto j = named_matrix(name, n).entries;
        CHECK(j * j == RationalMatrix::identity(j.rows()));
        CHECK(j.transpose() == j);
      }
    }
  }

  TEST_CASE("exact inverse against Gauss-Jordan") {
    auto rng = testing::make_rng(7);
    int invertible = 0;
    for (int trial = 0; trial < 80; ++trial) {
      const RationalMatrix a = random_matrix(rng, 1 + trial % 7);
      const auto ref = gauss_jordan_inverse(a);
      if (!ref) {
        CHECK_THROWS_AS(inverse(a), std::domain_error);
        continue;
      }
      ++invertible;
      const RationalMatrix inv = inverse(a);
      CHECK(inv == *ref);
      CHECK(a * inv == RationalMatrix::identity(a.rows()));
    }
    CHECK(invertible > 40);
    CHECK_THROWS_AS(inverse(from_rows({{1, 2}, {2, 4}})), std::domain_error);
    CHECK_THROWS_AS(inverse(RationalMatrix(2, 3)), std::invalid_argument);
  }

  TEST_CASE("left solve") {
    const RationalMatrix a = from_rows({{2, 1}, {1, 1}});
    const auto x = solve_left(a, {3, 2});
    CHECK(x == std::vector<Rational>{1, 1});
  }

  TEST_CASE("inverse law and composition law") {
    for (int n = 1; n <= 5; ++n) {
      const auto id = RationalMatrix::identity(1u << (n - 1));
      for (auto a : kNSymBases)
        for (auto b : kNSymBases) {
          CHECK(cob_matrix(a, b, n).entries * cob_matrix(b, a, n).entries == id);
          for (auto d : kNSymBases)
            CHECK(cob_matrix(d, b, n).entries * cob_matrix(b, a, n).entries == cob_matrix(d, a, n).entries);
        }
      for (auto a : kQSymBases)
        for (auto b : kQSymBases) CHECK(cob_matrix(a, b, n).entries * cob_matrix(b, a, n).entries == id);
    }
  }

  TEST_CASE("dual pairs have transposed matrices") {
    // M(a,b) for QSym bases dual to NSym bases B, A: M(a,b) = M(B,A)^t.
    for (int n = 1; n <= 6; ++n) {
      CHECK(cob_matrix(QSymBasis::F, QSymBasis::M, n).entries ==
            cob_matrix(NSymBasis::H, NSymBasis::R, n).entries.transpose());
      CHECK(cob_matrix(QSymBasis::M, QSymBasis::F, n).entries ==
            cob_matrix(NSymBasis::R, NSymBasis::H, n).entries.transpose());
      CHECK(cob_matrix(QSymBasis::For, QSymBasis::M, n).entries ==
            cob_matrix(NSymBasis::H, NSymBasis::E, n).entries.transpose());
    }
  }

  TEST_CASE("identity suite") {
    for (int n = 1; n <= 5; ++n) {
      const Report r = check_identities(n);
      CHECK(r.passed());
      std::size_t errata = 0;
      for (const auto& c : r.checks()) {
        if (!c.printed_erratum) continue;
        ++errata;
        if (n >= 3) CHECK_MESSAGE(!c.passed, c.name);
      }
      CHECK(errata == 8);
    }
  }

  TEST_CASE("csv and json export") {
    const auto m = cob_matrix(QSymBasis::F, QSymBasis::M, 2);
    CHECK(to_csv(m) == "index,\"[2]\",\"[1,1]\"\n\"[2]\",1,1\n\"[1,1]\",0,1\n");
    const auto j = nlohmann::json::parse(to_json(cob_matrix(NSymBasis::H, NSymBasis::Phi, 2)));
    CHECK(j["n"] == 2);
    CHECK(j["rows"] == nlohmann::json::array({"[2]", "[1,1]"}));
    CHECK(j["cols"] == j["rows"]);
    CHECK(j["entries"][0] == nlohmann::json::array({"1/2", "1/2"}));
    CHECK(j["entries"][1] == nlohmann::json::array({"0", "1"}));
  }
}
