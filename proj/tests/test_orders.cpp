#include "doctest.h"
#include "moncubic/orders.hpp"

using namespace moncubic;

TEST_CASE("irreducibility") {
  CHECK(is_irreducible_cubic({0, -1, -1}));
  CHECK(!is_irreducible_cubic({0, -1, 0}));
  CHECK(is_irreducible_cubic({0, 4, -1}));
  CHECK(!is_irreducible_cubic({-6, 11, -6}));  // (x-1)(x-2)(x-3)
}

TEST_CASE("maximality") {
  MonicCubicForm dedekind{-1, -2, -8};
  CHECK(!is_maximal_at(dedekind, 2));
  CHECK(is_maximal_at({0, -1, -1}, 23));
  CHECK(is_maximal_at(dedekind, 503));  // 503 divides disc once
  CHECK(is_maximal({0, -1, -1}) == Maximality::Maximal);
  CHECK(is_maximal(dedekind) == Maximality::NotMaximal);
  CHECK(is_maximal({0, -4, -1}) == Maximality::Maximal);
  // x^3 - 8 x - 8: disc = 4*512 - 27*64 = 320, 2 divides f fully.
  CHECK(!is_maximal_at({0, -8, -8}, 2));
}

TEST_CASE("classification") {
  auto cyc = classify({1, -2, -1});
  CHECK(cyc.irreducible);
  CHECK(cyc.disc == 49);
  CHECK(!cyc.galois_s3);
  auto c = classify({0, -1, -1});
  CHECK(c.galois_s3);
  CHECK(c.signature == Signature::Complex);
  CHECK(c.is_maximal());
  auto r = classify({0, -4, -1});
  CHECK(r.galois_s3);
  CHECK(r.signature == Signature::TotallyReal);
  CHECK(r.disc == 229);
  CHECK(to_string(Signature::TotallyReal) == "real");
}
