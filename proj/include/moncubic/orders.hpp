#pragma once

// Arithmetic of the monogenic order Z[x]/(f(x,1)) attached to a monic cubic:
// irreducibility, maximality (Dedekind's criterion), Galois type, signature.

#include <cstdint>
#include <string_view>

#include "moncubic/arith.hpp"
#include "moncubic/cubic_forms.hpp"

namespace moncubic {

enum class Signature { TotallyReal, Complex };

enum class Maximality { Maximal, NotMaximal, Indeterminate };

std::string_view to_string(Signature s);
std::string_view to_string(Maximality m);

struct FieldClassification {
  bool irreducible = false;
  Maximality maximal = Maximality::Indeterminate;
  bool galois_s3 = false;
  Signature signature = Signature::Complex;
  i128 disc = 0;

  bool is_maximal() const { return maximal == Maximality::Maximal; }
};

bool is_irreducible_cubic(const MonicCubicForm& f);
bool is_maximal_at(const MonicCubicForm& f, std::uint64_t p);
Maximality is_maximal(const MonicCubicForm& f, const FactorOptions& opt = {});
FieldClassification classify(const MonicCubicForm& f, const FactorOptions& opt = {});

}  // namespace moncubic
