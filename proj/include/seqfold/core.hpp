#pragma once

// Alphabet and sequence algebra shared by all solvers and gadget builders.
//
// The working alphabet is {0, 1, 0', 1'} stored as a 2-bit code; the external
// text form uses the aliases A=0, C=1, U=0', G=1', so matchable pairs are
// exactly {A,U} and {C,G}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqfold/rng.hpp"

namespace seqfold {

enum class Sym : uint8_t { Zero = 0, One = 1, ZeroP = 2, OneP = 3 };

constexpr bool is_primed(Sym s) { return static_cast<uint8_t>(s) >= 2; }

// 0 <-> 0', 1 <-> 1' (both directions)
constexpr Sym toggled_prime(Sym s) {
  return static_cast<Sym>(static_cast<uint8_t>(s) ^ 2u);
}

// complementary pair in either order: {0,0'} or {1,1'}
constexpr bool matchable(Sym a, Sym b) {
  return (static_cast<uint8_t>(a) ^ 2u) == static_cast<uint8_t>(b);
}

char to_alias_char(Sym s);   // A/C/U/G
char to_digit_char(Sym s);   // 0/1 (primed symbols need the apostrophe)

struct Seq {
  std::vector<Sym> sym;

  Seq() = default;
  explicit Seq(std::vector<Sym> v) : sym(std::move(v)) {}

  size_t size() const { return sym.size(); }
  bool empty() const { return sym.empty(); }
  Sym operator[](size_t i) const { return sym[i]; }
  Sym& operator[](size_t i) { return sym[i]; }

  void push_back(Sym s) { sym.push_back(s); }
  void reserve(size_t n) { sym.reserve(n); }
  void append(const Seq& other) { sym.insert(sym.end(), other.sym.begin(), other.sym.end()); }
  void append_run(Sym s, long long count) { sym.insert(sym.end(), static_cast<size_t>(count), s); }

  bool operator==(const Seq& other) const = default;

  auto begin() const { return sym.begin(); }
  auto end() const { return sym.end(); }
};

Seq operator+(const Seq& a, const Seq& b);

// run of a single symbol
Seq run(Sym s, long long count);

// symbol-wise counts indexed by the 2-bit code
std::array<long long, 4> symbol_counts(const Seq& s);

bool is_binary(const Seq& s);  // over {0,1} only

// number of One symbols; requires binary input
long long ones_count(const Seq& s);

// (length, number of ones) of a binary string
struct SeqType {
  long long len = 0;
  long long ones = 0;
  bool operator==(const SeqType&) const = default;
};

SeqType type_of(const Seq& s);  // rejects primed symbols

// p(X): defined on prime-free input only
Seq prime_map(const Seq& s);

Seq reverse(const Seq& s);

// --- text forms ---------------------------------------------------------
//
// Canonical form is A/C/G/U. The digit alias form writes 0,1 with a trailing
// apostrophe for primed symbols ("0'1'"). parse_rna accepts both.

std::string to_acgu(const Seq& s);
std::string to_digits(const Seq& s);

// throws std::invalid_argument with a column hint on bad input
Seq parse_rna(std::string_view text);

// binary string literal "0110" -> Seq (tests, vertex codes)
Seq from_bits(std::string_view bits);

// random binary sequence of given length
Seq random_binary(long long len, Rng& rng);

// random sequence over all four symbols
Seq random_rna(long long len, Rng& rng);

}  // namespace seqfold
