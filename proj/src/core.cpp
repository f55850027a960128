#include "seqfold/core.hpp"

namespace seqfold {

char to_alias_char(Sym s) {
  switch (s) {
    case Sym::Zero: return 'A';
    case Sym::One: return 'C';
    case Sym::ZeroP: return 'U';
    case Sym::OneP: return 'G';
  }
  return '?';
}

char to_digit_char(Sym s) {
  return (s == Sym::Zero || s == Sym::ZeroP) ? '0' : '1';
}

Seq operator+(const Seq& a, const Seq& b) {
  Seq out;
  out.reserve(a.size() + b.size());
  out.append(a);
  out.append(b);
  return out;
}

Seq run(Sym s, long long count) {
  if (count < 0) throw std::invalid_argument("run: negative count");
  Seq out;
  out.append_run(s, count);
  return out;
}

std::array<long long, 4> symbol_counts(const Seq& s) {
  std::array<long long, 4> c{0, 0, 0, 0};
  for (Sym x : s.sym) c[static_cast<size_t>(x)]++;
  return c;
}

bool is_binary(const Seq& s) {
  for (Sym x : s.sym)
    if (is_primed(x)) return false;
  return true;
}

long long ones_count(const Seq& s) {
  long long n = 0;
  for (Sym x : s.sym) {
    if (is_primed(x)) throw std::invalid_argument("ones_count: primed symbol");
    if (x == Sym::One) n++;
  }
  return n;
}

SeqType type_of(const Seq& s) {
  return SeqType{static_cast<long long>(s.size()), ones_count(s)};
}

Seq prime_map(const Seq& s) {
  Seq out;
  out.reserve(s.size());
  for (Sym x : s.sym) {
    if (is_primed(x)) throw std::invalid_argument("prime_map: input already primed");
    out.push_back(toggled_prime(x));
  }
  return out;
}

Seq reverse(const Seq& s) {
  Seq out;
  out.reserve(s.size());
  for (size_t i = s.size(); i > 0; i--) out.push_back(s[i - 1]);
  return out;
}

std::string to_acgu(const Seq& s) {
  std::string out;
  out.reserve(s.size());
  for (Sym x : s.sym) out.push_back(to_alias_char(x));
  return out;
}

std::string to_digits(const Seq& s) {
  std::string out;
  for (Sym x : s.sym) {
    out.push_back(to_digit_char(x));
    if (is_primed(x)) out.push_back('\'');
  }
  return out;
}

Seq parse_rna(std::string_view text) {
  Seq out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); i++) {
    char c = text[i];
    Sym s;
    switch (c) {
      case 'A': case 'a': s = Sym::Zero; break;
      case 'C': case 'c': s = Sym::One; break;
      case 'U': case 'u': s = Sym::ZeroP; break;
      case 'G': case 'g': s = Sym::OneP; break;
      case '0': s = Sym::Zero; break;
      case '1': s = Sym::One; break;
      case '\'':
        if (out.empty() || is_primed(out.sym.back()))
          throw std::invalid_argument("parse_rna: stray apostrophe at column " + std::to_string(i + 1));
        out.sym.back() = toggled_prime(out.sym.back());
        continue;
      default:
        throw std::invalid_argument(std::string("parse_rna: bad character '") + c +
                                    "' at column " + std::to_string(i + 1));
    }
    out.push_back(s);
  }
  return out;
}

Seq from_bits(std::string_view bits) {
  Seq out;
  out.reserve(bits.size());
  for (size_t i = 0; i < bits.size(); i++) {
    if (bits[i] == '0') out.push_back(Sym::Zero);
    else if (bits[i] == '1') out.push_back(Sym::One);
    else throw std::invalid_argument("from_bits: bad character at column " + std::to_string(i + 1));
  }
  return out;
}

Seq random_binary(long long len, Rng& rng) {
  Seq out;
  out.reserve(len);
  for (long long i = 0; i < len; i++) out.push_back(static_cast<Sym>(rng.below(2)));
  return out;
}

Seq random_rna(long long len, Rng& rng) {
  Seq out;
  out.reserve(len);
  for (long long i = 0; i < len; i++) out.push_back(static_cast<Sym>(rng.below(4)));
  return out;
}

}  // namespace seqfold
