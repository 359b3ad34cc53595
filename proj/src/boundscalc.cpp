#include "vfk/boundscalc.hpp"

#include <cmath>

#include "vfk/error.hpp"

namespace vfk {

namespace {

BigInt power(const BigInt& base, const BigInt& exponent) {
  BigInt result = 1;
  BigInt b = base;
  BigInt e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

BigInt ceil_half(const BigInt& x) { return (x + 1) / 2; }

void finish(BoundSet& b) {
  b.R = ceil_half(3 * b.k * b.K);
  b.Lambda = 2 * (b.R + 1) * (b.Theta + 1) * b.Theta * b.Xi + b.Theta;
  b.phi_len = phi_length_bound(b);
}

}  // namespace

std::vector<std::pair<std::string, BigInt>> BoundSet::rows() const {
  std::vector<std::pair<std::string, BigInt>> out{{"N", N},   {"d", d},         {"k", k},         {"K", K},
                                                  {"R", R},   {"Xi", Xi},       {"Theta", Theta}, {"Lambda", Lambda},
                                                  {"phi_len", phi_len}};
  if (Xi_sharp) out.emplace_back("Xi_sharp", *Xi_sharp);
  return out;
}

BigInt phi_length_bound(const BoundSet& b) { return 4 * (b.R + 1) * (b.Theta + 1) * (b.Theta + 1) * b.Xi; }

BoundSet bounds_for_grammar_params(const BigInt& size, std::size_t productions, std::size_t sigma) {
  constexpr double kMaxBits = 67108864.0;  // 2^26
  // The largest power is d^(12k+11) with k = 2^|P|.
  const double log_d = sigma > 1 ? std::log2(static_cast<double>(sigma)) : 0.0;
  if (log_d > 0.0 && (static_cast<double>(productions) >= 60.0 ||
                      12.0 * std::ldexp(1.0, static_cast<int>(productions)) * log_d > kMaxBits)) {
    throw Error(ErrorCode::ExplosionGuard,
                "bounds for " + std::to_string(productions) + " productions exceed the 2^26-bit limit");
  }
  BoundSet b;
  b.source = BoundSet::Source::Grammar;
  b.N = size;
  b.d = sigma;
  b.k = BigInt(1) << productions;
  b.K = power(b.d, 3 * b.k + 3);
  b.Xi = power(b.d, 12 * b.k + 10);
  b.Theta = power(b.d, 12 * b.k + 11);
  finish(b);
  return b;
}

BoundSet bounds_for_grammar(const Grammar& cnf) {
  if (!cnf.is_cnf()) throw Error(ErrorCode::NotCnf, "bounds are stated for grammars in Chomsky normal form");
  return bounds_for_grammar_params(cnf.size(), cnf.productions.size(), cnf.terminals.names.size());
}

BoundSet bounds_for_presentation(const VfPresentation& p) {
  BoundSet b;
  b.source = BoundSet::Source::Presentation;
  b.N = p.size();
  b.d = p.sigma().size();
  b.k = 2 * b.N + 2;
  b.K = b.N * b.N;
  b.Xi = b.N;
  b.Theta = b.N;
  b.Xi_sharp = BigInt(p.num_reps());
  finish(b);
  return b;
}

}  // namespace vfk
