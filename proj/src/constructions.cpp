#include "clt/constructions.hpp"

#include <algorithm>

#include "clt/finitefield.hpp"

namespace clt {

namespace {

Permutation field_translation(const FiniteField& field, std::uint64_t shift) {
  std::vector<std::uint32_t> images(field.size());
  for (std::uint64_t x = 0; x < field.size(); ++x)
    images[x] = static_cast<std::uint32_t>(field.add(x, shift));
  return Permutation(std::move(images));
}

Permutation field_scaling(const FiniteField& field, std::uint64_t factor) {
  std::vector<std::uint32_t> images(field.size());
  for (std::uint64_t x = 0; x < field.size(); ++x)
    images[x] = static_cast<std::uint32_t>(field.mul(factor, x));
  return Permutation(std::move(images));
}

// Translations x -> x + p^i, one per basis coefficient of GF(p^m).
std::vector<Permutation> translation_generators(const FiniteField& field) {
  std::vector<Permutation> gens;
  std::uint64_t basis = 1;
  for (unsigned i = 0; i < field.m(); ++i) {
    gens.push_back(field_translation(field, basis));
    basis *= field.p();
  }
  return gens;
}

}  // namespace

PermGroup agl1(unsigned p, unsigned m, std::size_t element_cap) {
  const FiniteField field = field_construct(p, m);
  auto gens = translation_generators(field);
  gens.push_back(field_scaling(field, field.primitive()));
  PermGroup g(static_cast<unsigned>(field.size()), std::move(gens), element_cap);
  if (g.order() != field.size() * (field.size() - 1))
    throw internal_error("AGL(1,q) order is not q(q-1)");
  return g;
}

PermGroup frobenius_subgroup(unsigned p, unsigned m, std::uint64_t h,
                             std::size_t element_cap) {
  const FiniteField field = field_construct(p, m);
  if (h < 1 || (field.size() - 1) % h != 0)
    throw domain_error("complement order " + std::to_string(h) + " does not divide " +
                       std::to_string(field.size() - 1));
  auto gens = translation_generators(field);
  if (h > 1) gens.push_back(field_scaling(field, field.pow(field.primitive(), (field.size() - 1) / h)));
  PermGroup g(static_cast<unsigned>(field.size()), std::move(gens), element_cap);
  if (g.order() != field.size() * h)
    throw internal_error("Frobenius subgroup order is not p^m * h");
  return g;
}

std::vector<std::uint32_t> translation_subgroup(const PermGroup& g) {
  std::vector<std::uint32_t> seeds;
  for (const auto& gen : g.generators())
    if (gen[0] != 0) seeds.push_back(g.index_of(gen));  // scalings fix 0, translations do not
  return g.closure_of(seeds);
}

PermGroup g_pqn(std::uint64_t p, std::uint64_t q, unsigned n, std::size_t element_cap) {
  if (!is_prime(p)) throw domain_error("g_pqn requires p prime");
  if (!is_prime(q) || q % 2 == 0) throw domain_error("g_pqn requires q an odd prime");
  if (q == p) throw domain_error("g_pqn requires q != p");
  if ((p + 1) % q != 0) throw domain_error("g_pqn requires q | p+1");

  PermGroup g = frobenius_subgroup(static_cast<unsigned>(p), 2, q, element_cap);
  for (unsigned i = 0; i < n; ++i) g = direct_product(g, cyclic_group(q), element_cap);

  const std::uint64_t expected = p * p * checked_pow(q, n + 1);
  if (g.order() != expected) throw internal_error("G_{p,q}^n order mismatch");
  return g;
}

std::string to_string(WitnessStyle s) {
  return s == WitnessStyle::minimal ? "minimal" : "full_agl";
}

std::string to_string(CertStatus s) {
  return s == CertStatus::oracle_verified ? "oracle_verified" : "certificate_only";
}

namespace {

struct Case1Choice {
  std::uint64_t p1, p2;
  unsigned n1, n2;
  std::uint64_t a;
  unsigned r;
};

Case1Choice pick_case1(const PrimePower& lhs, const PrimePower& rhs) {
  std::optional<Case1Choice> best;
  BigInt best_order;
  for (const auto& [kernel, complement] :
       {std::pair{lhs, rhs}, std::pair{rhs, lhs}}) {
    const std::uint64_t modulus = checked_pow(complement.prime, complement.exponent);
    const std::uint64_t a = mult_order(kernel.prime, modulus);
    if (kernel.exponent % a == 0) continue;  // this orientation cannot carry the obstruction
    const unsigned r = static_cast<unsigned>(kernel.exponent / a) + 1;
    BigInt order = pow(BigInt(kernel.prime), static_cast<unsigned>(r * a)) * modulus;
    const bool better =
        !best || order < best_order || (order == best_order && kernel.prime < best->p1);
    if (better) {
      best = Case1Choice{kernel.prime, complement.prime, kernel.exponent, complement.exponent,
                         a, r};
      best_order = std::move(order);
    }
  }
  if (!best)
    throw internal_error("both case-1 orientations satisfy a | n1; impossible for d = p^a q^b");
  return *best;
}

}  // namespace

ConstructionCert construct_witness(std::uint64_t d, const OracleOptions& opts,
                                    WitnessStyle style, bool run_oracle) {
  if (d < 2) throw domain_error("construct requires d >= 2");
  ConstructionCert cert;
  cert.d = factorize(d);
  cert.style = style;
  if (cert.d.parts.size() < 2)
    throw domain_error(std::to_string(d) +
                       " is a prime power; every group of order divisible by it has a subgroup "
                       "of that order");

  // Case 2 of the induction strips the largest prime power until two remain.
  std::vector<PrimePower> remaining = cert.d.parts;
  while (remaining.size() > 2) {
    const PrimePower stripped = remaining.back();
    remaining.pop_back();
    TraceStep step;
    step.kind = TraceStep::Kind::case2;
    step.stripped_prime = stripped.prime;
    step.stripped_exponent = stripped.exponent;
    cert.trace.push_back(step);
  }

  const Case1Choice choice = pick_case1(remaining[0], remaining[1]);
  TraceStep core;
  core.kind = TraceStep::Kind::case1;
  core.p1 = choice.p1;
  core.p2 = choice.p2;
  core.n1 = choice.n1;
  core.n2 = choice.n2;
  core.a = choice.a;
  core.r = choice.r;
  cert.trace.push_back(core);

  const std::uint64_t ra = static_cast<std::uint64_t>(choice.r) * choice.a;
  const std::uint64_t complement_order = checked_pow(choice.p2, choice.n2);

  // Exact group order, in factored form so huge witnesses stay representable.
  std::vector<PrimePower> order_parts;
  std::string core_desc;
  std::uint64_t field_size = 0;  // p1^{ra} when it fits u64, else 0
  {
    std::uint64_t fs = 1;
    bool fits = true;
    for (std::uint64_t i = 0; i < ra && fits; ++i) {
      if (fs > UINT64_MAX / choice.p1)
        fits = false;
      else
        fs *= choice.p1;
    }
    field_size = fits ? fs : 0;
  }
  if (style == WitnessStyle::minimal) {
    order_parts.push_back({choice.p1, static_cast<unsigned>(ra)});
    order_parts.push_back({choice.p2, choice.n2});
    core_desc = "C_" + std::to_string(choice.p1) + "^" + std::to_string(ra) + " ⋊ C_" +
                std::to_string(complement_order);
  } else {
    if (field_size == 0 || field_size > kDefaultFieldCap)
      throw resource_error("full AGL witness needs the field GF(" + std::to_string(choice.p1) +
                           "^" + std::to_string(ra) + "), beyond the field cap");
    for (const auto& pp : factorize(field_size * (field_size - 1)).parts) order_parts.push_back(pp);
    core_desc = "AGL(1," + std::to_string(field_size) + ")";
  }
  for (const auto& step : cert.trace)
    if (step.kind == TraceStep::Kind::case2)
      order_parts.push_back({step.stripped_prime, step.stripped_exponent});
  cert.group_order = factorization_from_parts(std::move(order_parts));

  const bool wrap_core = cert.trace.size() > 1 && style == WitnessStyle::minimal;
  cert.description = wrap_core ? "(" + core_desc + ")" : core_desc;
  for (auto it = cert.trace.rbegin(); it != cert.trace.rend(); ++it)
    if (it->kind == TraceStep::Kind::case2)
      cert.description +=
          " × C_" + std::to_string(checked_pow(it->stripped_prime, it->stripped_exponent));

  check_trace_invariants(cert);

  const std::size_t cap = std::min(opts.order_cap, kOracleIndexCap);
  if (run_oracle && cert.group_order.value != 0 && cert.group_order.value <= cap) {
    PermGroup witness =
        style == WitnessStyle::minimal
            ? frobenius_subgroup(static_cast<unsigned>(choice.p1), static_cast<unsigned>(ra),
                                 complement_order)
            : agl1(static_cast<unsigned>(choice.p1), static_cast<unsigned>(ra));
    for (auto it = cert.trace.rbegin(); it != cert.trace.rend(); ++it)
      if (it->kind == TraceStep::Kind::case2)
        witness = direct_product(
            witness, cyclic_group(checked_pow(it->stripped_prime, it->stripped_exponent)));
    if (witness.order() != cert.group_order.value)
      throw internal_error("constructed witness order disagrees with the certificate");

    SpectrumReport report = spectrum(witness, opts);
    cert.missing_order_confirmed =
        std::binary_search(report.missing_orders.begin(), report.missing_orders.end(), d);
    if (!cert.missing_order_confirmed)
      throw internal_error("oracle found a subgroup of order " + std::to_string(d) +
                           " in the witness");
    cert.verified = CertStatus::oracle_verified;
    cert.spectrum = std::move(report);
    cert.group = std::move(witness);
  }
  return cert;
}

void check_trace_invariants(const ConstructionCert& cert) {
  if (cert.trace.empty()) throw internal_error("certificate has an empty trace");
  if (cert.trace.back().kind != TraceStep::Kind::case1)
    throw internal_error("trace must end in a case-1 step");
  for (std::size_t i = 0; i + 1 < cert.trace.size(); ++i)
    if (cert.trace[i].kind != TraceStep::Kind::case2)
      throw internal_error("only the final trace step may be case 1");

  const TraceStep& core = cert.trace.back();
  const std::uint64_t modulus = checked_pow(core.p2, core.n2);
  if (core.a != mult_order(core.p1, modulus))
    throw internal_error("trace records a wrong multiplicative order");
  if (core.n1 % core.a == 0) throw internal_error("a divides n1: the obstruction vanishes");
  const std::uint64_t ra = static_cast<std::uint64_t>(core.r) * core.a;
  if (!((core.r - 1) * core.a < core.n1 && core.n1 < ra))
    throw internal_error("r does not satisfy (r-1)a < n1 < ra");
  if (mod_pow(core.p1 % modulus, ra, modulus) != 1 % modulus)
    throw internal_error("p2^n2 does not divide p1^{ra} - 1");

  if (!cert.d.divides(cert.group_order))
    throw internal_error("d does not divide the witness order");
  if (cert.style == WitnessStyle::minimal && !cert.d.same_primes(cert.group_order))
    throw internal_error("pi(G) != pi(d) for the minimal witness");
  if (cert.style == WitnessStyle::full_agl) {
    auto gp = cert.group_order.primes();
    for (std::uint64_t p : cert.d.primes())
      if (std::find(gp.begin(), gp.end(), p) == gp.end())
        throw internal_error("pi(d) is not contained in pi(G)");
  }
}

void recheck_certificate(const ConstructionCert& cert, const OracleOptions& opts) {
  check_trace_invariants(cert);
  const ConstructionCert fresh = construct_witness(cert.d.value, opts, cert.style, true);
  auto mismatch = [](const std::string& what) {
    throw domain_error("certificate mismatch: " + what);
  };
  if (fresh.d != cert.d) mismatch("factorization of d");
  if (fresh.description != cert.description) mismatch("description");
  if (fresh.group_order != cert.group_order) mismatch("group order");
  if (fresh.trace.size() != cert.trace.size()) mismatch("trace length");
  for (std::size_t i = 0; i < fresh.trace.size(); ++i) {
    const TraceStep &a = fresh.trace[i], &b = cert.trace[i];
    if (a.kind != b.kind || a.p1 != b.p1 || a.p2 != b.p2 || a.n1 != b.n1 || a.n2 != b.n2 ||
        a.a != b.a || a.r != b.r || a.stripped_prime != b.stripped_prime ||
        a.stripped_exponent != b.stripped_exponent)
      mismatch("trace step " + std::to_string(i));
  }
  if (fresh.verified != cert.verified) mismatch("verification status");
}

}  // namespace clt
