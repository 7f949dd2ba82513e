#include "pvf/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>

#include "pvf/affine.hpp"
#include "pvf/format.hpp"
#include "pvf/frames.hpp"
#include "pvf/morphism.hpp"
#include "pvf/random.hpp"

namespace pvf::verify {

namespace {

struct Context {
  Generator& gen;
  const Config& config;
  const Ops& ops;

  std::size_t dim(std::size_t lo = 1) {
    return static_cast<std::size_t>(gen.integer(static_cast<long>(lo),
                                                static_cast<long>(std::max(lo, config.max_dimension))));
  }
  VectorField field(std::size_t n) { return gen.field(n, config.max_degree); }
  Poly poly(std::size_t n) { return gen.poly(n, config.max_degree, 4); }
  AutWord word(std::size_t n) { return gen.word(n, config.max_letters, config.elementary_degree); }
  // Smaller words where the property composes several pullbacks.
  AutWord short_word(std::size_t n) {
    return gen.word(n, std::max<std::size_t>(1, config.max_letters / 2), config.elementary_degree);
  }
};

// Empty string means the case passed.
using Check = std::function<std::string(Context&)>;

struct Family {
  std::string name;
  std::size_t default_cases;
  Check check;
};

std::string expect(bool ok, std::string_view what) { return ok ? std::string() : std::string(what); }

Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }
Poly one(std::size_t n) { return Poly::constant(n, 1); }
VectorField field_of(std::vector<Poly> c) { return VectorField(std::move(c)); }

std::vector<std::vector<VectorField>> curated_darboux_families() {
  std::vector<std::vector<VectorField>> out;
  const Poly x = var(2, 0), y = var(2, 1), o2 = one(2), z2 = Poly(2);
  out.push_back({field_of({o2, z2}), field_of({z2, o2})});
  out.push_back({field_of({x, z2}), field_of({z2, y})});
  out.push_back({field_of({o2, z2}), field_of({y, z2})});
  out.push_back({field_of({x, z2}), field_of({z2, o2})});
  out.push_back({field_of({x, y}), field_of({-y, x})});
  out.push_back({field_of({x + o2, z2}), field_of({z2, o2})});
  out.push_back({field_of({o2, z2}), field_of({Rational(-2) * y, o2})});
  const Poly a = var(3, 0), b = var(3, 1), c = var(3, 2), o3 = one(3), z3 = Poly(3);
  out.push_back({field_of({o3, z3, z3}), field_of({z3, o3, z3}), field_of({z3, z3, o3})});
  out.push_back({field_of({a, z3, z3}), field_of({z3, b, z3}), field_of({z3, z3, c})});
  out.push_back({field_of({o3, z3, z3}), field_of({z3, o3, z3}), field_of({z3, z3, c})});
  return out;
}

struct NoDarbouxPair {
  VectorField first;
  VectorField second;
  Poly darboux;
};

std::vector<NoDarbouxPair> curated_no_darboux_pairs() {
  const Poly x = var(2, 0), y = var(2, 1), o2 = one(2), z2 = Poly(2);
  const Poly a = var(3, 0), b = var(3, 1), c = var(3, 2), o3 = one(3), z3 = Poly(3);
  return {
      {field_of({o2, z2}), field_of({y, z2}), y},
      {field_of({o2, z2}), field_of({y * y, z2}), y},
      {field_of({y, z2}), field_of({y * y, z2}), y},
      {field_of({z2, o2}), field_of({z2, x}), x},
      {field_of({c, z3, z3}), field_of({b, z3, z3}), b},
      {field_of({z3, z3, o3}), field_of({z3, z3, a + b}), a + b},
  };
}

std::vector<Family> make_families() {
  std::vector<Family> f;

  // --- poly ---
  f.push_back({"ring-axioms", 100, [](Context& ctx) {
                 const auto n = ctx.dim();
                 const Poly p = ctx.poly(n), q = ctx.poly(n), r = ctx.poly(n);
                 if ((p + q) + r != p + (q + r)) return std::string("addition not associative");
                 if ((p * q) * r != p * (q * r)) return std::string("multiplication not associative");
                 if (p * (q + r) != p * q + p * r) return std::string("not distributive");
                 return expect((p * Poly(n)).is_zero(), "zero is not absorbing");
               }});
  f.push_back({"leibniz", 100, [](Context& ctx) {
                 const auto n = ctx.dim();
                 const Poly p = ctx.poly(n), q = ctx.poly(n);
                 for (std::size_t i = 0; i < n; ++i) {
                   if (partial_derive(p * q, i) != p * partial_derive(q, i) + q * partial_derive(p, i)) {
                     return std::string("Leibniz rule fails");
                   }
                 }
                 return std::string();
               }});
  f.push_back({"mixed-partials", 100, [](Context& ctx) {
                 const auto n = ctx.dim();
                 const Poly p = ctx.poly(n);
                 for (std::size_t i = 0; i < n; ++i) {
                   for (std::size_t j = 0; j < n; ++j) {
                     if (partial_derive(partial_derive(p, i), j) != partial_derive(partial_derive(p, j), i)) {
                       return std::string("mixed partials differ");
                     }
                   }
                 }
                 return std::string();
               }});
  f.push_back({"compose-functorial", 60, [](Context& ctx) {
                 const auto n = ctx.dim();
                 const Poly p = ctx.gen.poly(n, 2, 3);
                 std::vector<Poly> m, m2;
                 for (std::size_t i = 0; i < n; ++i) {
                   m.push_back(ctx.gen.poly(n, 2, 3));
                   m2.push_back(ctx.gen.poly(n, 2, 3));
                 }
                 // (m o m2)(x) = m(m2(x)).
                 const auto inner_then_outer = compose_maps(PolyMap(m2), PolyMap(m));
                 return expect(compose(compose(p, m), m2) == compose(p, inner_then_outer.components()),
                               "composition is not functorial");
               }});
  f.push_back({"divides", 100, [](Context& ctx) {
                 const auto n = ctx.dim();
                 Poly d = ctx.gen.poly(n, 2, 3);
                 if (d.is_zero()) d = one(n);
                 const Poly q = ctx.poly(n);
                 const auto found = divides(d, q * d);
                 if (!found || *found != q) return std::string("exact quotient not found");
                 if (!d.is_constant() && divides(d, q * d + one(n))) {
                   return std::string("divisibility claimed for a nonzero remainder");
                 }
                 return std::string();
               }});
  f.push_back({"potential", 100, [](Context& ctx) {
                 const auto n = ctx.dim();
                 const Poly p = ctx.poly(n);
                 std::vector<Poly> grad;
                 for (std::size_t i = 0; i < n; ++i) grad.push_back(partial_derive(p, i));
                 const Poly expected = p - Poly::constant(n, p.coefficient(Monomial(n)));
                 return expect(potential_of_closed_form(grad) == expected, "potential mismatch");
               }});

  // --- vecfield ---
  f.push_back({"antisymmetry", 100, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto d = ctx.field(n), e = ctx.field(n);
                 return expect(ctx.ops.bracket(d, e) == -ctx.ops.bracket(e, d), "bracket not antisymmetric");
               }});
  f.push_back({"jacobi", 100, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto d = ctx.field(n), e = ctx.field(n), m = ctx.field(n);
                 const auto& br = ctx.ops.bracket;
                 const auto sum = br(d, br(e, m)) + br(e, br(m, d)) + br(m, br(d, e));
                 return expect(sum.is_zero(), "Jacobi identity fails");
               }});
  f.push_back({"derivation", 100, [](Context& ctx) {
                 const auto n = ctx.dim();
                 const auto d = ctx.field(n);
                 const Poly p = ctx.poly(n), q = ctx.poly(n);
                 return expect(apply(d, p * q) == p * apply(d, q) + q * apply(d, p),
                               "apply is not a derivation");
               }});
  f.push_back({"bracket-divergence", 100, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto d = ctx.field(n), e = ctx.field(n);
                 return expect(divergence(ctx.ops.bracket(d, e)) ==
                                   apply(d, divergence(e)) - apply(e, divergence(d)),
                               "Div[d,e] != d(Div e) - e(Div d)");
               }});
  f.push_back({"subalgebra-closure", 60, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto d = ctx.gen.constant_divergence_field(n, 2, ctx.gen.integer(-3, 3));
                 const auto e = ctx.gen.constant_divergence_field(n, 2, ctx.gen.integer(-3, 3));
                 if (!has_constant_divergence(d) || !has_constant_divergence(e)) {
                   return std::string("generator produced a non-constant divergence");
                 }
                 return expect(is_divergence_free(ctx.ops.bracket(d, e)),
                               "bracket of VF^c fields is not divergence free");
               }});
  f.push_back({"module-rank", 40, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto phi = materialize(ctx.short_word(n));
                 const auto d = pullback(phi, VectorField::coordinate(n, 0));
                 const auto m = pullback(phi, VectorField::coordinate(n, 1));
                 const Poly p = ctx.gen.poly(n, 2, 3);
                 return expect(ctx.ops.bracket(d, p * m) == apply(d, p) * m,
                               "[d, f m] != d(f) m for commuting d, m");
               }});
  f.push_back({"euler-grading", 100, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const int d = static_cast<int>(ctx.gen.integer(-1, 5));
                 const auto delta = ctx.gen.homogeneous_field(n, d);
                 return expect(ctx.ops.bracket(euler_field(n), delta) == delta * Rational(d),
                               "[E, delta] != d delta");
               }});
  f.push_back({"lie-grading", 100, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const int d = static_cast<int>(ctx.gen.integer(-1, 3));
                 const int e = static_cast<int>(ctx.gen.integer(-1, 3));
                 const auto br = ctx.ops.bracket(ctx.gen.homogeneous_field(n, d), ctx.gen.homogeneous_field(n, e));
                 if (br.is_zero()) return std::string();
                 return expect(homogeneous_degree(br) == d + e, "bracket degree is not additive");
               }});
  f.push_back({"graded-sum", 100, [](Context& ctx) {
                 const auto n = ctx.dim();
                 const auto delta = ctx.field(n);
                 VectorField sum(n);
                 for (int d = -1; d < static_cast<int>(ctx.config.max_degree); ++d) {
                   sum += graded_component(delta, d);
                 }
                 return expect(sum == delta, "graded components do not sum to the field");
               }});

  // --- morphism ---
  f.push_back({"pullback-contract", 50, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto phi = materialize(ctx.word(n));
                 const auto delta = ctx.field(n);
                 const auto lhs = jacobian(phi) * pullback(phi, delta).components();
                 return expect(lhs == compose(delta, phi.components()).components(),
                               "Jac(phi) phi^*(delta) != delta o phi");
               }});
  f.push_back({"lie-homomorphism", 40, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto phi = materialize(ctx.word(n));
                 const auto d = ctx.field(n), e = ctx.field(n);
                 return expect(pullback(phi, ctx.ops.bracket(d, e)) ==
                                   ctx.ops.bracket(pullback(phi, d), pullback(phi, e)),
                               "pullback is not a Lie homomorphism");
               }});
  f.push_back({"functoriality", 30, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto phi = materialize(ctx.short_word(n));
                 const auto eta = materialize(ctx.short_word(n));
                 const auto delta = ctx.field(n);
                 return expect(pullback(phi, pullback(eta, delta)) ==
                                   pullback(compose_maps(phi, eta), delta),
                               "(eta o phi)^* != phi^* eta^*");
               }});
  f.push_back({"ad-action", 30, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto w1 = ctx.short_word(n), w2 = ctx.short_word(n);
                 const auto delta = ctx.field(n);
                 return expect(ad_action(w1 * w2, delta) == ad_action(w1, ad_action(w2, delta)),
                               "Ad is not a group action");
               }});
  f.push_back({"divergence-invariance", 50, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto eta = materialize(ctx.word(n));
                 const auto delta = ctx.field(n);
                 if (divergence(pullback(eta, delta)) != compose(divergence(delta), eta.components())) {
                   return std::string("Div eta^*(delta) != eta^*(Div delta)");
                 }
                 const Rational c = ctx.gen.integer(-3, 3);
                 const auto cd = ctx.gen.constant_divergence_field(n, 2, c);
                 return expect(divergence(pullback(eta, cd)) == Poly::constant(n, c),
                               "constant divergence not preserved");
               }});
  f.push_back({"dual-functions", 50, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto phi = materialize(ctx.word(n));
                 for (std::size_t j = 0; j < n; ++j) {
                   const auto xi = pullback(phi, VectorField::coordinate(n, j));
                   for (std::size_t k = 0; k < n; ++k) {
                     if (apply(xi, phi[k]) != Poly::constant(n, j == k ? 1 : 0)) {
                       return std::string("phi^*(d_j)(f_k) != delta_jk");
                     }
                   }
                 }
                 return std::string();
               }});
  f.push_back({"trace-adjugate", 60, [](Context& ctx) {
                 const auto size = static_cast<std::size_t>(ctx.gen.integer(2, 4));
                 const auto a = ctx.gen.poly_matrix(size, 2, 3, 2);
                 return expect(trace_adjugate_check(a, 0).holds, "tr(A' Adj A) != (det A)'");
               }});

  // --- frames ---
  f.push_back({"frame-roundtrip", 30, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto phi = materialize(ctx.word(n));
                 std::vector<VectorField> xs;
                 for (std::size_t i = 0; i < n; ++i) xs.push_back(pullback(phi, VectorField::coordinate(n, i)));
                 const auto report = equivalence_report(Frame::make(xs));
                 if (!report.condition_ii) return std::string("condition (ii) fails on a pullback frame");
                 for (std::size_t i = 0; i < n; ++i) {
                   for (std::size_t j = 0; j < n; ++j) {
                     if (apply(xs[i], (*report.flat_coordinates)[j]) != Poly::constant(n, i == j ? 1 : 0)) {
                       return std::string("xi_i(f_j) != delta_ij");
                     }
                   }
                   const Poly diff = (*report.reconstructed_map)[i] - phi[i];
                   if (!diff.is_constant()) return std::string("reconstructed map differs beyond constants");
                 }
                 return std::string();
               }});
  f.push_back({"darboux-agreement", 14, [](Context& ctx) {
                 static const auto curated = curated_darboux_families();
                 static const std::vector<Rational> grid = {0, 1, -1};
                 std::vector<VectorField> xs;
                 const auto pick = static_cast<std::size_t>(ctx.gen.integer(0, static_cast<long>(curated.size())));
                 if (pick < curated.size()) {
                   xs = curated[pick];
                 } else {
                   const auto phi = materialize(ctx.gen.word(2, 3, 2));
                   for (std::size_t i = 0; i < 2; ++i) xs.push_back(pullback(phi, VectorField::coordinate(2, i)));
                 }
                 const auto decided = darboux_decide(xs);
                 const auto found = darboux_oracle(xs, 2, grid);
                 if (decided.has_value() != found.has_value()) return std::string("decision and oracle disagree");
                 if (decided && !is_common_darboux(xs, *decided)) return std::string("invalid decided witness");
                 if (found && !is_common_darboux(xs, *found)) return std::string("invalid oracle witness");
                 return std::string();
               }});
  f.push_back({"full-module", 30, [](Context& ctx) {
                 const auto n = ctx.dim(2);
                 const auto phi = materialize(ctx.word(n));
                 std::vector<VectorField> xs;
                 for (std::size_t i = 0; i < n; ++i) xs.push_back(pullback(phi, VectorField::coordinate(n, i)));
                 const auto fr = Frame::make(xs);
                 if (module_rank(fr.fields()) != static_cast<int>(n)) return std::string("module rank below n");
                 const auto coeffs = coordinate_fields_in_frame(fr);
                 for (std::size_t i = 0; i < n; ++i) {
                   VectorField combo(n);
                   for (std::size_t k = 0; k < n; ++k) combo += coeffs(i, k) * xs[k];
                   if (combo != VectorField::coordinate(n, i)) return std::string("d_i is not in the span");
                 }
                 return std::string();
               }});
  f.push_back({"no-darboux-rank", 6, [](Context& ctx) {
                 static const auto pairs = curated_no_darboux_pairs();
                 const auto& pair = pairs[static_cast<std::size_t>(ctx.gen.integer(0, static_cast<long>(pairs.size()) - 1))];
                 const std::vector<VectorField> xs = {pair.first, pair.second};
                 if (!ctx.ops.bracket(pair.first, pair.second).is_zero()) return std::string("pair does not commute");
                 if (!is_divergence_free(pair.first) || !is_divergence_free(pair.second)) {
                   return std::string("pair is not divergence free");
                 }
                 if (!is_common_darboux(xs, pair.darboux)) return std::string("Darboux polynomial invalid");
                 for (const auto& xi : xs) {
                   if (!std::holds_alternative<Nilpotent>(nilpotence_probe(xi, 16))) {
                     return std::string("nilpotence not verified");
                   }
                 }
                 return expect(module_rank(xs) <= 1, "module rank exceeds 1");
               }});

  // --- affine ---
  f.push_back({"embed-bracket", 100, [](Context& ctx) {
                 const auto n = ctx.dim(1);
                 const auto u = ctx.gen.aff_element(n), v = ctx.gen.aff_element(n);
                 if (extract_affine(embed(u)) != u) return std::string("embed is not injective");
                 return expect(embed(aff_bracket(u, v)) == ctx.ops.bracket(embed(u), embed(v)),
                               "embed is not bracket compatible");
               }});
  f.push_back({"aff-jacobi", 60, [](Context& ctx) {
                 const auto n = ctx.dim(1);
                 const auto u = ctx.gen.aff_element(n), v = ctx.gen.aff_element(n),
                            w = ctx.gen.aff_element(n);
                 const auto uv = aff_bracket(u, v), vu = aff_bracket(v, u);
                 if (uv.translation != -vu.translation || uv.linear != Rational(-1) * vu.linear) {
                   return std::string("aff bracket not antisymmetric");
                 }
                 const auto a = aff_bracket(u, aff_bracket(v, w));
                 const auto b = aff_bracket(v, aff_bracket(w, u));
                 const auto c = aff_bracket(w, aff_bracket(u, v));
                 const bool zero = (a.translation + b.translation + c.translation) == RationalVector(n) &&
                                   (a.linear + b.linear + c.linear).is_zero();
                 return expect(zero, "aff bracket violates Jacobi");
               }});
  f.push_back({"radical-filtration", 60, [](Context& ctx) {
                 const auto n = ctx.dim(1);
                 const AffElement s{ctx.gen.vector(n, 3), RationalMatrix(n, n)};
                 const AffElement t{ctx.gen.vector(n, 3), RationalMatrix(n, n)};
                 AffElement lin = ctx.gen.aff_element(n);
                 lin.translation = RationalVector(n);
                 const auto st = aff_bracket(s, t);
                 if (st.translation != RationalVector(n) || !st.linear.is_zero()) {
                   return std::string("translations do not commute");
                 }
                 return expect(aff_bracket(lin, s).linear.is_zero(), "[linear, translation] not a translation");
               }});
  f.push_back({"coboundary-roundtrip", 60, [](Context& ctx) {
                 const auto n = static_cast<std::size_t>(ctx.gen.integer(2, 4));
                 const auto v = ctx.gen.vector(n, 2);
                 const auto l = SlLinearMap::coboundary(v);
                 if (!cocycle_check(l).is_cocycle) return std::string("coboundary rejected as cocycle");
                 return expect(coboundary_solve(l) == v, "coboundary not recovered");
               }});
  f.push_back({"adjoint-formula", 40, [](Context& ctx) {
                 const auto n = ctx.dim(1);
                 const auto g = ctx.gen.invertible_matrix(n, 2);
                 const auto u = ctx.gen.aff_element(n);
                 const AutWord w(n, {AffineLetter{g, RationalVector(n)}});
                 const AffElement expected{g * u.translation, g * u.linear * *inverse(g)};
                 return expect(ad_action(w, embed(u)) == embed(expected), "Ad(g)(a, A) != (g a, g A g^-1)");
               }});
  return f;
}

const std::vector<Family>& families() {
  static const std::vector<Family> all = make_families();
  return all;
}

std::uint64_t family_seed(std::uint64_t seed, std::string_view name) {
  // FNV-1a over the name, mixed with the run seed.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

}  // namespace

bool Summary::ok() const noexcept {
  return std::all_of(families.begin(), families.end(), [](const FamilyResult& r) { return r.ok(); });
}

std::vector<std::string> family_names() {
  std::vector<std::string> names;
  for (const auto& f : families()) names.push_back(f.name);
  return names;
}

Summary run(const Config& config, const Ops& ops) {
  for (const auto& name : config.only) {
    const auto& all = families();
    if (std::none_of(all.begin(), all.end(), [&](const Family& f) { return f.name == name; })) {
      throw std::invalid_argument("unknown property family: " + name);
    }
  }
  Summary summary;
  for (const auto& family : families()) {
    if (!config.only.empty() &&
        std::find(config.only.begin(), config.only.end(), family.name) == config.only.end()) {
      continue;
    }
    Generator gen(family_seed(config.seed, family.name));
    Context ctx{gen, config, ops};
    FamilyResult result{family.name, config.cases.value_or(family.default_cases), 0, std::nullopt};
    for (std::size_t k = 0; k < result.cases; ++k) {
      std::string why;
      try {
        why = family.check(ctx);
      } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
      }
      if (why.empty()) {
        ++result.passed;
      } else if (!result.failure) {
        result.failure = "case " + std::to_string(k) + ": " + why;
      }
    }
    summary.families.push_back(std::move(result));
  }
  return summary;
}

}  // namespace pvf::verify
