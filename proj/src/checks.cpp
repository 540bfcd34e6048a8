#include "qgrass/checks.hpp"

#include "qgrass/autos.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>

namespace qgrass {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxWitnesses = 10;

struct Skip {
  std::string reason;
};

class Ctx {
 public:
  Ctx(GrassShape shape, const CheckOptions& options, CheckReport& report)
      : shape(shape),
        options(options),
        relations(options.mutate ? RelationConstants::mutated() : RelationConstants::standard()),
        rng(options.seed),
        report_(report) {}

  void require(bool cond, const std::string& reason) const {
    if (!cond) throw Skip{reason};
  }
  void require_automorphism_range() const {
    require(shape.k >= 2, "requires k > 1");
    require(2 * shape.k <= shape.n, "requires 2k <= n");
  }
  void require_base() const { require(shape.p() >= 1, "requires n > k"); }

  // Records a failed expectation; returns cond.
  bool expect(bool cond, const std::function<std::string()>& witness) {
    if (!cond) {
      report_.status = CheckStatus::fail;
      if (report_.witnesses.size() < kMaxWitnesses) report_.witnesses.push_back(witness());
    }
    return cond;
  }
  void detail(std::string s) { report_.details.push_back(std::move(s)); }

  GrassShape shape;
  const CheckOptions& options;
  RelationConstants relations;
  std::mt19937 rng;

 private:
  CheckReport& report_;
};

QScalar random_unit(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 7), den(1, 5), sgn(0, 1), qe(-2, 2);
  QScalar r = QScalar::rational(num(rng), den(rng)) * QScalar::q_pow(qe(rng));
  return sgn(rng) ? -r : r;
}

H1Element random_h1(std::mt19937& rng, GrassShape s) {
  H1Element f = H1Element::identity(s);
  f.alpha0 = random_unit(rng);
  for (auto& x : f.alpha) x = random_unit(rng);
  for (auto& x : f.beta) x = random_unit(rng);
  return f;
}

std::vector<GenIndex> random_word(std::mt19937& rng, AlgebraShape s, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), row(1, s.m), col(1, s.n);
  std::vector<GenIndex> w(len(rng));
  for (auto& g : w) g = {row(rng), col(rng)};
  return w;
}

std::string word_string(const std::vector<GenIndex>& w) {
  std::string s;
  for (const auto& g : w) s += "x[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
  return s.empty() ? "1" : s;
}

std::vector<Monomial> monomials_up_to(AlgebraShape s, int max_deg) {
  std::vector<Monomial> out;
  Monomial cur{std::vector<std::uint16_t>(s.generator_count(), 0)};
  std::function<void(int, int)> rec = [&](int g, int left) {
    if (g == s.generator_count()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.exps[g] = static_cast<std::uint16_t>(e);
      rec(g + 1, left - e);
    }
    cur.exps[g] = 0;
  };
  rec(0, max_deg);
  return out;
}

MinorIndex extreme_minor(GrassShape s) {
  MinorIndex mi;
  for (int a = 1; a <= s.k; ++a) {
    mi.rows.push_back(a);
    mi.cols.push_back(s.p() - s.k + a);
  }
  return mi;
}

std::vector<AutoSpec> constructed_specs(GrassShape s, std::mt19937& rng) {
  std::vector<AutoSpec> out{AutoSpec::identity(s)};
  for (int t = 0; t < 2; ++t) out.push_back({h1_canonicalize(random_h1(rng, s)), false});
  if (s.n == 2 * s.k) {
    out.push_back({h1_canonicalize(H1Element::identity(s)), true});
    out.push_back({h1_canonicalize(random_h1(rng, s)), true});
  }
  return out;
}

std::string spec_string(const AutoSpec& a) {
  return a.torus.value.to_string() + (a.diagram ? " then tau" : "");
}

// ---------------------------------------------------------------- checks

void pbw_confluence(Ctx& c) {
  c.require_base();
  const QMatrixAlgebra alg({c.shape.k, c.shape.p()}, c.relations);
  const int trials = 200;
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    const auto a = random_word(c.rng, alg.shape(), 4), b = random_word(c.rng, alg.shape(), 4),
               d = random_word(c.rng, alg.shape(), 4);
    const NCPoly pa = alg.word_normal_form(a), pb = alg.word_normal_form(b), pd = alg.word_normal_form(d);
    const NCPoly left = alg.mul(alg.mul(pa, pb), pd);
    const NCPoly right = alg.mul(pa, alg.mul(pb, pd));
    std::vector<GenIndex> all = a;
    all.insert(all.end(), b.begin(), b.end());
    all.insert(all.end(), d.begin(), d.end());
    const NCPoly flat = alg.word_normal_form(all);
    if (!c.expect(left == right && left == flat,
                  [&] { return "(" + word_string(a) + ")(" + word_string(b) + ")(" + word_string(d) + ")"; }))
      ++bad;
  }
  c.detail("O_q(M(" + std::to_string(c.shape.k) + "," + std::to_string(c.shape.p()) + ")): " +
           std::to_string(trials - bad) + "/" + std::to_string(trials) + " word triples agree");
}

void dq_central(Ctx& c) {
  c.require_base();
  c.require(c.shape.k == c.shape.p(), "requires 2k = n (square base algebra)");
  const QMatrixAlgebra alg({c.shape.k, c.shape.k}, c.relations);
  const NCPoly d = alg.quantum_determinant();
  for (int i = 1; i <= c.shape.k; ++i)
    for (int j = 1; j <= c.shape.k; ++j) {
      const NCPoly x = alg.gen(i, j);
      c.expect(alg.mul(d, x) == alg.mul(x, d), [&] { return "D_q does not commute with x[" + std::to_string(i) + "," + std::to_string(j) + "]"; });
    }
  c.detail("checked against " + std::to_string(c.shape.k * c.shape.k) + " generators");
}

void how_u_commutes(Ctx& c) {
  const Grassmannian g(c.shape, c.relations);
  const PluckerIndex u = u_index(c.shape);
  for (const auto& i : g.coordinates()) {
    const NCPoly lhs = g.embed(PluckerWord{u, i});
    const NCPoly rhs = QScalar::q_pow(d_value(i, c.shape)) * g.embed(PluckerWord{i, u});
    c.expect(lhs == rhs, [&] { return "[u]" + i.to_string() + " != q^" + std::to_string(d_value(i, c.shape)) + " " + i.to_string() + "[u]"; });
  }
  c.detail(std::to_string(g.coordinates().size()) + " coordinates");
}

void to_and_fro(Ctx& c) {
  c.require_base();
  const Grassmannian g(c.shape, c.relations);
  const TAlgebra t(c.shape, c.relations);
  for (const auto& l : g.coordinates()) {
    const MinorFactor f = plucker_to_minor(l, c.shape);
    c.expect(minor_to_plucker(f.minor, c.shape).index == l, [&] { return "round trip fails at " + l.to_string(); });
    const TElement img = t.mul(t.minor(f.minor), t.y(f.ypow));
    c.expect(g.equal(dehom_backward(img, c.shape), LocalizedElement::letter(c.shape, l)),
             [&] { return l.to_string() + " != " + f.minor.to_string() + "[u] after embedding"; });
  }
  // Every minor of the base, including the empty one.
  long minors = 0;
  const int k = c.shape.k, p = c.shape.p();
  for (unsigned rm = 0; rm < (1u << k); ++rm)
    for (unsigned cm = 0; cm < (1u << p); ++cm) {
      if (std::popcount(rm) != std::popcount(cm)) continue;
      MinorIndex mi;
      for (int a = 0; a < k; ++a)
        if (rm & (1u << a)) mi.rows.push_back(a + 1);
      for (int b = 0; b < p; ++b)
        if (cm & (1u << b)) mi.cols.push_back(b + 1);
      const PluckerFactor f = minor_to_plucker(mi, c.shape);
      c.expect(plucker_to_minor(f.index, c.shape).minor == mi, [&] { return "round trip fails at " + mi.to_string(); });
      ++minors;
    }
  c.detail(std::to_string(g.coordinates().size()) + " coordinates and " + std::to_string(minors) + " minors");
}

void belonging(Ctx& c) {
  c.require_base();
  for (const auto& l : all_plucker(c.shape)) {
    const MinorIndex mi = plucker_to_minor(l, c.shape).minor;
    for (int i = 1; i <= c.shape.k; ++i)
      c.expect(belongs_row(i, l, c.shape) == (std::ranges::count(mi.rows, i) == 1),
               [&] { return "row " + std::to_string(i) + " at " + l.to_string(); });
    for (int j = 1; j <= c.shape.p(); ++j)
      c.expect(belongs_col(j, l, c.shape) == (std::ranges::count(mi.cols, j) == 1),
               [&] { return "column " + std::to_string(j) + " at " + l.to_string(); });
  }
}

void prop_k_nk(Ctx& c) {
  c.require(2 * c.shape.k <= c.shape.n, "requires 2k <= n");
  const GrassShape dual{c.shape.n - c.shape.k, c.shape.n};
  const Grassmannian src(c.shape, c.relations), dst(dual, c.relations);
  const CertReport rep = certify_products(src, dst, [](const LocalizedElement& a) { return kn_isomorphism(a); }, 2);
  c.expect(rep.ok, [&] { return "product not preserved: " + rep.failure; });
  c.expect(kn_isomorphism(LocalizedElement::u_power(c.shape, 1)) == LocalizedElement::u_power(dual, 1),
           [] { return "[u] is not sent to [u']"; });
  c.detail(std::to_string(rep.checked) + " letter pairs into " + dual.to_string());
}

void diagram_tau_check(Ctx& c) {
  c.require(c.shape.n == 2 * c.shape.k, "requires 2k = n");
  c.require(c.shape.k >= 2, "requires k > 1");
  const Grassmannian g(c.shape, c.relations);
  const TAlgebra t(c.shape, c.relations);
  if (c.shape.k == 3) {
    const LocalizedElement x = LocalizedElement::letter(c.shape, PluckerIndex({1, 2, 6}, c.shape));
    c.expect(diagram_tau(x) == LocalizedElement::letter(c.shape, PluckerIndex({2, 3, 4}, c.shape)),
             [] { return "[1,2,6] is not sent to [2,3,4]"; });
  }
  for (const auto& l : g.coordinates()) {
    const LocalizedElement x = LocalizedElement::letter(c.shape, l);
    c.expect(diagram_tau(diagram_tau(x)) == x, [&] { return "not involutive at " + l.to_string(); });
    const LocalizedElement xi = LocalizedElement::term(c.shape, QScalar(1), {l}, -1);
    c.expect(dehom_forward(diagram_tau(xi), t) == diagram_tau(dehom_forward(xi, t), t),
             [&] { return "transpose route differs at " + l.to_string() + "[u]^-1"; });
  }
  const CertReport rep = certify_products(g, g, [](const LocalizedElement& a) { return diagram_tau(a); }, 2);
  c.expect(rep.ok, [&] { return "product not preserved: " + rep.failure; });
  c.detail(std::to_string(rep.checked) + " letter pairs");

  const H1Element h = random_h1(c.rng, c.shape);
  const H1Element swapped = tau_conjugate(h);
  std::vector<TElement> gens{t.y()};
  for (int i = 1; i <= c.shape.k; ++i)
    for (int j = 1; j <= c.shape.k; ++j) gens.push_back(t.x(i, j));
  for (const auto& x : gens)
    c.expect(diagram_tau(h1_apply(h, diagram_tau(x, t)), t) == h1_apply(swapped, x),
             [&] { return "tau h tau differs on " + x.to_string() + " for h = " + h.to_string(); });
  c.detail("semidirect law for h = " + h.to_string());
}

void h0_in_h1(Ctx& c) {
  c.require_automorphism_range();
  const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::vector<H0Element> samples;
  H0Element g = H0Element::identity(c.shape);
  for (int i = 0; i < c.shape.n; ++i) g.a[i] = QScalar(primes[i % 15]);
  samples.push_back(g);
  for (auto& x : g.a) x = random_unit(c.rng);
  samples.push_back(g);
  for (const auto& h : samples) {
    const H1Element f = h0_to_h1(h, c.shape);
    for (const auto& l : all_plucker(c.shape)) {
      const LocalizedElement x = LocalizedElement::term(c.shape, QScalar(1), {l}, -1);
      c.expect(h1_apply(f, x) == h0_apply(h, x), [&] { return "actions differ at " + l.to_string(); });
    }
  }
  c.detail("2 column scalings, all coordinates");
}

void example_no_h0(Ctx& c) {
  c.require_automorphism_range();
  const GrassShape s = c.shape;
  const Grassmannian g(s, c.relations);
  const TAlgebra t(s, c.relations);
  H1Element f = H1Element::identity(s);
  f.alpha[0] = QScalar(2);

  if (s.k == 2 && s.n == 4) {
    struct Row {
      std::vector<int> l;
      MinorIndex minor;
      int scalar;
    };
    const Row rows[] = {{{1, 2}, {{}, {}}, 1},         {{1, 3}, {{1}, {1}}, 2}, {{1, 4}, {{1}, {2}}, 2},
                        {{2, 3}, {{2}, {1}}, 1},       {{2, 4}, {{2}, {2}}, 1},
                        {{3, 4}, {{1, 2}, {1, 2}}, 2}};
    for (const auto& r : rows) {
      const PluckerIndex l(r.l, s);
      const MinorFactor m = plucker_to_minor(l, s);
      c.expect(m.minor == r.minor && m.ypow == 1, [&] { return l.to_string() + " != " + r.minor.to_string() + "[u]"; });
      c.expect(g.equal(dehom_backward(t.mul(t.minor(r.minor), t.y()), s), LocalizedElement::letter(s, l)),
               [&] { return l.to_string() + " != " + r.minor.to_string() + "[u] after embedding"; });
      const LocalizedElement x = LocalizedElement::letter(s, l);
      c.expect(h1_apply(f, x) == QScalar(r.scalar) * x, [&] { return "f" + l.to_string() + " != " + std::to_string(r.scalar) + l.to_string(); });
    }
    c.detail("six dehomogenisation identities and six action scalars");
  }

  std::map<PluckerIndex, QScalar> target;
  for (const auto& l : all_plucker(s)) target[l] = h1_apply(f, LocalizedElement::letter(s, l)).terms().front().coeff;
  const RealizeResult r = realize_in_h0(target, s);
  c.expect(!r.witness, [&] { return "unexpected H0 witness found"; });
  c.expect(r.obstruction == "prime 2" && r.rational_relaxation_feasible,
           [&] { return "unexpected obstruction '" + r.obstruction + "'"; });
  if (!r.witness) {
    std::string ob = r.obstruction;
    std::ranges::replace(ob, ' ', '-');
    c.detail("none returned; infeasible " + ob + " subsystem");
  }
}

void hdash_kernel(Ctx& c) {
  c.require_automorphism_range();
  const TAlgebra t(c.shape, c.relations);
  std::vector<TElement> gens{t.y()};
  for (int i = 1; i <= c.shape.k; ++i)
    for (int j = 1; j <= c.shape.p(); ++j) gens.push_back(t.x(i, j));
  const QScalar q = QScalar::q();
  for (const QScalar& lambda : {q, q * q, QScalar(2)}) {
    const H1Element kern = h1_kernel_element(c.shape, lambda);
    for (const auto& x : gens)
      c.expect(h1_apply(kern, x) == x, [&] { return "kernel element moves " + x.to_string(); });
    for (const auto& l : all_plucker(c.shape)) {
      const LocalizedElement x = LocalizedElement::letter(c.shape, l);
      c.expect(h1_apply(kern, x) == x, [&] { return "kernel element moves " + l.to_string(); });
    }
    c.expect(h1_canonicalize(kern).value == H1Element::identity(c.shape), [] { return "kernel element not canonicalised to 1"; });
  }

  const QScalar values[] = {QScalar(1), QScalar(2), -QScalar(1), q, QScalar::rational(1, 3)};
  std::uniform_int_distribution<int> pick(0, 4);
  std::vector<HCanonical> grid;
  while (grid.size() < 20) {
    H1Element f = H1Element::identity(c.shape);
    f.alpha0 = values[pick(c.rng)];
    for (auto& x : f.alpha) x = values[pick(c.rng)];
    for (std::size_t j = 0; j + 1 < f.beta.size(); ++j) f.beta[j] = values[pick(c.rng)];
    const HCanonical cf{f};
    if (std::find(grid.begin(), grid.end(), cf) == grid.end()) grid.push_back(cf);
  }
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = a + 1; b < grid.size(); ++b) {
      bool differs = false;
      for (const auto& x : gens) differs = differs || h1_apply(grid[a].value, x) != h1_apply(grid[b].value, x);
      c.expect(differs, [&] { return grid[a].value.to_string() + " and " + grid[b].value.to_string() + " act alike"; });
    }
  for (int trial = 0; trial < 10; ++trial) {
    const H1Element f = random_h1(c.rng, c.shape);
    const H1Element fk = h1_compose(f, h1_kernel_element(c.shape, random_unit(c.rng)));
    c.expect(h1_canonicalize(f) == h1_canonicalize(fk), [&] { return "canonical forms differ for " + f.to_string(); });
    const H1Element cf = h1_canonicalize(f).value;
    for (const auto& x : gens)
      c.expect(h1_apply(f, x) == h1_apply(cf, x), [&] { return "canonical form acts differently on " + x.to_string(); });
  }
  c.detail("kernel for lambda in {q, q^2, 2}; 20-point grid separated");
}

void theta_check(Ctx& c) {
  c.require(c.shape.k >= 2, "requires k > 1");
  const Grassmannian g(c.shape, c.relations);
  const CertReport rep = certify_products(g, g, [](const LocalizedElement& a) { return theta_antiauto(a); }, 2, true);
  c.expect(rep.ok, [&] { return "theta(ab) != theta(b)theta(a) for " + rep.failure; });
  c.expect(theta_antiauto(LocalizedElement::letter(c.shape, u_index(c.shape))) ==
               LocalizedElement::letter(c.shape, w_index(c.shape)),
           [] { return "theta([u]) != [w]"; });
  for (const auto& l : g.coordinates()) {
    const LocalizedElement x = LocalizedElement::letter(c.shape, l);
    c.expect(g.equal(theta_antiauto(theta_antiauto(x)), x), [&] { return "not involutive at " + l.to_string(); });
  }
  c.detail(std::to_string(rep.checked) + " letter pairs reversed");
}

void sec6_commutation(Ctx& c) {
  c.require_base();
  c.require(2 * c.shape.k <= c.shape.n, "requires 2k <= n");
  const TAlgebra t(c.shape, c.relations);
  const TElement m = t.minor(extreme_minor(c.shape));
  const int first = c.shape.p() + 1 - c.shape.k;
  for (int i = 1; i <= c.shape.k; ++i)
    for (int j = 1; j <= c.shape.p(); ++j) {
      const QScalar f = j >= first ? QScalar(1) : QScalar::q();
      c.expect(t.mul(t.x(i, j), m) == f * t.mul(m, t.x(i, j)),
               [&] { return "x[" + std::to_string(i) + "," + std::to_string(j) + "] against " + extreme_minor(c.shape).to_string(); });
    }
  c.detail(std::to_string(c.shape.k * c.shape.p()) + " generators");
}

void sec6_gradings(Ctx& c) {
  c.require_base();
  c.require(2 * c.shape.k <= c.shape.n, "requires 2k <= n");
  const TAlgebra t(c.shape, c.relations);
  const AlgebraShape b = t.base().shape();
  const TElement m = t.minor(extreme_minor(c.shape));
  long count = 0;
  for (const auto& mono : monomials_up_to(b, 2))
    for (int e = -2; e <= 2; ++e) {
      const TKey key{mono, e};
      const TElement a = TElement::term(b, mono, e);
      c.expect(t.mul(t.mul(t.y(), a), t.y(-1)) == QScalar::q_pow(t_grading_y(key)) * a,
               [&] { return "y-conjugation of " + a.to_string(); });
      c.expect(t.mul(m, a) == QScalar::q_pow(-t_grading_minor(key, c.shape)) * t.mul(a, m),
               [&] { return "minor conjugation of " + a.to_string(); });
      ++count;
    }
  std::uniform_int_distribution<int> gen(0, b.generator_count() - 1), yp(-2, 2), len(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    TElement a(b);
    for (int term = 0; term < 4; ++term) {
      Monomial mono{std::vector<std::uint16_t>(b.generator_count(), 0)};
      for (int l = len(c.rng); l > 0; --l) ++mono.exps[gen(c.rng)];
      a.add_term({mono, yp(c.rng)}, QScalar(term + 1));
    }
    for (const auto& parts : {y_components(a), minor_components(a, c.shape)}) {
      TElement sum(b);
      for (const auto& [w, part] : parts) sum += part;
      c.expect(sum == a, [&] { return "components do not sum back to " + a.to_string(); });
    }
  }
  c.detail(std::to_string(count) + " monomials against both conjugation oracles");
}

void sec6_membership(Ctx& c) {
  c.require(c.shape.k >= 2, "requires k > 1");
  c.require(2 * c.shape.k <= c.shape.n, "requires 2k <= n");
  const TAlgebra t(c.shape, c.relations);
  const AlgebraShape b = t.base().shape();
  long passed = 0;
  for (int g = 0; g < b.generator_count(); ++g)
    for (int e = -3; e <= 3; ++e) {
      Monomial mono{std::vector<std::uint16_t>(b.generator_count(), 0)};
      mono.exps[g] = 1;
      const TElement a = TElement::term(b, mono, e);
      bool in = false;
      try {
        in = membership_filter(a, c.shape);
      } catch (const std::logic_error& ex) {
        c.expect(false, [&] { return std::string(ex.what()); });
      }
      if (in) ++passed;
      c.expect(!in || e == 0, [&] { return a.to_string() + " passes with a y-power"; });
      if (e == 0) c.expect(in, [&] { return a.to_string() + " is rejected"; });
    }
  c.detail(std::to_string(passed) + " of " + std::to_string(7 * b.generator_count()) + " weight-1 monomials pass, all without y");
}

void reduced_auto(Ctx& c) {
  c.require_automorphism_range();
  const GrassShape s = c.shape;
  const Grassmannian g(s, c.relations);
  const TAlgebra t(s, c.relations);
  const auto specs = constructed_specs(s, c.rng);
  for (const auto& spec : specs) {
    const ElementMap rho = [spec](const LocalizedElement& a) { return auto_apply(spec, a); };
    const CertReport rep = certify_products(g, g, rho, 2);
    if (!c.expect(rep.ok, [&] { return spec_string(spec) + " fails on " + rep.failure; })) continue;
    const auto lambda = scalar_on(rho, u_index(s), s);
    const auto mu = scalar_on(rho, w_index(s), s);
    if (!c.expect(lambda && mu, [&] { return spec_string(spec) + " does not fix [u] and [w] up to scalars"; })) continue;
    H0Element h = H0Element::identity(s);
    h.a.front() = lambda->inverse();
    h.a.back() = mu->inverse();
    const ElementMap adjusted = [&](const LocalizedElement& a) { return h0_apply(h, rho(a)); };
    c.expect(scalar_on(adjusted, u_index(s), s) == QScalar(1) && scalar_on(adjusted, w_index(s), s) == QScalar(1),
             [&] { return "adjustment does not fix [u], [w] for " + spec_string(spec); });
    for (int i = 1; i <= s.k; ++i)
      for (int j = 1; j <= s.p(); ++j) {
        const TElement img = dehom_forward(adjusted(dehom_backward(t.x(i, j), s)), t);
        bool reduced = !img.is_zero();
        for (const auto& [key, coeff] : img.terms()) reduced = reduced && key.ypow == 0;
        c.expect(reduced, [&] { return "image of x[" + std::to_string(i) + "," + std::to_string(j) + "] leaves O_q(M(k,p))"; });
      }
  }
  c.detail(std::to_string(specs.size()) + " automorphisms certified on all letter pairs");
  const ElementMap last = [spec = specs.back()](const LocalizedElement& a) { return auto_apply(spec, a); };
  const CertReport spot = certify_products(g, g, last, 3, false, 100, c.options.seed);
  c.expect(spot.ok, [&] { return "degree-3 spot check fails on " + spot.failure; });
  c.detail("degree-3 spot check: " + std::string(spot.ok ? "pass" : "fail") + " on " + std::to_string(spot.checked) + " random words");
}

void standard_basis_deg2(Ctx& c) {
  const Grassmannian g(c.shape, c.relations);
  const long expected = static_cast<long>(enumerate_standard(c.shape, 2).size());
  const long rank = g.standard_rank(2);
  c.expect(rank == expected, [&] { return "rank " + std::to_string(rank) + " of " + std::to_string(expected) + " standard monomials"; });
  long ok = 0;
  for (const auto& a : g.coordinates())
    for (const auto& b : g.coordinates()) {
      const PluckerWord w{a, b};
      try {
        NCPoly back(g.ambient().shape());
        for (const auto& [coeff, sw] : g.straighten(w)) back += coeff * g.embed(sw);
        if (c.expect(back == g.embed(w), [&] { return "re-embedding differs for " + to_string(w); })) ++ok;
      } catch (const StraightenError& e) {
        c.expect(false, [&] { return to_string(w) + ": " + e.what(); });
      }
    }
  c.detail("rank " + std::to_string(rank) + "; " + std::to_string(ok) + " words straightened");
}

struct Entry {
  CheckInfo info;
  void (*run)(Ctx&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t = {
        {{"cor-belonging", "row and column membership of a minor read off from its Pluecker index"}, belonging},
        {{"diagram-tau", "complement-reverse map is an involutive automorphism matching transposition, with the semidirect law"}, diagram_tau_check},
        {{"dq-central", "the quantum determinant commutes with every generator"}, dq_central},
        {{"example-no-h0", "a row scaling by 2 has no column-scaling realisation over Q"}, example_no_h0},
        {{"h0-in-h1", "column scalings act as the corresponding row/column/y scalings"}, h0_in_h1},
        {{"lemma-how-u-commutes", "[u][I] = q^d(I) [I][u] for every coordinate"}, how_u_commutes},
        {{"lemma-to-and-fro", "Pluecker coordinates and minors times [u] translate both ways"}, to_and_fro},
        {{"pbw-confluence", "normal forms are independent of bracketing and rewriting order"}, pbw_confluence},
        {{"prop-hdash-kernel", "the torus kernel acts trivially and canonical forms separate actions"}, hdash_kernel},
        {{"prop-k-nk", "complement-reverse map G(k,n) -> G(n-k,n) preserves products"}, prop_k_nk},
        {{"sec6-commutation", "generators q-commute with the extreme minor by column"}, sec6_commutation},
        {{"sec6-gradings", "y and minor weights match conjugation; homogeneous parts sum back"}, sec6_gradings},
        {{"sec6-membership", "weight-1 elements of minor weight 0 or 1 carry no y"}, sec6_membership},
        {{"standard-basis-deg2", "degree-2 standard monomials are independent and straightening is unique"}, standard_basis_deg2},
        {{"theta-antiauto", "index reversal with word reversal is an antiautomorphism"}, theta_check},
        {{"thm-reduced-auto-instance", "constructed automorphisms, adjusted to fix [u] and [w], restrict to the base"}, reduced_auto},
    };
    std::sort(t.begin(), t.end(), [](const Entry& a, const Entry& b) { return a.info.id < b.info.id; });
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool is_known_check(const std::string& id) {
  return std::ranges::any_of(entries(), [&](const Entry& e) { return e.info.id == id; });
}

CheckReport run_check(const std::string& id, GrassShape shape, const CheckOptions& options) {
  auto it = std::ranges::find_if(entries(), [&](const Entry& e) { return e.info.id == id; });
  if (it == entries().end()) throw std::invalid_argument("unknown check id '" + id + "'");
  shape.validate();
  CheckReport report;
  report.id = id;
  report.shape = shape;
  report.seed = options.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    Ctx ctx(shape, options, report);
    it->run(ctx);
  } catch (const Skip& s) {
    report.status = CheckStatus::skipped;
    report.reason = s.reason;
    report.witnesses.clear();
    report.details.clear();
  } catch (const std::exception& e) {
    report.status = CheckStatus::fail;
    report.witnesses.push_back(std::string("aborted: ") + e.what());
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<GrassShape> default_check_shapes() { return {{2, 4}, {2, 5}, {3, 6}}; }

std::vector<CheckReport> run_all(const std::vector<GrassShape>& shapes, const CheckOptions& options) {
  std::vector<std::future<CheckReport>> jobs;
  for (const auto& info : check_catalog())
    for (const auto& s : shapes)
      jobs.push_back(std::async(std::launch::async, [id = info.id, s, options] { return run_check(id, s, options); }));
  std::vector<CheckReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.id != b.id) return a.id < b.id;
    return std::pair(a.shape.k, a.shape.n) < std::pair(b.shape.k, b.shape.n);
  });
  return out;
}

nlohmann::ordered_json to_json(const CheckReport& r, bool with_elapsed) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["shape"] = {{"k", r.shape.k}, {"n", r.shape.n}};
  j["status"] = to_string(r.status);
  j["reason"] = r.reason;
  j["witnesses"] = r.witnesses;
  j["details"] = r.details;
  j["seed"] = r.seed;
  if (with_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::ordered_json report_json(const std::vector<CheckReport>& reports, const CheckOptions& options,
                                   bool with_elapsed) {
  nlohmann::ordered_json j;
  j["format"] = "qgrass-report/1";
  j["seed"] = options.seed;
  j["mutated"] = options.mutate;
  int pass = 0, fail = 0, skipped = 0;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    (r.status == CheckStatus::pass ? pass : r.status == CheckStatus::fail ? fail : skipped)++;
    checks.push_back(to_json(r, with_elapsed));
  }
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  j["checks"] = std::move(checks);
  return j;
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::ranges::any_of(reports, [](const CheckReport& r) { return r.status == CheckStatus::fail; });
}

}  // namespace qgrass
