#include "radram/report.hpp"

#include <exception>
#include <sstream>
#include <stdexcept>

#include "radram/errors.hpp"

namespace radram {

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

std::optional<BigInt> opt_big(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return bigint_from_json(v);
}

const char* kind_name(CharKind k) { return k == CharKind::Linear ? "linear" : "induced"; }

LocalCase case_from_name(const std::string& s) {
  for (LocalCase c : {LocalCase::Unramified, LocalCase::Tame, LocalCase::Unit, LocalCase::Eisenstein})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown case '" + s + "'");
}

std::string monomial_text(const Monomial& m) {
  if (m.c == 0) return "0";
  if (m.e == 0) return std::to_string(m.c);
  std::string out = m.c == 1 ? "" : m.c == -1 ? "-" : std::to_string(m.c) + "*";
  return out + "z^" + std::to_string(m.e);
}

void render_filtration(std::ostringstream& os, const char* name, const Filtration& f) {
  os << "  " << name << ":";
  if (f.steps.empty()) os << " trivial";
  for (std::size_t k = 0; k < f.steps.size(); ++k) {
    os << (k ? "; " : " ") << to_fraction_string(f.steps[k].brk) << " -> ";
    if (f.cyclic_only) os << "cyclic";
    else os << to_string(f.steps[k].group);
    os << " [" << f.steps[k].order.get_str() << "]";
  }
  os << "\n";
}

}  // namespace

std::vector<CharGroup> character_groups(LocalCase kase, const GroupDesc& G) {
  std::vector<CharGroup> out;
  for (unsigned k = 0; k <= G.s; ++k)
    for (unsigned t = k; t <= G.r; ++t) {
      const std::uint64_t n = count_by(k, t, G);
      if (n == 0) continue;
      CharGroup g;
      g.level = k;
      g.prim_degree = t;
      g.count = big(n);
      g.degree = k == 0 ? BigInt(1) : ipow(G.p, k - 1) * (big(G.p) - 1);
      g.c_exp = c_exp_closed(k, t, kase, G.p);
      const Rational f = Rational(g.degree) * (1 + g.c_exp);
      if (f.get_den() != 1) throw internal_error("non-integral conductor in group (" + std::to_string(k) + ", " +
                                                 std::to_string(t) + ") of " + G.to_string());
      g.f_val = f.get_num();
      out.push_back(g);
    }
  return out;
}

PrimeBlock analyze_prime(const BigInt& m, const BigInt& a, const GlobalPrime& gp) {
  PrimeBlock b;
  b.ctx = gp.ctx;
  b.e_global = gp.e_global;
  b.upper = upper_filtration(gp.ctx);
  b.lower = lower_filtration(gp.ctx);
  if (!gp.ctx.wild()) return b;
  const GroupDesc G = gp.ctx.group();
  b.characters = character_groups(gp.ctx.kase, G);
  if (class_count(G) <= kConductorListLimit) b.conductors = conductor_table(gp.ctx.kase, G);
  b.disc = local_discriminant(gp.ctx.kase, G);
  if (!b.disc->agree())
    throw internal_error("discriminant routes disagree at p = " + std::to_string(gp.ctx.p) + " for " + G.to_string());
  if (ipow(gp.ctx.p, gp.ctx.r) == m) b.disc_global = disc_vp_global(m, a, gp.ctx.p);
  return b;
}

Report analyze(const BigInt& m, const BigInt& a) {
  Report rep;
  rep.a = a;
  rep.m = m;
  rep.violations = validate(m, a);
  if (!rep.violations.empty()) return rep;
  const GlobalRamification gr = global_ram(m, a);
  const std::size_t n = gr.primes.size();
  rep.primes.resize(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      rep.primes[i] = analyze_prime(m, a, gr.primes[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rep;
}

Json to_json(const BigInt& n) {
  if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

Json to_json(const Rational& q) { return Json(to_fraction_string(q)); }

Json to_json(const GroupDesc& G) { return Json{{"p", G.p}, {"r", G.r}, {"s", G.s}}; }

Json to_json(const Character& chi) {
  return Json{{"kind", kind_name(chi.kind)},
              {"k", chi.k},
              {"twist", Json::array({chi.twist.a, chi.twist.b})},
              {"degree", chi.degree},
              {"level", chi.level},
              {"prim_degree", chi.prim_degree}};
}

Json to_json(const Filtration& f) {
  Json steps = Json::array();
  for (const auto& st : f.steps) {
    Json s{{"break", to_json(st.brk)}, {"order", to_json(st.order)}};
    if (!f.cyclic_only) {
      s["x"] = st.group.x;
      s["y"] = st.group.y;
    }
    steps.push_back(s);
  }
  Json j{{"numbering", f.numbering == Numbering::Upper ? "upper" : "lower"},
         {"cyclic_only", f.cyclic_only},
         {"steps", steps}};
  j["group"] = f.cyclic_only ? Json(nullptr) : to_json(f.G);
  return j;
}

Json to_json(const PrimeLocalContext& ctx) {
  return Json{{"p", ctx.p},       {"r", ctx.r}, {"vp_a", ctx.vp_a},     {"case", to_string(ctx.kase)},
              {"s", ctx.s},       {"g", opt(ctx.g)}, {"e", to_json(ctx.e)}, {"f", opt(ctx.f_res)}};
}

Json to_json(const Violation& v) {
  return Json{{"code", v.code}, {"message", v.message}, {"prime", v.prime ? Json(*v.prime) : Json(nullptr)}};
}

Json to_json(const ConductorRecord& c) {
  return Json{{"character", to_json(c.character)}, {"c", to_json(c.c_exp)}, {"f", to_json(c.f_val)}};
}

Json to_json(const LocalDiscriminant& d) {
  return Json{{"sum", to_json(d.sum)},
              {"sum_method", d.sum_method},
              {"closed", opt(d.closed)},
              {"different", to_json(d.different)},
              {"agree", d.agree()}};
}

Json to_json(const CharGroup& g) {
  return Json{{"level", g.level},          {"prim_degree", g.prim_degree}, {"count", to_json(g.count)},
              {"degree", to_json(g.degree)}, {"c", to_json(g.c_exp)},       {"f", to_json(g.f_val)}};
}

Json to_json(const PrimeBlock& b) {
  Json j;
  j["local"] = to_json(b.ctx);
  j["e_global"] = to_json(b.e_global);
  j["upper"] = to_json(b.upper);
  j["lower"] = to_json(b.lower);
  j["characters"] = Json::array();
  for (const auto& g : b.characters) j["characters"].push_back(to_json(g));
  j["conductors"] = Json::array();
  for (const auto& c : b.conductors) j["conductors"].push_back(to_json(c));
  j["v_p_disc"] = opt(b.disc);
  j["v_p_disc_global"] = opt(b.disc_global);
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["input"] = Json{{"a", to_json(r.a)}, {"m", to_json(r.m)}};
  j["valid"] = r.violations.empty();
  j["violations"] = Json::array();
  for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
  j["primes"] = Json::array();
  for (const auto& b : r.primes) j["primes"].push_back(to_json(b));
  return j;
}

Json to_json(const CharacterTable& t) {
  Json classes = Json::array();
  for (const auto& c : t.classes)
    classes.push_back(Json{{"alpha", c.alpha}, {"beta", c.beta}, {"rep", Json::array({c.rep.i, c.rep.u})}, {"size", c.size}});
  Json chars = Json::array();
  Json values = Json::array();
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    chars.push_back(to_json(t.chars[i]));
    Json row = Json::array();
    for (std::size_t c = 0; c < t.classes.size(); ++c) row.push_back(Json::array({t.at(i, c).c, t.at(i, c).e}));
    values.push_back(row);
  }
  return Json{{"group", to_json(t.G)},
              {"ring_order", t.ring_order()},
              {"classes", classes},
              {"characters", chars},
              {"values", values}};
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt n;
    if (n.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not an integer: " + j.dump());
    return n;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a \"num/den\" string, got " + j.dump());
  return parse_fraction(j.get<std::string>());
}

GroupDesc group_from_json(const Json& j) {
  return GroupDesc::make(get<std::uint64_t>(j, "p"), get<unsigned>(j, "r"), get<unsigned>(j, "s"));
}

Character character_from_json(const Json& j) {
  Character chi;
  const auto kind = get<std::string>(j, "kind");
  if (kind == "linear") chi.kind = CharKind::Linear;
  else if (kind == "induced") chi.kind = CharKind::Induced;
  else throw std::invalid_argument("unknown character kind '" + kind + "'");
  chi.k = get<unsigned>(j, "k");
  const auto tw = get<std::vector<std::uint64_t>>(j, "twist");
  if (tw.size() != 2) throw std::invalid_argument("twist must have two entries");
  chi.twist = {tw[0], tw[1]};
  chi.degree = get<std::uint64_t>(j, "degree");
  chi.level = get<unsigned>(j, "level");
  chi.prim_degree = get<unsigned>(j, "prim_degree");
  return chi;
}

Filtration filtration_from_json(const Json& j) {
  Filtration f;
  const auto numbering = get<std::string>(j, "numbering");
  if (numbering == "upper") f.numbering = Numbering::Upper;
  else if (numbering == "lower") f.numbering = Numbering::Lower;
  else throw std::invalid_argument("unknown numbering '" + numbering + "'");
  f.cyclic_only = get<bool>(j, "cyclic_only");
  if (!f.cyclic_only) f.G = group_from_json(field(j, "group"));
  for (const auto& s : field(j, "steps")) {
    FiltStep st;
    st.brk = rational_from_json(field(s, "break"));
    st.order = bigint_from_json(field(s, "order"));
    if (!f.cyclic_only) st.group = {get<unsigned>(s, "x"), get<unsigned>(s, "y")};
    f.steps.push_back(st);
  }
  return f;
}

PrimeLocalContext context_from_json(const Json& j) {
  PrimeLocalContext c;
  c.p = get<std::uint64_t>(j, "p");
  c.r = get<unsigned>(j, "r");
  c.vp_a = get<unsigned>(j, "vp_a");
  c.kase = case_from_name(get<std::string>(j, "case"));
  c.s = get<unsigned>(j, "s");
  c.g = opt_big(j, "g");
  c.e = bigint_from_json(field(j, "e"));
  c.f_res = opt_big(j, "f");
  return c;
}

Violation violation_from_json(const Json& j) {
  Violation v{get<std::string>(j, "code"), get<std::string>(j, "message"), std::nullopt};
  if (!field(j, "prime").is_null()) v.prime = get<std::uint64_t>(j, "prime");
  return v;
}

ConductorRecord conductor_from_json(const Json& j) {
  return {character_from_json(field(j, "character")), rational_from_json(field(j, "c")),
          bigint_from_json(field(j, "f"))};
}

LocalDiscriminant discriminant_from_json(const Json& j) {
  LocalDiscriminant d;
  d.sum = bigint_from_json(field(j, "sum"));
  d.sum_method = get<std::string>(j, "sum_method");
  d.closed = opt_big(j, "closed");
  d.different = bigint_from_json(field(j, "different"));
  return d;
}

CharGroup char_group_from_json(const Json& j) {
  CharGroup g;
  g.level = get<unsigned>(j, "level");
  g.prim_degree = get<unsigned>(j, "prim_degree");
  g.count = bigint_from_json(field(j, "count"));
  g.degree = bigint_from_json(field(j, "degree"));
  g.c_exp = rational_from_json(field(j, "c"));
  g.f_val = bigint_from_json(field(j, "f"));
  return g;
}

PrimeBlock prime_block_from_json(const Json& j) {
  PrimeBlock b;
  b.ctx = context_from_json(field(j, "local"));
  b.e_global = bigint_from_json(field(j, "e_global"));
  b.upper = filtration_from_json(field(j, "upper"));
  b.lower = filtration_from_json(field(j, "lower"));
  for (const auto& g : field(j, "characters")) b.characters.push_back(char_group_from_json(g));
  for (const auto& c : field(j, "conductors")) b.conductors.push_back(conductor_from_json(c));
  if (!field(j, "v_p_disc").is_null()) b.disc = discriminant_from_json(field(j, "v_p_disc"));
  b.disc_global = opt_big(j, "v_p_disc_global");
  return b;
}

Report report_from_json(const Json& j) {
  Report r;
  const Json& in = field(j, "input");
  r.a = bigint_from_json(field(in, "a"));
  r.m = bigint_from_json(field(in, "m"));
  for (const auto& v : field(j, "violations")) r.violations.push_back(violation_from_json(v));
  for (const auto& b : field(j, "primes")) r.primes.push_back(prime_block_from_json(b));
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render(const PrimeBlock& b) {
  const auto& c = b.ctx;
  std::ostringstream os;
  os << "p = " << c.p << ": " << to_string(c.kase) << ", r = " << c.r << ", v_p(a) = " << c.vp_a;
  if (c.wild()) os << ", s = " << c.s;
  if (c.g) os << ", g = " << c.g->get_str();
  os << ", e = " << c.e.get_str() << ", e_global = " << b.e_global.get_str() << "\n";
  if (c.kase == LocalCase::Unramified) return os.str();
  render_filtration(os, "upper", b.upper);
  render_filtration(os, "lower", b.lower);
  if (!b.characters.empty()) {
    os << "  characters (level, pr): count x degree, c, f\n";
    for (const auto& g : b.characters)
      os << "    (" << g.level << ", " << g.prim_degree << "): " << g.count.get_str() << " x " << g.degree.get_str()
         << ", c = " << to_fraction_string(g.c_exp) << ", f = " << g.f_val.get_str() << "\n";
  }
  if (b.disc) {
    os << "  v_p(disc) local: sum " << b.disc->sum.get_str() << " (" << b.disc->sum_method << ")";
    if (b.disc->closed) os << ", closed " << b.disc->closed->get_str();
    os << ", different " << b.disc->different.get_str() << (b.disc->agree() ? ", agree" : ", DISAGREE") << "\n";
  }
  if (b.disc_global) os << "  v_p(disc) global: " << b.disc_global->get_str() << "\n";
  return os.str();
}

std::string render(const Report& r) {
  std::ostringstream os;
  os << "Q(zeta_" << r.m.get_str() << ", (" << r.a.get_str() << ")^(1/" << r.m.get_str() << "))\n";
  if (!r.violations.empty()) {
    os << "hypothesis violated:\n";
    for (const auto& v : r.violations) os << "  [" << v.code << "] " << v.message << "\n";
    return os.str();
  }
  for (const auto& b : r.primes) os << render(b);
  return os.str();
}

std::string render(const CharacterTable& t) {
  std::ostringstream os;
  os << "character table of " << t.G.to_string() << ", order " << t.G.order() << ", values in Z[z], z = zeta_"
     << t.ring_order() << "\n";
  os << t.classes.size() << " classes (alpha, beta, rep z^i s_u, size):\n";
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    const auto& k = t.classes[c];
    os << "  C" << c << ": (" << k.alpha << ", " << k.beta << "), z^" << k.rep.i << " s_" << k.rep.u << ", "
       << k.size << "\n";
  }
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    const auto& chi = t.chars[i];
    os << "X" << i << " " << to_string(chi) << " deg " << chi.degree << " lev " << chi.level << " pr "
       << chi.prim_degree << ":";
    for (std::size_t c = 0; c < t.classes.size(); ++c) os << " " << monomial_text(t.at(i, c));
    os << "\n";
  }
  return os.str();
}

}  // namespace radram
