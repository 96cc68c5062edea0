#include "ck/json_io.hpp"

#include "ck/errors.hpp"

namespace ck {

Json laurent_to_json(const LaurentElement& a) {
  Json arr = Json::array();
  for (const auto& [e, c] : a.coeffs()) arr.push_back(Json::array({e, c.str()}));
  return arr;
}

LaurentElement laurent_from_json(const Json& j, Window win) {
  LaurentElement a(win);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("laurent value entries must be [exponent, polynomial]");
    a.set_coeff(pair[0].get<int>(), MultiPoly::parse(pair[1].get<std::string>()));
  }
  return a;
}

namespace {

Json values_to_json(const HopfContext& ctx, const std::vector<int>& gens,
                    const std::function<const LaurentElement&(int)>& value) {
  Json vals = Json::object();
  for (int g : gens) {
    const LaurentElement& v = value(g);
    if (v.is_zero()) continue;
    vals[ctx.generator(g).encoding()] = laurent_to_json(v);
  }
  return vals;
}

Json header(const char* kind, const HopfContext& ctx, Window win) {
  Json j;
  j["schema"] = "1";
  j["kind"] = kind;
  j["degree_cap"] = ctx.degree_cap();
  j["window"] = Json::array({win.lo, win.hi});
  return j;
}

std::vector<int> all_gens(const HopfContext& ctx) {
  std::vector<int> g(static_cast<std::size_t>(ctx.num_generators()));
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<int>(i);
  return g;
}

}  // namespace

Json character_to_json(const Character& phi) {
  Json j = header("character", phi.ctx(), phi.window());
  j["values"] = values_to_json(phi.ctx(), all_gens(phi.ctx()),
                               [&](int g) -> const LaurentElement& { return phi.value(g); });
  return j;
}

Json infchar_to_json(const InfChar& z) {
  Json j = header("infchar", z.ctx(), z.window());
  j["values"] = values_to_json(z.ctx(), all_gens(z.ctx()),
                               [&](int g) -> const LaurentElement& { return z.value(g); });
  return j;
}

namespace {

Window window_from_json(const Json& j, std::optional<Window> fallback) {
  if (j.contains("window")) return Window{j["window"][0].get<int>(), j["window"][1].get<int>()};
  if (fallback) return *fallback;
  throw ParseError("missing window");
}

template <typename T>
T values_from_json(std::shared_ptr<const HopfContext> ctx, const Json& j) {
  Window win = window_from_json(j, std::nullopt);
  T out(ctx, win);
  if (!j.contains("values")) throw ParseError("missing 'values'");
  for (const auto& [enc, val] : j["values"].items()) {
    auto gi = ctx->generator_index(RootedTree::decode(enc));
    if (!gi) throw ParseError("'" + enc + "' is not a generator of this context");
    out.set_value(*gi, laurent_from_json(val, win));
  }
  return out;
}

}  // namespace

Character character_from_json(std::shared_ptr<const HopfContext> ctx, const Json& j) {
  return values_from_json<Character>(std::move(ctx), j);
}

InfChar infchar_from_json(std::shared_ptr<const HopfContext> ctx, const Json& j) {
  return values_from_json<InfChar>(std::move(ctx), j);
}

Json liedata_to_json(const LieData& g) {
  Json j;
  j["schema"] = "1";
  j["basis"] = g.basis_names();
  Json degs = Json::array();
  for (int i = 0; i < g.dim(); ++i) degs.push_back(g.degree(i));
  j["degrees"] = degs;
  Json brs = Json::array();
  for (const auto& [a, b, c, coeff] : g.bracket_table())
    brs.push_back(Json::array({a + 1, b + 1, c + 1, coeff.str()}));
  j["brackets"] = brs;
  return j;
}

Json verification_report_json(const RunConfig& config,
                              const std::vector<VerificationReport>& reports) {
  Json j;
  j["schema"] = "1";
  j["config"] = {{"degree_cap", config.degree_cap},
                 {"window", Json::array({config.window.lo, config.window.hi})},
                 {"seed", config.seed},
                 {"flip_coproduct", config.flip_coproduct}};
  Json claims = Json::array();
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    claims.push_back(
        {{"id", r.claim_id}, {"status", r.pass ? "pass" : "fail"}, {"witness", r.witness}});
  }
  j["claims"] = claims;
  j["all_pass"] = all_pass;
  return j;
}

Json trajectory_to_json(const FlowTrajectory& traj) {
  Json j;
  j["schema"] = "1";
  j["p"] = traj.p;
  j["window"] = Json::array({traj.L_t.window().lo, traj.L_t.window().hi});
  j["L0"] = infchar_to_json(traj.L0);
  j["L"] = infchar_to_json(traj.L_t);
  j["g_minus"] = character_to_json(traj.g_minus);
  j["g_plus"] = character_to_json(traj.g_plus);
  j["phi"] = character_to_json(traj.phi_t);
  Json beta = Json::object();
  for (const auto& [k, coords] : traj.beta) {
    Json arr = Json::array();
    for (const auto& c : coords) arr.push_back(c.str());
    beta[std::to_string(k)] = arr;
  }
  j["beta"] = beta;
  return j;
}

}  // namespace ck
