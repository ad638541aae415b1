#include "rsurf/json.hpp"

namespace rsurf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json moves(const std::vector<Move>& steps) {
  Json out = Json::array();
  for (const auto& m : steps) out.push_back(to_json(m));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const HomologyClass& x) {
  Json out = Json::array();
  for (auto v : x.coeffs()) out.push_back(v);
  return out;
}

Json to_json(const SymplecticVector& w) {
  Json c = Json::array();
  for (const auto& x : w.cs()) c.push_back(to_json(x));
  return Json{{"nu", to_json(w.nu())}, {"c", c}};
}

Json to_json(const Move& m) {
  return std::visit(overloaded{
                        [](const Permutation& p) { return Json{{"perm", p.source}}; },
                        [](const SignFlip& f) { return Json{{"flip", f.index}}; },
                        [](const CremonaMove& c) { return Json{{"cremona", {c.i, c.j, c.k}}}; },
                        [](const Negation&) { return Json{{"negate", true}}; },
                    },
                    m);
}

Json to_json(const ReductionTrace& t) {
  return Json{{"input", to_json(t.input)}, {"output", to_json(t.output)}, {"steps", moves(t.steps)}};
}

Json to_json(const FormReductionTrace& t) {
  return Json{{"input", to_json(t.input)}, {"output", to_json(t.output)}, {"steps", moves(t.steps)}};
}

Json to_json(const FaceLabel& f) {
  return Json{{"label", f.str()}, {"k", f.k()}, {"positive_set", f.positive()}};
}

Json to_json(const SMCGReport& r) {
  Json out{{"face", r.face.str()},
           {"gamma_L", r.gamma_l.str()},
           {"N_omega", r.n_omega},
           {"N_L", r.n_l},
           {"weyl_order", r.weyl_order}};
  if (r.torelli) out["torelli"] = to_string(*r.torelli);
  out["pi0"] = Json{{"kernel", r.pi0_kernel()}, {"quotient", r.pi0_quotient()}};
  out["pi1_rank"] = r.pi1_rank;
  if (r.packing) out["packing"] = *r.packing;
  if (r.balanced) out["balanced"] = *r.balanced;
  return out;
}

Json to_json(const UpperBoundCase& c) {
  Json sizes = Json::array();
  for (const auto& s : c.sizes) sizes.push_back(to_json(s));
  return Json{{"blow_down", c.blow_down},
              {"base", c.base.name},
              {"base_rank", c.base.pi1_rank},
              {"base_b2", c.base.b2},
              {"sizes", sizes},
              {"bound", c.bound}};
}

Json to_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row{{"face", r.face}, {"gamma_L", r.gamma_l}, {"N_omega", r.n_omega}};
    if (t.k < 5) row["pi1"] = r.pi1;
    row["area"] = r.area;
    rows.push_back(std::move(row));
  }
  return Json{{"k", t.k}, {"rows", rows}};
}

Json to_json(const braid::FinitePresentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(r);
  return Json{{"generators", p.generators()}, {"relators", rels}};
}

Json to_json(const braid::IntegerMatrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

Json to_json(const braid::SmithForm& s) {
  return Json{{"diagonal", s.diagonal()}, {"U", to_json(s.U)}, {"V", to_json(s.V)}};
}

Json to_json(const braid::AbelianInvariants& a) {
  return Json{{"free_rank", a.free_rank}, {"torsion", a.torsion}, {"group", a.str()}};
}

}  // namespace rsurf
