// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "detgb/drivers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "detgb/betti.hpp"
#include "detgb/corpus.hpp"
#include "detgb/error.hpp"
#include "detgb/gin.hpp"
#include "detgb/groebner.hpp"
#include "detgb/hilbert.hpp"
#include "detgb/matroid.hpp"

namespace detgb {

namespace {

std::vector<Polynomial> minors_of(const LinearMatrix& l) {
  return nonzero_minor_values(maximal_minors(l));
}

TermOrder order_for(const RunOptions& o, const Ring& ring) {
  return o.order ? TermOrder::parse(*o.order, ring) : TermOrder::degrevlex(ring.num_vars());
}

Json describe(const LinearMatrix& l) {
  Json entries = Json::array();
  for (int i = 0; i < l.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < l.cols(); ++j) row.push_back(l.entry(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return {{"rows", l.rows()},
          {"cols", l.cols()},
          {"mode", mode_name(l.mode())},
          {"field", l.ring().field().spec()},
          {"variables", l.ring().names()},
          {"entries", std::move(entries)}};
}

Verdict forall(bool holds, bool complete) {
  if (!holds) return Verdict::kFail;
  return complete ? Verdict::kPass : Verdict::kSkipped;
}

std::string tagged(const std::string& tag, const std::string& name) {
  return tag.empty() ? name : tag + ": " + name;
}

Json ideal_list(const std::vector<MonomialIdeal>& ideals) {
  Json j = Json::array();
  for (const auto& i : ideals) j.push_back(to_json(i));
  return j;
}

struct Initials {
  std::vector<MonomialIdeal> ideals;
  bool complete = true;
  Json detail = Json::object();
};

Initials initials_from_fan(const std::vector<Polynomial>& gens, const RunOptions& o) {
  GroebnerFan fan = explore_groebner_fan(gens, o.max_cones);
  Initials out;
  for (const auto& c : fan.cones) out.ideals.push_back(c.initial);
  out.complete = fan.complete;
  out.detail = {{"method", "groebner-fan"},
                {"cones", fan.cones.size()},
                {"basis_computations", fan.basis_computations},
                {"complete", fan.complete}};
  if (!fan.complete) out.detail["reason"] = "cone limit " + std::to_string(o.max_cones) + " reached";
  return out;
}

// Certificate run recorded as a claim; the initial ideals come with it when
// the certificate passes.
std::optional<UniversalityReport> certify(Report& r, const std::string& name,
                                          const std::vector<Polynomial>& gens, const RunOptions& o,
                                          bool expect_pass) {
  UniversalityReport cert;
  try {
    cert = universal_gb_certificate(gens, o.max_markings);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kGuardrail) throw;
    r.add(name, Verdict::kSkipped, {{"reason", e.what()}});
    return std::nullopt;
  }
  Json detail = {{"markings", cert.outcomes.size()},
                 {"candidates_examined", cert.candidates_examined},
                 {"universal", cert.verdict}};
  for (const auto& out : cert.outcomes) {
    if (out.all_spairs_reduce) continue;
    const Ring& ring = gens.front().ring();
    Json marked = Json::array();
    for (const auto& mono : out.marking.chosen) marked.push_back(ring.to_string(mono));
    detail["failing_marking"] = {{"marked_terms", marked},
                                 {"witness", to_json(*out.marking.witness)},
                                 {"pair", {out.failing->i + 1, out.failing->j + 1}},
                                 {"normal_form", out.failing->normal_form.to_string()}};
    break;
  }
  r.add(name, cert.verdict == expect_pass, std::move(detail));
  return cert;
}

std::optional<BettiTable> betti_or_skip(const MonomialIdeal& m, const RunOptions& o) {
  try {
    return betti_table(m, o.max_generators);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kGuardrail) throw;
    return std::nullopt;
  }
}

// Radicality, linear resolution, equal multigraded Betti tables and the
// support bound over a family of initial ideals.
struct FamilyChecks {
  bool radical = true;
  bool linear = true;
  bool betti_equal = true;
  bool support_squarefree = true;
  bool betti_complete = true;
  std::optional<BettiTable> first;
  std::vector<std::vector<std::uint64_t>> totals;
};

FamilyChecks check_family(const std::vector<MonomialIdeal>& ideals, const RunOptions& o) {
  FamilyChecks f;
  std::optional<std::map<std::pair<int, MultiDegree>, std::uint64_t>> reference;
  for (const auto& j : ideals) {
    f.radical = f.radical && is_radical(j);
    auto table = betti_or_skip(j, o);
    if (!table) {
      f.betti_complete = false;
      continue;
    }
    f.linear = f.linear && has_linear_resolution(j);
    f.support_squarefree = f.support_squarefree && betti_support_squarefree(*table);
    auto blocks = table->by_block(j.ring().grading());
    if (!reference) {
      reference = blocks;
      f.first = table;
    } else if (*reference != blocks) {
      f.betti_equal = false;
    }
    auto t = table->totals();
    if (std::find(f.totals.begin(), f.totals.end(), t) == f.totals.end()) f.totals.push_back(t);
  }
  return f;
}

bool precondition_codimension(Report& r, const std::string& tag, const std::vector<Polynomial>& gens,
                              int m, int n) {
  if (gens.empty()) {
    r.add(tagged(tag, "codimension"), Verdict::kPreconditionFailed, {{"reason", "every maximal minor vanishes"}});
    return false;
  }
  std::size_t codim = codimension(gens, TermOrder::degrevlex(gens.front().ring().num_vars()));
  std::size_t want = static_cast<std::size_t>(n - m + 1);
  Json detail = {{"codimension", codim}, {"required", want}};
  if (codim != want) {
    r.add(tagged(tag, "codimension"), Verdict::kPreconditionFailed, std::move(detail));
    return false;
  }
  r.add(tagged(tag, "codimension"), true, std::move(detail));
  return true;
}

bool require_mode(Report& r, const std::string& tag, const LinearMatrix& l, MatrixMode mode) {
  if (l.mode() == mode) return true;
  r.add(tagged(tag, "matrix_mode"), Verdict::kPreconditionFailed,
        {{"required", mode_name(mode)}, {"given", mode_name(l.mode())}});
  return false;
}

std::vector<std::pair<std::string, LinearMatrix>> matrices_for(const LinearMatrix* given, const RunOptions& o,
                                                               MatrixMode mode) {
  std::vector<std::pair<std::string, LinearMatrix>> out;
  if (given) {
    out.emplace_back("", *given);
    return out;
  }
  for (auto seed : o.seeds) {
    std::string tag = std::to_string(o.m) + "x" + std::to_string(o.n) + " seed " + std::to_string(seed);
    if (mode == MatrixMode::kColumnGraded) {
      out.emplace_back(tag, generic_column_graded(o.m, o.n, o.field, seed));
    } else {
      out.emplace_back(tag, generic_row_graded(o.m, o.n, o.field, seed));
    }
  }
  return out;
}

Json inputs_of(const std::vector<std::pair<std::string, LinearMatrix>>& ms, const RunOptions& o) {
  Json j;
  j["seeds"] = o.seeds;
  j["trials"] = o.trials;
  Json mats = Json::object();
  for (const auto& [tag, l] : ms) mats[tag.empty() ? "matrix" : tag] = describe(l);
  j["matrices"] = std::move(mats);
  return j;
}

// ---------------------------------------------------------------- thm-1.1

Report thm_1_1(const LinearMatrix* given, const RunOptions& o) {
  Report r;
  r.driver = "thm-1.1";
  LinearMatrix l = given ? *given : variable_matrix(o.m, o.n, o.field);
  r.inputs["matrix"] = describe(l);
  r.inputs["seed"] = o.seed;
  if (!require_mode(r, "", l, MatrixMode::kVariables)) return r;
  int m = l.rows(), n = l.cols();
  if (m > n) {
    r.add("shape", Verdict::kPreconditionFailed, {{"reason", "more rows than columns"}});
    return r;
  }
  auto gens = minors_of(l);
  auto cert = certify(r, "universal_groebner_basis", gens, o, true);

  MonomialIdeal diagonal = initial_ideal(gens, TermOrder::lex(l.ring().num_vars()));
  r.artifacts["diagonal_initial_ideal"] = to_json(diagonal);
  auto reference = betti_or_skip(diagonal, o);
  if (reference) {
    r.artifacts["betti"] = to_json(*reference, l.ring().grading());
    auto expected = eagon_northcott_ranks(m, n);
    r.add("eagon_northcott_ranks", reference->totals() == expected,
          {{"expected", expected}, {"computed", reference->totals()}});
  } else {
    r.add("eagon_northcott_ranks", Verdict::kSkipped, {{"reason", "too many generators"}});
  }
  if (cert && cert->verdict) {
    FamilyChecks f = check_family(cert->initial_ideals, o);
    bool same = f.betti_equal && reference && f.first &&
                f.first->by_block(l.ring().grading()) == reference->by_block(l.ring().grading());
    r.add("betti_tables_coincide", forall(same, f.betti_complete),
          {{"initial_ideals", cert->initial_ideals.size()}, {"distinct_totals", f.totals}});
    r.artifacts["initial_ideals"] = ideal_list(cert->initial_ideals);
  }

  // Specialization x_ij -> a_ij y_j.
  auto a = SpecializationMatrix::random(m, n, o.field, o.seed);
  auto images = specialize_phi(gens, a);
  RingPtr yring = phi_target_ring(n, o.field);
  std::set<Monomial> hit;
  bool monomial_images = true;
  for (const auto& p : images) {
    if (p.size() != 1 || !p.terms().front().monomial.is_squarefree() ||
        p.terms().front().monomial.degree() != m) {
      monomial_images = false;
      continue;
    }
    hit.insert(p.terms().front().monomial);
  }
  std::vector<Monomial> squarefree;
  for (const auto& cols : column_subsets(n, m)) {
    Monomial mono(static_cast<std::size_t>(n));
    for (int c : cols) mono.set(static_cast<std::size_t>(c - 1), 1);
    squarefree.push_back(mono);
  }
  MonomialIdeal target(yring, squarefree);
  bool onto = monomial_images && hit.size() == squarefree.size() && MonomialIdeal(yring, {hit.begin(), hit.end()}) == target;
  std::vector<Polynomial> diag_polys;
  for (const auto& g : diagonal.generators()) diag_polys.push_back(Polynomial::term(l.ring_ptr(), g, o.field.from_int(1)));
  std::vector<Monomial> diag_images;
  bool diag_monomial = true;
  for (const auto& p : specialize_phi(diag_polys, a)) {
    if (p.size() != 1) {
      diag_monomial = false;
      continue;
    }
    diag_images.push_back(p.terms().front().monomial);
  }
  bool diag_ok = diag_monomial && MonomialIdeal(yring, diag_images) == target;
  r.add("specialization_minors", onto, {{"images", to_json(images)}});
  r.add("specialization_diagonal", diag_ok, {{"image", to_json(MonomialIdeal(yring, diag_images))}});
  r.artifacts["squarefree_veronese"] = to_json(target);
  return r;
}

// ---------------------------------------------------------------- thm-3.1 / thm-3.2

void thm_3_1_one(Report& r, const std::string& tag, const LinearMatrix& l, const RunOptions& o) {
  if (!require_mode(r, tag, l, MatrixMode::kColumnGraded)) return;
  int m = l.rows(), n = l.cols();
  auto gens = minors_of(l);
  if (!precondition_codimension(r, tag, gens, m, n)) return;
  auto cert = certify(r, tagged(tag, "universal_groebner_basis"), gens, o, true);
  if (!cert || !cert->verdict) return;
  FamilyChecks f = check_family(cert->initial_ideals, o);
  auto expected = eagon_northcott_ranks(m, n);
  bool en = f.totals.size() == 1 && f.totals.front() == expected;
  r.add(tagged(tag, "ideal_radical"), is_radical(cert->initial_ideals.front()),
        {{"via", "squarefree initial ideal"}});
  r.add(tagged(tag, "initial_ideals_radical"), f.radical, {{"initial_ideals", cert->initial_ideals.size()}});
  r.add(tagged(tag, "initial_ideals_linear_resolution"), forall(f.linear, f.betti_complete));
  r.add(tagged(tag, "initial_ideals_betti_support_squarefree"), forall(f.support_squarefree, f.betti_complete));
  r.add(tagged(tag, "betti_equals_eagon_northcott"), forall(en && f.betti_equal, f.betti_complete),
        {{"expected", expected}, {"distinct_totals", f.totals}});
  r.artifacts[tag.empty() ? "initial_ideals" : tag] = ideal_list(cert->initial_ideals);
}

void thm_3_2_one(Report& r, const std::string& tag, const LinearMatrix& l, const RunOptions& o) {
  if (!require_mode(r, tag, l, MatrixMode::kColumnGraded)) return;
  int m = l.rows(), n = l.cols();
  auto gens = minors_of(l);
  Json art;
  if (gens.empty()) {
    r.add(tagged(tag, "nonzero_ideal"), Verdict::kPreconditionFailed, {{"reason", "every maximal minor vanishes"}});
    return;
  }
  auto cert = certify(r, tagged(tag, "universal_groebner_basis"), gens, o, true);
  MonomialIdeal in = initial_ideal(gens, TermOrder::degrevlex(l.ring().num_vars()));
  r.add(tagged(tag, "ideal_radical"), is_radical(in), {{"via", "squarefree degrevlex initial ideal"}});
  auto in_table = betti_or_skip(in, o);
  r.add(tagged(tag, "ideal_linear_resolution"),
        forall(!in_table || has_linear_resolution(in), in_table.has_value()),
        {{"via", "linear resolution of the degrevlex initial ideal"}});
  if (cert && cert->verdict) {
    FamilyChecks f = check_family(cert->initial_ideals, o);
    r.add(tagged(tag, "initial_ideals_radical"), f.radical, {{"initial_ideals", cert->initial_ideals.size()}});
    r.add(tagged(tag, "initial_ideals_linear_resolution"), forall(f.linear, f.betti_complete));
    r.add(tagged(tag, "initial_ideals_betti_support_squarefree"), forall(f.support_squarefree, f.betti_complete));
    r.add(tagged(tag, "betti_tables_coincide"), forall(f.betti_equal, f.betti_complete),
          {{"distinct_totals", f.totals}});
    if (l.has_zero_column()) {
      r.add(tagged(tag, "projective_dimension"), Verdict::kPreconditionFailed, {{"reason", "zero column"}});
    } else {
      bool pd_ok = f.betti_complete;
      std::vector<int> pds;
      for (const auto& j : cert->initial_ideals) {
        int pd = projective_dimension(j);
        if (std::find(pds.begin(), pds.end(), pd) == pds.end()) pds.push_back(pd);
        pd_ok = pd_ok && pd == n - m;
      }
      r.add(tagged(tag, "projective_dimension"), pd_ok, {{"expected", n - m}, {"computed", pds}});
    }
    art["initial_ideals"] = ideal_list(cert->initial_ideals);
    if (f.first) art["betti"] = to_json(*f.first, l.ring().grading());
  }
  MonomialIdeal predicted = predicted_gin_column(l);
  art["predicted_gin"] = to_json(predicted);
  try {
    GinResult gin = multigraded_gin(gens, order_for(o, l.ring()), o.seed, o.trials);
    r.add(tagged(tag, "gin_equals_predicted"), gin.agreed && gin.candidate == predicted,
          {{"gin", to_json(gin.candidate)}, {"trials_agree", gin.agreed}, {"borel_fixed", gin.borel_certified}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kPrecondition) throw;
    r.add(tagged(tag, "gin_equals_predicted"), Verdict::kPreconditionFailed, {{"reason", e.what()}});
  }
  Matroid ml = column_matroid(maximal_minors(l), n);
  SimplicialComplex dual = independence_complex(dual_matroid(ml)).alexander_dual();
  std::vector<std::size_t> vars;
  for (int j = 1; j <= n; ++j) vars.push_back(*l.ring().find("x_1_" + std::to_string(j)));
  MonomialIdeal sr = stanley_reisner(dual, l.ring_ptr(), vars);
  r.add(tagged(tag, "matroid_dual_description"), sr == predicted, {{"stanley_reisner", to_json(sr)}});
  r.artifacts[tag.empty() ? "matrix" : tag] = std::move(art);
}

Report thm_3(const char* id, const LinearMatrix* given, const RunOptions& o, bool second) {
  Report r;
  r.driver = id;
  auto ms = matrices_for(given, o, MatrixMode::kColumnGraded);
  r.inputs = inputs_of(ms, o);
  for (const auto& [tag, l] : ms) {
    if (second) {
      thm_3_2_one(r, tag, l, o);
    } else {
      thm_3_1_one(r, tag, l, o);
    }
  }
  return r;
}

// ---------------------------------------------------------------- thm-4.1 / prop-4.2

void thm_4_1_one(Report& r, const std::string& tag, const LinearMatrix& l, const RunOptions& o) {
  if (!require_mode(r, tag, l, MatrixMode::kRowGraded)) return;
  int m = l.rows(), n = l.cols();
  auto gens = minors_of(l);
  if (!precondition_codimension(r, tag, gens, m, n)) return;
  Initials in = initials_from_fan(gens, o);
  bool degree_m = true;
  for (const auto& j : in.ideals) {
    for (const auto& g : j.generators()) degree_m = degree_m && g.degree() == m;
  }
  r.add(tagged(tag, "initial_ideals_generated_in_degree_m"), forall(degree_m, in.complete), in.detail);
  FamilyChecks f = check_family(in.ideals, o);
  bool complete = in.complete && f.betti_complete;
  r.add(tagged(tag, "initial_ideals_radical"), forall(f.radical, in.complete));
  r.add(tagged(tag, "initial_ideals_linear_resolution"), forall(f.linear, complete));
  r.add(tagged(tag, "initial_ideals_betti_support_squarefree"), forall(f.support_squarefree, complete));
  r.add(tagged(tag, "betti_tables_coincide"), forall(f.betti_equal, complete), {{"distinct_totals", f.totals}});
  MonomialIdeal predicted = predicted_gin_row(m, n, l.ring().field());
  Json art;
  art["predicted_gin"] = to_json(predicted);
  art["initial_ideals"] = ideal_list(in.ideals);
  art["enumeration"] = in.detail;
  if (f.first) art["betti"] = to_json(*f.first, l.ring().grading());
  try {
    GinResult gin = multigraded_gin(gens, order_for(o, l.ring()), o.seed, o.trials);
    r.add(tagged(tag, "gin_equals_predicted"), gin.agreed && gin.candidate == predicted,
          {{"gin", to_json(gin.candidate)}, {"trials_agree", gin.agreed}, {"borel_fixed", gin.borel_certified}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kPrecondition) throw;
    r.add(tagged(tag, "gin_equals_predicted"), Verdict::kPreconditionFailed, {{"reason", e.what()}});
  }
  r.artifacts[tag.empty() ? "matrix" : tag] = std::move(art);
}

void prop_4_2_one(Report& r, const std::string& tag, const LinearMatrix& l, const RunOptions& o) {
  if (!require_mode(r, tag, l, MatrixMode::kRowGraded)) return;
  int m = l.rows(), n = l.cols();
  auto gens = minors_of(l);
  if (!precondition_codimension(r, tag, gens, m, n)) return;
  LaurentPoly k = k_polynomial_ideal(gens, order_for(o, l.ring()));
  LaurentPoly closed = k_mn_closed(m, n);
  LaurentPoly from_gin = k_polynomial(predicted_gin_row(m, n, l.ring().field()));
  r.add(tagged(tag, "k_polynomial_equals_closed_form"), k == closed,
        {{"k_polynomial", to_json(k)}, {"closed_form", to_json(closed)}});
  r.add(tagged(tag, "k_polynomial_equals_predicted_gin"), k == from_gin, {{"predicted_gin", to_json(from_gin)}});
}

Report thm_4(const char* id, const LinearMatrix* given, const RunOptions& o, bool prop) {
  Report r;
  r.driver = id;
  auto ms = matrices_for(given, o, MatrixMode::kRowGraded);
  r.inputs = inputs_of(ms, o);
  r.inputs["max_cones"] = o.max_cones;
  for (const auto& [tag, l] : ms) {
    if (prop) {
      prop_4_2_one(r, tag, l, o);
    } else {
      thm_4_1_one(r, tag, l, o);
    }
  }
  return r;
}

// ---------------------------------------------------------------- cor-2.6

bool cohen_macaulay(const MonomialIdeal& m, const BettiTable& t) {
  return t.totals().size() - 1 == monomial_codimension(m);
}

bool betti_dominated(const BettiTable& j, const BettiTable& i, const Grading& g) {
  auto bj = j.by_block(g);
  auto bi = i.by_block(g);
  for (const auto& [key, count] : bj) {
    auto it = bi.find(key);
    if (it == bi.end() || it->second < count) return false;
  }
  return true;
}

void cor_2_6_one(Report& r, const std::string& tag, const LinearMatrix& l, const RunOptions& o) {
  auto gens = minors_of(l);
  if (gens.empty()) {
    r.add(tagged(tag, "nonzero_ideal"), Verdict::kPreconditionFailed, {{"reason", "every maximal minor vanishes"}});
    return;
  }
  int m = l.rows(), n = l.cols();
  std::optional<MonomialIdeal> reference;
  Initials in;
  if (l.mode() == MatrixMode::kColumnGraded) {
    reference = predicted_gin_column(l);
    auto cert = certify(r, tagged(tag, "universal_groebner_basis"), gens, o, true);
    if (!cert || !cert->verdict) return;
    in.ideals = cert->initial_ideals;
    in.detail = {{"method", "marking-certificate"}, {"initial_ideals", in.ideals.size()}};
  } else if (l.mode() == MatrixMode::kRowGraded) {
    if (!precondition_codimension(r, tag, gens, m, n)) return;
    reference = predicted_gin_row(m, n, l.ring().field());
    in = initials_from_fan(gens, o);
  } else {
    r.add(tagged(tag, "matrix_mode"), Verdict::kPreconditionFailed,
          {{"required", "column-graded or row-graded"}, {"given", mode_name(l.mode())}});
    return;
  }
  const Grading& grading = l.ring().grading();
  r.add(tagged(tag, "reference_radical_borel_fixed"), is_radical(*reference) && is_borel_fixed(*reference),
        {{"reference", to_json(*reference)}});
  LaurentPoly k_ref = k_polynomial(*reference);
  LaurentPoly k_ideal = k_polynomial_ideal(gens, TermOrder::degrevlex(l.ring().num_vars()));
  if (!(k_ref == k_ideal)) {
    r.add(tagged(tag, "equal_hilbert_series"), Verdict::kPreconditionFailed,
          {{"reference", to_json(k_ref)}, {"ideal", to_json(k_ideal)}});
    return;
  }
  r.add(tagged(tag, "equal_hilbert_series"), true, {{"k_polynomial", to_json(k_ref)}});
  try {
    GinResult gin = multigraded_gin(gens, order_for(o, l.ring()), o.seed, o.trials);
    r.add(tagged(tag, "a_gin_equals_reference"), gin.agreed && gin.candidate == *reference,
          {{"gin", to_json(gin.candidate)}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kPrecondition) throw;
    r.add(tagged(tag, "a_gin_equals_reference"), Verdict::kPreconditionFailed, {{"reason", e.what()}});
  }
  auto ref_table = betti_or_skip(*reference, o);
  if (!ref_table) {
    r.add(tagged(tag, "reference_betti"), Verdict::kSkipped, {{"reason", "too many generators"}});
    return;
  }
  bool ref_linear = has_linear_resolution(*reference);
  bool ref_cm = cohen_macaulay(*reference, *ref_table);
  bool radical = true, linear = true, cm = true, dominated = true, squarefree = true, block_bounded = true,
       taylor = true;
  bool complete = in.complete;
  for (const auto& j : in.ideals) {
    radical = radical && is_radical(j);
    auto t = betti_or_skip(j, o);
    if (!t) {
      complete = false;
      continue;
    }
    if (ref_linear) linear = linear && has_linear_resolution(j);
    if (ref_cm) cm = cm && cohen_macaulay(j, *t);
    dominated = dominated && betti_dominated(*t, *ref_table, grading);
    squarefree = squarefree && betti_support_squarefree(*t);
    block_bounded = block_bounded && betti_support_bounded(*t, grading);
    taylor = taylor && betti_support_taylor_bounded(*t, grading);
  }
  r.add(tagged(tag, "b_radical"), forall(radical, in.complete), in.detail);
  r.add(tagged(tag, "c_linear_resolution"), forall(linear, complete), {{"reference_linear", ref_linear}});
  r.add(tagged(tag, "d_cohen_macaulay"), forall(cm, complete), {{"reference_cohen_macaulay", ref_cm}});
  r.add(tagged(tag, "e_betti_bounded_by_reference"), forall(dominated, complete));
  r.add(tagged(tag, "e_support_bounded"), forall(squarefree, complete),
        {{"bound", "fine a <= (1,...,1)"},
         {"block_bound_holds", block_bounded},
         {"reference_block_bound_holds", betti_support_bounded(*ref_table, grading)}});
  r.add(tagged(tag, "e_support_taylor_bounded"), forall(taylor, complete), {{"bound", "a <= (i,...,i)"}});
  r.artifacts[tag.empty() ? "matrix" : tag] = {{"reference", to_json(*reference)},
                                                {"reference_betti", to_json(*ref_table, grading)},
                                                {"initial_ideals", ideal_list(in.ideals)}};
}

Report cor_2_6(const LinearMatrix* given, const RunOptions& o) {
  Report r;
  r.driver = "cor-2.6";
  std::vector<std::pair<std::string, LinearMatrix>> ms;
  if (given) {
    ms.emplace_back("", *given);
  } else {
    for (auto& [tag, l] : matrices_for(nullptr, o, MatrixMode::kColumnGraded)) ms.emplace_back("column " + tag, l);
    for (auto& [tag, l] : matrices_for(nullptr, o, MatrixMode::kRowGraded)) ms.emplace_back("row " + tag, l);
  }
  r.inputs = inputs_of(ms, o);
  for (const auto& [tag, l] : ms) cor_2_6_one(r, tag, l, o);
  return r;
}

// ---------------------------------------------------------------- remark-1.3

Report remark_1_3(const LinearMatrix* given, const RunOptions& o) {
  Report r;
  r.driver = "remark-1.3";
  std::optional<LinearMatrix> owned;
  std::optional<std::size_t> expect = o.expect_codimension;
  bool all_orders = o.all_orders.value_or(given == nullptr);
  if (!given) {
    MatrixSpec spec = find_corpus_entry("remark13a")->spec;
    spec.field = o.field;
    owned = build_matrix(spec);
    given = &*owned;
    if (!expect) expect = 2;
  }
  const LinearMatrix& l = *given;
  r.inputs["matrix"] = describe(l);
  r.inputs["max_cones"] = o.max_cones;
  auto gens = minors_of(l);
  if (gens.empty()) {
    r.add("nonzero_ideal", Verdict::kPreconditionFailed, {{"reason", "every maximal minor vanishes"}});
    return r;
  }
  r.artifacts["minors"] = to_json(gens);
  certify(r, "certificate_fails", gens, o, false);
  int m = l.rows();
  std::size_t nv = l.ring().num_vars();
  MonomialIdeal drl = initial_ideal(gens, TermOrder::degrevlex(nv));
  r.add("degrevlex_initial_ideal_has_generator_above_degree_m", drl.max_degree() > m,
        {{"initial_ideal", to_json(drl)}, {"max_degree", drl.max_degree()}});
  Initials in = initials_from_fan(gens, o);
  bool all_high = true;
  Json degrees = Json::array();
  for (const auto& j : in.ideals) {
    all_high = all_high && j.max_degree() > m;
    degrees.push_back(j.max_degree());
  }
  Json detail = in.detail;
  detail["max_degrees"] = degrees;
  if (all_orders) {
    r.add("every_initial_ideal_has_generator_above_degree_m", forall(all_high, in.complete), std::move(detail));
  } else {
    r.artifacts["enumeration"] = std::move(detail);
  }
  r.artifacts["initial_ideals"] = ideal_list(in.ideals);
  if (expect) {
    std::size_t codim = codimension(gens, TermOrder::degrevlex(nv));
    r.add("codimension", codim == *expect, {{"expected", *expect}, {"computed", codim}});
  }
  return r;
}

// ---------------------------------------------------------------- rigidity suite

std::vector<std::vector<int>> block_shapes(int max_blocks, int max_vars, int max_block) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int used) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_blocks) return;
    for (int s = 1; s <= max_block && used + s <= max_vars; ++s) {
      cur.push_back(s);
      self(self, used + s);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Json shape_json(const Ring& ring) {
  Json j = Json::array();
  for (int b = 0; b < ring.grading().num_blocks(); ++b) j.push_back(ring.grading().block_members(b).size());
  return j;
}

LaurentPoly y_power(const MultiDegree& b) { return LaurentPoly::monomial(b); }

Report lemma_2_4(const RunOptions& o) {
  Report r;
  r.driver = "lemma-2.4";
  r.inputs = {{"max_blocks", 2}, {"max_variables", 6}, {"easyp_blocks", 3}, {"easyp_block_size", 3}};
  bool l21 = true, l22 = true, l23 = true, l24 = true, l24_linear = true, meno = true;
  std::size_t radical_count = 0, other_count = 0;
  Json counterexamples = Json::array();
  for (const auto& shape : block_shapes(2, 6, 6)) {
    RingPtr ring = block_ring(shape, o.field);
    std::size_t nv = ring->num_vars();
    for (std::uint32_t mask = 1; mask < (1u << nv); ++mask) {
      std::vector<std::size_t> vars;
      for (std::size_t v = 0; v < nv; ++v) {
        if (mask >> v & 1) vars.push_back(v);
      }
      MonomialIdeal p = MonomialIdeal::prime(ring, vars);
      l21 = l21 && is_borel_fixed(p) == as_variable_prime(p).has_value();
    }
    for (const auto& b : all_variable_primes(*ring)) l21 = l21 && is_borel_fixed(variable_prime_ideal(ring, b));
    RigidityCorpus corpus = rigidity_corpus(ring);
    radical_count += corpus.radical.size();
    other_count += corpus.other.size();
    MultiDegree ones(shape.size(), 1);
    for (const auto& ideal : corpus.radical) {
      bool gens_bounded = true;
      std::set<MultiDegree> degs;
      for (const auto& g : ideal.generators()) {
        MultiDegree d = ring->grading().degree(g);
        gens_bounded = gens_bounded && multidegree_leq(d, ones);
        degs.insert(d);
      }
      l23 = l23 && gens_bounded;
      bool rec = borel_reconstruction(ideal) == ideal;
      if (!rec && counterexamples.size() < 5) counterexamples.push_back(to_json(ideal));
      l24 = l24 && rec;
      if (degs.size() == 1) l24_linear = l24_linear && has_linear_resolution(ideal);
    }
    std::vector<const MonomialIdeal*> all;
    for (const auto& i : corpus.radical) all.push_back(&i);
    for (const auto& i : corpus.other) all.push_back(&i);
    for (const MonomialIdeal* ideal : all) {
      LaurentPoly expected(static_cast<int>(shape.size()));
      for (const auto& p : minimal_primes(*ideal)) {
        auto b = as_variable_prime(p);
        if (!b) {
          l22 = false;
          continue;
        }
        auto len = localized_length(*ideal, p);
        if (!len) {
          meno = false;
          continue;
        }
        expected = expected + LaurentPoly::monomial(b->b, mpz_class(static_cast<unsigned long>(*len)));
      }
      meno = meno && g_multidegree(k_polynomial(*ideal)) == expected;
    }
  }
  bool easy1 = true, easy2 = true;
  for (const auto& shape : block_shapes(3, 9, 3)) {
    RingPtr ring = block_ring(shape, o.field);
    auto primes = all_variable_primes(*ring);
    for (const auto& b : primes) {
      easy1 = easy1 && g_multidegree(k_polynomial(variable_prime_ideal(ring, b))) == y_power(b.b);
    }
    for (const auto& b1 : primes) {
      for (const auto& b2 : primes) {
        bool contained = variable_prime_ideal(ring, b2).contains(variable_prime_ideal(ring, b1));
        easy2 = easy2 && contained == multidegree_leq(b1.b, b2.b);
      }
    }
  }
  Json counts = {{"radical_ideals", radical_count}, {"other_borel_fixed_ideals", other_count}};
  r.add("borel_fixed_primes_are_p_b", l21);
  r.add("minimal_primes_are_p_b", l22, counts);
  r.add("radical_generators_bounded_by_ones", l23, counts);
  r.add("alexander_dual_of_polarization", l24, {{"counterexamples", counterexamples}});
  r.add("equal_multidegree_generators_give_linear_resolution", l24_linear);
  r.add("g_multidegree_of_p_b", easy1);
  r.add("p_b_containment_matches_divisibility", easy2);
  r.add("g_multidegree_from_lengths", meno, counts);
  return r;
}

Report thm_2_5(const RunOptions& o) {
  Report r;
  r.driver = "thm-2.5";
  r.inputs = {{"max_blocks", 2}, {"max_variables", 6}};
  bool rigid = true;
  std::size_t comparisons = 0, radical_count = 0, other_count = 0;
  Json clashes = Json::array();
  for (const auto& shape : block_shapes(2, 6, 6)) {
    RingPtr ring = block_ring(shape, o.field);
    RigidityCorpus corpus = rigidity_corpus(ring);
    radical_count += corpus.radical.size();
    other_count += corpus.other.size();
    std::map<std::vector<std::pair<LaurentPoly::Exponent, mpz_class>>, std::vector<const MonomialIdeal*>> by_k;
    for (const auto& i : corpus.radical) by_k[k_polynomial(i).pairs()].push_back(&i);
    for (const auto& i : corpus.other) by_k[k_polynomial(i).pairs()].push_back(&i);
    for (const auto& i : corpus.radical) {
      for (const MonomialIdeal* j : by_k[k_polynomial(i).pairs()]) {
        ++comparisons;
        if (!(*j == i)) {
          rigid = false;
          if (clashes.size() < 5) clashes.push_back({{"shape", shape_json(*ring)}, {"radical", to_json(i)}, {"other", to_json(*j)}});
        }
      }
    }
  }
  r.add("radical_borel_fixed_determined_by_hilbert_series", rigid,
        {{"radical_ideals", radical_count}, {"other_borel_fixed_ideals", other_count},
         {"equal_k_polynomial_pairs", comparisons}, {"clashes", clashes}});
  return r;
}

// ---------------------------------------------------------------- identities

Report identities(const RunOptions&) {
  Report r;
  r.driver = "identities";
  r.inputs = {{"rg8", {{"m", "1..4"}, {"t", "0..5"}}}, {"others", {{"m", "1..3"}, {"n", "m..6"}}}};
  auto run = [&](const char* name, auto&& check, Json& failures) {
    bool ok = true;
    check(ok, failures);
    r.add(name, ok, {{"failures", failures}});
  };
  Json f8 = Json::array(), f7 = Json::array(), f56 = Json::array(), frec = Json::array(), f4 = Json::array();
  run("rg8", [](bool& ok, Json& fail) {
    for (int m = 1; m <= 4; ++m) {
      for (int t = 0; t <= 5; ++t) {
        if (!verify_rg8(m, t)) {
          ok = false;
          fail.push_back({m, t});
        }
      }
    }
  }, f8);
  auto over_mn = [](bool (*fn)(int, int), bool shift) {
    return [fn, shift](bool& ok, Json& fail) {
      for (int m = 1; m <= 3; ++m) {
        for (int n = m; n <= 6; ++n) {
          if (!fn(m, shift ? n - m : n)) {
            ok = false;
            fail.push_back({m, n});
          }
        }
      }
    };
  };
  run("rg7", over_mn(verify_rg7, true), f7);
  run("rg5_rg6", over_mn(verify_rg5_rg6, false), f56);
  run("recursion", over_mn(verify_recursion, false), frec);
  run("rg4", over_mn(verify_rg4, false), f4);
  return r;
}

}  // namespace

RingPtr block_ring(const std::vector<int>& sizes, const Field& field) {
  std::vector<std::string> names;
  std::vector<int> block_of;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    for (int k = 1; k <= sizes[b]; ++k) {
      names.push_back("x_" + std::to_string(b + 1) + "_" + std::to_string(k));
      block_of.push_back(static_cast<int>(b));
    }
  }
  return Ring::make(std::move(names), field, Grading::from_blocks(std::move(block_of), static_cast<int>(sizes.size())));
}

RigidityCorpus rigidity_corpus(const RingPtr& ring) {
  RigidityCorpus out;
  std::vector<VariablePrime> primes;
  for (const auto& b : all_variable_primes(*ring)) {
    if (std::any_of(b.b.begin(), b.b.end(), [](int x) { return x > 0; })) primes.push_back(b);
  }
  std::set<MonomialIdeal> radical;
  std::size_t k = primes.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    bool antichain = true;
    for (std::size_t a = 0; a < k && antichain; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != a && (mask >> c & 1) && multidegree_leq(primes[a].b, primes[c].b)) {
          antichain = false;
          break;
        }
      }
    }
    if (!antichain) continue;
    std::optional<MonomialIdeal> ideal;
    for (std::size_t a = 0; a < k; ++a) {
      if (!(mask >> a & 1)) continue;
      MonomialIdeal p = variable_prime_ideal(ring, primes[a]);
      ideal = ideal ? ideal_intersection(*ideal, p) : p;
    }
    radical.insert(*ideal);
  }
  std::size_t nv = ring->num_vars();
  std::vector<Monomial> deg2, deg3;
  for (std::size_t a = 0; a < nv; ++a) {
    for (std::size_t b = a; b < nv; ++b) {
      Monomial u = ring->variable(a) * ring->variable(b);
      deg2.push_back(u);
      for (std::size_t c = b; c < nv; ++c) deg3.push_back(u * ring->variable(c));
    }
  }
  std::set<MonomialIdeal> other;
  auto consider = [&](std::vector<Monomial> gens) {
    MonomialIdeal i = borel_closure(ring, gens);
    if (!radical.count(i) && !is_radical(i)) other.insert(std::move(i));
  };
  for (const auto& u : deg2) consider({u});
  for (const auto& u : deg3) consider({u});
  for (std::size_t a = 0; a < deg2.size(); ++a) {
    for (std::size_t b = a + 1; b < deg2.size(); ++b) consider({deg2[a], deg2[b]});
  }
  out.radical.assign(radical.begin(), radical.end());
  out.other.assign(other.begin(), other.end());
  return out;
}

RigidityCorpus rigidity_corpus() {
  RigidityCorpus out;
  for (const auto& shape : block_shapes(2, 6, 6)) {
    RigidityCorpus c = rigidity_corpus(block_ring(shape, Field::default_field()));
    out.radical.insert(out.radical.end(), c.radical.begin(), c.radical.end());
    out.other.insert(out.other.end(), c.other.begin(), c.other.end());
  }
  return out;
}

namespace {

// ---------------------------------------------------------------- commands

const LinearMatrix& need(const LinearMatrix* l, std::string_view command) {
  if (!l) throw Error(ErrorKind::kInvalidArgument, std::string(command) + " needs a matrix");
  return *l;
}

Report cmd_gb(const LinearMatrix& l, const RunOptions& o) {
  Report r;
  r.driver = "gb";
  r.inputs["matrix"] = describe(l);
  TermOrder order = order_for(o, l.ring());
  r.inputs["order"] = order.to_string(l.ring());
  auto gens = minors_of(l);
  r.artifacts["minors"] = to_json(gens);
  if (gens.empty()) {
    r.add("nonzero_ideal", Verdict::kPreconditionFailed, {{"reason", "every maximal minor vanishes"}});
    return r;
  }
  GroebnerBasis gb = buchberger(gens, order);
  r.artifacts["groebner_basis"] = to_json(gb.generators);
  MonomialIdeal in(l.ring_ptr(), gb.leading);
  r.artifacts["initial_ideal"] = to_json(in);
  r.artifacts["codimension"] = monomial_codimension(in);
  r.add("groebner_basis_computed", true, {{"size", gb.generators.size()}});
  return r;
}

Report cmd_universal(const LinearMatrix& l, const RunOptions& o) {
  Report r;
  r.driver = "universal-check";
  r.inputs["matrix"] = describe(l);
  r.inputs["max_markings"] = o.max_markings;
  auto gens = minors_of(l);
  r.artifacts["minors"] = to_json(gens);
  if (gens.empty()) {
    r.add("nonzero_ideal", Verdict::kPreconditionFailed, {{"reason", "every maximal minor vanishes"}});
    return r;
  }
  auto cert = certify(r, "universal_groebner_basis", gens, o, true);
  if (cert && cert->verdict) r.artifacts["initial_ideals"] = ideal_list(cert->initial_ideals);
  return r;
}

Report cmd_initials(const LinearMatrix& l, const RunOptions& o) {
  Report r;
  r.driver = "initials";
  r.inputs["matrix"] = describe(l);
  r.inputs["max_markings"] = o.max_markings;
  r.inputs["max_cones"] = o.max_cones;
  auto gens = minors_of(l);
  if (gens.empty()) {
    r.add("nonzero_ideal", Verdict::kPreconditionFailed, {{"reason", "every maximal minor vanishes"}});
    return r;
  }
  std::optional<UniversalityReport> cert;
  try {
    cert = universal_gb_certificate(gens, o.max_markings);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kGuardrail) throw;
  }
  Initials in;
  if (cert && cert->verdict) {
    in.ideals = cert->initial_ideals;
    in.detail = {{"method", "marking-certificate"}, {"markings", cert->outcomes.size()}};
  } else {
    in = initials_from_fan(gens, o);
  }
  r.artifacts["initial_ideals"] = ideal_list(in.ideals);
  r.add("all_initial_ideals_enumerated", in.complete ? Verdict::kPass : Verdict::kSkipped, in.detail);
  return r;
}

Report cmd_hilbert(const LinearMatrix* l, const RunOptions& o) {
  Report r;
  r.driver = "hilbert";
  LaurentPoly k(0);
  if (o.closed) {
    r.inputs["closed"] = {o.closed->first, o.closed->second};
    k = k_mn_closed(o.closed->first, o.closed->second);
  } else {
    const LinearMatrix& m = need(l, "hilbert");
    r.inputs["matrix"] = describe(m);
    auto gens = minors_of(m);
    if (gens.empty()) {
      k = LaurentPoly::constant(m.ring().grading().num_blocks(), 1);
    } else {
      k = k_polynomial_ideal(gens, order_for(o, m.ring()));
    }
  }
  r.artifacts["k_polynomial"] = to_json(k);
  r.artifacts["g_multidegree"] = to_json(g_multidegree(k));
  r.add("k_polynomial_computed", true, {{"text", k.to_string()}});
  return r;
}

Report cmd_gin(const LinearMatrix& l, const RunOptions& o) {
  Report r;
  r.driver = "gin";
  r.inputs["matrix"] = describe(l);
  r.inputs["seed"] = o.seed;
  r.inputs["trials"] = o.trials;
  TermOrder order = order_for(o, l.ring());
  r.inputs["order"] = order.to_string(l.ring());
  auto gens = minors_of(l);
  if (gens.empty()) {
    r.add("nonzero_ideal", Verdict::kPreconditionFailed, {{"reason", "every maximal minor vanishes"}});
    return r;
  }
  try {
    GinResult gin = multigraded_gin(gens, order, o.seed, o.trials);
    r.artifacts["gin"] = to_json(gin.candidate);
    r.artifacts["per_trial"] = ideal_list(gin.per_trial);
    r.add("trials_agree", gin.agreed);
    r.add("borel_fixed", gin.borel_certified);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kPrecondition) throw;
    r.add("admissible_order", Verdict::kPreconditionFailed, {{"reason", e.what()}});
  }
  return r;
}

Report cmd_betti(const LinearMatrix& l, const RunOptions& o) {
  Report r;
  r.driver = "betti";
  r.inputs["matrix"] = describe(l);
  TermOrder order = order_for(o, l.ring());
  r.inputs["order"] = order.to_string(l.ring());
  auto gens = minors_of(l);
  if (gens.empty()) {
    r.add("nonzero_ideal", Verdict::kPreconditionFailed, {{"reason", "every maximal minor vanishes"}});
    return r;
  }
  MonomialIdeal in = initial_ideal(gens, order);
  r.artifacts["initial_ideal"] = to_json(in);
  auto table = betti_or_skip(in, o);
  if (!table) {
    r.add("betti_table", Verdict::kSkipped, {{"reason", "more than " + std::to_string(o.max_generators) + " generators"}});
    return r;
  }
  r.artifacts["betti"] = to_json(*table, l.ring().grading());
  r.artifacts["linear_resolution"] = has_linear_resolution(in);
  r.artifacts["projective_dimension"] = projective_dimension(in);
  r.add("betti_table", true);
  return r;
}

Json masks(const std::vector<std::uint32_t>& sets, int n) {
  Json j = Json::array();
  for (auto s : sets) {
    Json e = Json::array();
    for (int k = 0; k < n; ++k) {
      if (s >> k & 1) e.push_back(k + 1);
    }
    j.push_back(std::move(e));
  }
  return j;
}

Report cmd_matroid(const LinearMatrix& l, const RunOptions&) {
  Report r;
  r.driver = "matroid";
  r.inputs["matrix"] = describe(l);
  int n = l.cols();
  try {
    Matroid ml = column_matroid(maximal_minors(l), n);
    Matroid dual = dual_matroid(ml);
    r.artifacts["bases"] = masks(ml.bases(), n);
    r.artifacts["circuits"] = masks(ml.circuits(), n);
    r.artifacts["dual_bases"] = masks(dual.bases(), n);
    r.artifacts["rank"] = ml.rank();
    if (l.mode() == MatrixMode::kColumnGraded) r.artifacts["predicted_gin"] = to_json(predicted_gin_column(l));
    r.add("matroid_computed", true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kPrecondition) throw;
    r.add("nonzero_minor", Verdict::kPreconditionFailed, {{"reason", e.what()}});
  }
  return r;
}

const Json* find_key(const Json& j, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (j.contains(n)) return &j[n];
  }
  return nullptr;
}

}  // namespace

RunOptions parse_run_options(const Json& j) {
  RunOptions o;
  if (j.is_null()) return o;
  if (!j.is_object()) throw Error(ErrorKind::kParse, "options must be a JSON object");
  static const std::set<std::string> known = {
      "order", "seed", "seeds", "trials", "m", "n", "max_markings", "max-markings", "max_cones", "max-cones",
      "max_generators", "max-generators", "field", "closed", "expect_codimension", "expect-codimension", "all_orders", "all-orders"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) throw Error(ErrorKind::kParse, "unknown option '" + item.key() + "'");
  }
  try {
    if (auto v = find_key(j, {"order"})) o.order = v->get<std::string>();
    if (auto v = find_key(j, {"seed"})) o.seed = v->get<std::uint64_t>();
    if (auto v = find_key(j, {"seeds"})) o.seeds = v->get<std::vector<std::uint64_t>>();
    if (auto v = find_key(j, {"trials"})) o.trials = v->get<int>();
    if (auto v = find_key(j, {"m"})) o.m = v->get<int>();
    if (auto v = find_key(j, {"n"})) o.n = v->get<int>();
    if (auto v = find_key(j, {"max_markings", "max-markings"})) o.max_markings = v->get<std::uint64_t>();
    if (auto v = find_key(j, {"max_cones", "max-cones"})) o.max_cones = v->get<std::size_t>();
    if (auto v = find_key(j, {"max_generators", "max-generators"})) o.max_generators = v->get<std::size_t>();
    if (auto v = find_key(j, {"field"})) o.field = Field::parse(v->get<std::string>());
    if (auto v = find_key(j, {"closed"})) {
      auto mn = v->get<std::vector<int>>();
      if (mn.size() != 2) throw Error(ErrorKind::kParse, "'closed' takes [m, n]");
      o.closed = std::make_pair(mn[0], mn[1]);
    }
    if (auto v = find_key(j, {"expect_codimension", "expect-codimension"})) {
      o.expect_codimension = v->get<std::size_t>();
    }
    if (auto v = find_key(j, {"all_orders", "all-orders"})) o.all_orders = v->get<bool>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("options: ") + e.what());
  }
  if (o.trials < 1) throw Error(ErrorKind::kInvalidArgument, "trials must be positive");
  if (o.m < 1 || o.n < 1) throw Error(ErrorKind::kInvalidArgument, "m and n must be positive");
  if (o.seeds.empty()) throw Error(ErrorKind::kInvalidArgument, "seeds must not be empty");
  return o;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"gb", "universal-check", "initials", "hilbert",
                                                 "gin", "betti", "matroid"};
  return names;
}

const std::vector<std::string>& driver_names() {
  static const std::vector<std::string> names = {"thm-1.1", "thm-3.1", "thm-3.2", "thm-4.1", "prop-4.2",
                                                 "cor-2.6", "thm-2.5", "lemma-2.4", "remark-1.3", "identities"};
  return names;
}

Report run_driver(std::string_view driver, const LinearMatrix* matrix, const RunOptions& o) {
  if (driver == "thm-1.1") return thm_1_1(matrix, o);
  if (driver == "thm-3.1") return thm_3("thm-3.1", matrix, o, false);
  if (driver == "thm-3.2") return thm_3("thm-3.2", matrix, o, true);
  if (driver == "thm-4.1") return thm_4("thm-4.1", matrix, o, false);
  if (driver == "prop-4.2") return thm_4("prop-4.2", matrix, o, true);
  if (driver == "cor-2.6") return cor_2_6(matrix, o);
  if (driver == "thm-2.5") return thm_2_5(o);
  if (driver == "lemma-2.4") return lemma_2_4(o);
  if (driver == "remark-1.3") return remark_1_3(matrix, o);
  if (driver == "identities") return identities(o);
  throw Error(ErrorKind::kInvalidArgument, "unknown driver '" + std::string(driver) + "'");
}

Report run_command(std::string_view command, const LinearMatrix* matrix, const RunOptions& o) {
  if (command.starts_with("verify:")) return run_driver(command.substr(7), matrix, o);
  if (command == "gb") return cmd_gb(need(matrix, command), o);
  if (command == "universal-check") return cmd_universal(need(matrix, command), o);
  if (command == "initials") return cmd_initials(need(matrix, command), o);
  if (command == "hilbert") return cmd_hilbert(matrix, o);
  if (command == "gin") return cmd_gin(need(matrix, command), o);
  if (command == "betti") return cmd_betti(need(matrix, command), o);
  if (command == "matroid") return cmd_matroid(need(matrix, command), o);
  throw Error(ErrorKind::kInvalidArgument, "unknown command '" + std::string(command) + "'");
}

}  // namespace detgb
