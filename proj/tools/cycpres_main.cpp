// Command-line front end: presentations, associated polynomials,
// abelianizations, quotient searches, cyclic covers, residual-finiteness
// certificates and Magnus expansions.
//
// Exit codes: 0 success, 1 well-formed "no result", 2 usage/parse error,
// 3 budget or bound exceeded.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycpres/abelian.hpp"
#include "cycpres/covers.hpp"
#include "cycpres/homsearch.hpp"
#include "cycpres/intpoly.hpp"
#include "cycpres/io.hpp"
#include "cycpres/json_io.hpp"
#include "cycpres/permgrp.hpp"
#include "cycpres/present.hpp"
#include "cycpres/rescert.hpp"
#include "cycpres/words.hpp"

namespace {

using cycpres::json;

constexpr int kExitOk = 0;
constexpr int kExitNoResult = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string format = "json";
  bool verify = false;
  int threads = 1;  // hint only; outputs are schedule-independent
};

std::int64_t default_budget() {
  if (const char* env = std::getenv("CYCPRES_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (...) {
      throw cycpres::ParseError("bad CYCPRES_BUDGET value");
    }
  }
  return cycpres::kDefaultBudget;
}

void emit(const Options& opt, const json& j,
          const std::string& text_summary) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_summary << "\n";
}

cycpres::CyclicWordFamily family_from(const std::string& word_text, int d) {
  cycpres::Word v = cycpres::parse_word(word_text);
  if (d > 0) return cycpres::CyclicWordFamily(v, d);
  return cycpres::CyclicWordFamily(v);
}

json polynomial_json(const cycpres::IntPolynomial& f) {
  json coeffs = json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(c.get_str());
  return coeffs;
}

json classification_json(const cycpres::CyclotomicClassification& c) {
  json j;
  switch (c.kind) {
    case cycpres::CyclotomicKind::zero: j["kind"] = "zero"; break;
    case cycpres::CyclotomicKind::unit_monomial: j["kind"] = "unit_monomial"; break;
    case cycpres::CyclotomicKind::cyclotomic_type: j["kind"] = "cyclotomic_type"; break;
    case cycpres::CyclotomicKind::other: j["kind"] = "other"; break;
  }
  if (c.kind == cycpres::CyclotomicKind::cyclotomic_type ||
      c.kind == cycpres::CyclotomicKind::unit_monomial) {
    j["sign"] = c.sign;
    j["shift"] = c.shift;
  }
  if (c.kind == cycpres::CyclotomicKind::cyclotomic_type) {
    json factors = json::array();
    for (auto [m, mult] : c.factors)
      factors.push_back(json{{"m", m}, {"multiplicity", mult}});
    j["factors"] = factors;
  }
  return j;
}

json perm_json(const cycpres::Permutation& p) { return json(p.img); }

json hom_images_json(const std::vector<cycpres::Permutation>& images) {
  json j = json::array();
  for (const auto& p : images) j.push_back(perm_json(p));
  return j;
}

json abelian_json(const cycpres::AbelianGroupStructure& a) {
  json j;
  j["free_rank"] = a.free_rank;
  json torsion = json::array();
  for (const auto& t : a.torsion) torsion.push_back(t.get_str());
  j["torsion"] = torsion;
  return j;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cycpres::ParseError("cannot open file: " + path);
  return json::parse(in);
}

// --- subcommand implementations ---------------------------------------------

int run_present_cyclic(const Options& opt, const std::string& word, int d,
                       int n) {
  auto family = family_from(word, d);
  auto p = cycpres::cyclic_presentation(family, n);
  json j;
  j["input"] = {{"word", word}, {"n", n}, {"d", family.d}};
  j["presentation"] = cycpres::presentation_to_json(p);
  emit(opt, j, j["presentation"].dump());
  return kExitOk;
}

int run_present_two_gen(const Options& opt, const std::string& word, int d,
                        int n) {
  auto family = family_from(word, d);
  cycpres::Word w = cycpres::v_to_w(family);
  auto p = cycpres::h_n_presentation(w, n);
  json j;
  j["input"] = {{"word", word}, {"n", n}, {"d", family.d}};
  j["w"] = cycpres::print_word(w, cycpres::NameTable::two_generator());
  j["presentation"] = cycpres::presentation_to_json(p);
  emit(opt, j, "w = " + j["w"].get<std::string>());
  return kExitOk;
}

int run_fbc_check(const Options& opt, const std::string& word, int d) {
  auto family = family_from(word, d);
  auto fbc = cycpres::free_by_cyclic_check(family);
  json j;
  j["input"] = {{"word", word}, {"d", family.d}};
  if (!fbc) {
    j["free_by_cyclic"] = false;
    emit(opt, j, "not free-by-cyclic");
    return kExitNoResult;
  }
  auto names = cycpres::NameTable::default_names(fbc->rank);
  json images = json::array();
  for (const auto& img : fbc->alpha.images)
    images.push_back(cycpres::print_word(img, names));
  j["free_by_cyclic"] = true;
  j["rank"] = fbc->rank;
  j["smallest_index"] = fbc->smallest_index;
  j["largest_index"] = fbc->largest_index;
  j["alpha"] = images;
  emit(opt, j, "free-by-cyclic of rank " + std::to_string(fbc->rank));
  return kExitOk;
}

int run_poly_assoc(const Options& opt, const std::string& word, int d,
                   bool classify) {
  auto family = family_from(word, d);
  auto f = cycpres::associated_polynomial(family);
  json j;
  j["input"] = {{"word", word}, {"d", family.d}};
  j["coefficients"] = polynomial_json(f);
  if (classify) {
    auto c = cycpres::classify_cyclotomic_type(f);
    if (opt.verify &&
        (c.kind == cycpres::CyclotomicKind::cyclotomic_type ||
         c.kind == cycpres::CyclotomicKind::unit_monomial) &&
        c.reconstruct() != f)
      throw std::logic_error("verify: classification does not reconstruct f");
    j["classification"] = classification_json(c);
  }
  emit(opt, j, j.dump());
  return kExitOk;
}

int run_ab(const Options& opt, const std::string& word, int d, int n,
           const std::string& presentation_file) {
  json j;
  cycpres::AbelianGroupStructure a;
  if (!presentation_file.empty()) {
    auto p = cycpres::presentation_from_json(load_json_file(presentation_file));
    a = cycpres::abelianization(p);
    j["input"] = {{"presentation", presentation_file}};
  } else {
    auto family = family_from(word, d);
    auto p = cycpres::cyclic_presentation(family, n);
    a = cycpres::abelianization(p);
    j["input"] = {{"word", word}, {"n", n}, {"d", family.d}};
    if (opt.verify) {
      // Independent route: resultant of f_v against t^n - 1 must match the
      // invariant-factor product up to sign when nonzero.
      auto f = cycpres::associated_polynomial(family);
      mpz_class res = cycpres::resultant_with_cyclic(f, n);
      if (res != 0) {
        mpz_class prod = 1;
        for (const auto& t : a.torsion) prod *= t;
        if (a.free_rank != 0 || (prod != res && prod != -res))
          throw std::logic_error("verify: resultant cross-check failed");
      }
    }
  }
  json body = abelian_json(a);
  j["free_rank"] = body["free_rank"];
  j["torsion"] = body["torsion"];
  emit(opt, j, body.dump());
  return kExitOk;
}

int run_quotient_scan(const Options& opt, const std::string& presentation_file,
                      const std::string& target, std::int64_t budget) {
  auto p = cycpres::presentation_from_json(load_json_file(presentation_file));
  auto t = cycpres::named_group(target);
  auto report = cycpres::quotient_scan(p, t, target, budget);
  json j;
  j["input"] = {{"presentation", presentation_file}, {"target", target},
                {"budget", budget}};
  j["target"] = report.target_name;
  j["hom_count"] = report.hom_count;
  j["surjection_count"] = report.surjection_count;
  j["all_images_cyclic"] = report.all_images_cyclic;
  if (report.sample_surjection)
    j["sample_surjection"] = hom_images_json(report.sample_surjection->images);
  j["note"] = "absence under budget is evidence, not proof";
  emit(opt, j,
       "homs: " + std::to_string(report.hom_count) +
           ", surjections: " + std::to_string(report.surjection_count));
  return report.surjection_count > 0 ? kExitOk : kExitNoResult;
}

int run_quotient_find(const Options& opt, const std::string& word, int d,
                      const std::string& targets_csv, int max_n,
                      std::int64_t budget) {
  auto family = family_from(word, d);
  auto fbc = cycpres::free_by_cyclic_check(family);
  if (!fbc) {
    json j;
    j["input"] = {{"word", word}, {"targets", targets_csv}};
    j["error"] = "word is not free-by-cyclic; pipeline inapplicable";
    emit(opt, j, "not free-by-cyclic");
    return kExitNoResult;
  }
  std::vector<std::pair<std::string, cycpres::PermGroup>> targets;
  for (const auto& name : split_csv(targets_csv))
    targets.emplace_back(name, cycpres::named_group(name));
  auto sched = cycpres::simple_quotient_schedule(family, *fbc, targets, budget);
  if (max_n > 0 && sched.n > max_n) {
    json j;
    j["input"] = {{"word", word}, {"targets", targets_csv}, {"max_n", max_n}};
    j["required_n"] = sched.n;
    j["error"] = "smallest valid cover degree exceeds --max-n";
    emit(opt, j, "required n exceeds max-n");
    return kExitNoResult;
  }
  json j;
  j["input"] = {{"word", word}, {"targets", targets_csv}, {"d", family.d},
                {"budget", budget}};
  j["rank"] = fbc->rank;
  if (fbc->rank < 2)
    j["note"] = "rank 1 fiber: outside the simple-quotient hypothesis "
                "(rank >= 2); valid for abelian targets only";
  j["n"] = sched.n;
  j["period_lcm"] = sched.lcm_period;
  json progression = json::array();
  for (int k = 1, emitted = 0; emitted < 4; ++k) {
    int member = k * sched.lcm_period;
    if (member < family.d) continue;
    progression.push_back(member);
    ++emitted;
  }
  j["progression"] = progression;
  json surjections = json::array();
  for (const auto& s : sched.surjections) {
    json e;
    e["target"] = s.target_name;
    e["n"] = s.n;
    e["period"] = s.period;
    e["target_degree"] = s.target_degree;
    e["fiber_images"] = hom_images_json(s.fiber_images);
    e["images"] = hom_images_json(s.images);
    surjections.push_back(e);
  }
  j["surjections"] = surjections;
  if (opt.verify) {
    // Independent re-verification: evaluate every relator letter-by-letter.
    auto norm = cycpres::normalized_family(family);
    for (const auto& s : sched.surjections) {
      auto p = cycpres::cyclic_presentation(norm, s.n);
      for (const auto& r : p.relators)
        if (!cycpres::evaluate_word_letters(r, s.images, s.target_degree)
                 .is_identity())
          throw std::logic_error("verify: relator evaluation mismatch");
    }
  }
  std::ostringstream text;
  text << "n = " << sched.n << " (period lcm " << sched.lcm_period << ")";
  for (const auto& s : sched.surjections)
    text << "\n  " << s.target_name << ": period " << s.period
         << ", degree " << s.target_degree;
  emit(opt, j, text.str());
  return kExitOk;
}

int run_cover_present(const Options& opt, const std::string& word, int d,
                      int n) {
  auto family = family_from(word, d);
  auto fbc = cycpres::free_by_cyclic_check(family);
  if (!fbc) {
    std::cerr << "word is not free-by-cyclic\n";
    return kExitNoResult;
  }
  cycpres::SemidirectOverZ g(*fbc);
  auto p = cycpres::cover_presentation(g, n);
  json j;
  j["input"] = {{"word", word}, {"n", n}};
  j["presentation"] = cycpres::presentation_to_json(p);
  emit(opt, j, j["presentation"].dump());
  return kExitOk;
}

int run_cover_degree(const Options& opt, const std::string& word, int d,
                     const std::string& target, std::int64_t budget) {
  auto family = family_from(word, d);
  auto fbc = cycpres::free_by_cyclic_check(family);
  if (!fbc) {
    std::cerr << "word is not free-by-cyclic\n";
    return kExitNoResult;
  }
  cycpres::SemidirectOverZ g(*fbc);
  auto t = cycpres::named_group(target);
  cycpres::Presentation free_p;
  free_p.num_generators = fbc->rank;
  auto phi = cycpres::find_surjection(free_p, t, budget);
  if (!phi) {
    json j;
    j["input"] = {{"word", word}, {"target", target}};
    j["error"] = "no surjection from the fiber onto the target under budget";
    emit(opt, j, "no surjection found");
    return kExitNoResult;
  }
  int period = cycpres::cover_degree_for_target(g, phi->images, t);
  json j;
  j["input"] = {{"word", word}, {"target", target}, {"budget", budget}};
  j["period"] = period;
  j["fiber_images"] = hom_images_json(phi->images);
  j["progression"] = "every positive multiple of the period";
  emit(opt, j, "period = " + std::to_string(period));
  return kExitOk;
}

int run_rf_certificate(const Options& opt, const std::string& endo_text,
                       const std::vector<std::string>& witness_texts) {
  auto [theta, names] = cycpres::parse_endomorphism(endo_text);
  json j;
  j["input"] = {{"endo", endo_text}, {"witnesses", witness_texts}};

  cycpres::IntMatrix theta_bar = cycpres::abelianized_matrix(theta);
  mpz_class det = cycpres::determinant(theta_bar);
  json matrix = json::array();
  for (int r = 0; r < theta_bar.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < theta_bar.cols(); ++c)
      row.push_back(theta_bar.at(r, c).get_str());
    matrix.push_back(row);
  }
  j["abelianized_matrix"] = matrix;
  j["det"] = det.get_str();

  // Per-prime invertibility report; singular primes come with mod-p kernel
  // classes (e.g. the class of a d for the Grigorchuk substitution mod 2).
  json primes = json::array();
  for (int p : {2, 3, 5}) {
    json e;
    e["p"] = p;
    bool invertible = cycpres::det_mod_p(theta_bar, p) != 0;
    e["invertible_mod_p"] = invertible;
    if (!invertible) {
      json kernel = json::array();
      for (const auto& v : cycpres::kernel_mod_p(theta_bar, p)) {
        json vec = json::array();
        std::string word;
        for (std::size_t i = 0; i < v.size(); ++i) {
          vec.push_back(v[i]);
          for (int k = 0; k < v[i]; ++k)
            word += (word.empty() ? "" : " ") + names.name(static_cast<int>(i));
        }
        kernel.push_back(json{{"vector", vec}, {"class", word}});
      }
      e["kernel"] = kernel;
    }
    primes.push_back(e);
  }
  j["mod_p_report"] = primes;

  if (det == 0) {
    // The determinant test is inapplicable; the mod-p report above documents
    // the failing invertibility hypothesis per prime.
    j["applicable"] = false;
    emit(opt, j, "det = 0: determinant test inapplicable");
    return kExitNoResult;
  }

  std::vector<std::string> wit_names = names.names();
  wit_names.push_back("t");
  cycpres::NameTable wtable(wit_names);
  std::vector<cycpres::Word> witnesses;
  for (const auto& text : witness_texts)
    witnesses.push_back(cycpres::parse_word(text, wtable));

  auto cert = cycpres::rf_certificate(theta, witnesses);
  j["applicable"] = true;
  j["prime"] = cert.prime;
  json wits = json::array();
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    const auto& w = cert.witnesses[i];
    json e;
    e["word"] = witness_texts[i];
    e["t_exponent"] = w.t_exponent;
    if (w.t_exponent != 0) {
      e["separation"] = "cyclic quotient (nonzero t-exponent)";
    } else {
      e["separation"] = "fiber Magnus expansion";
      e["fiber_form"] = cycpres::print_word(*w.fiber_form, names);
      e["degree"] = *w.degree;
      if (opt.verify &&
          cycpres::magnus_expand(*w.fiber_form, cert.prime, *w.degree)
              .is_one())
        throw std::logic_error("verify: separating degree not separating");
    }
    wits.push_back(e);
  }
  j["witnesses"] = wits;
  emit(opt, j,
       "det = " + det.get_str() + ", p = " + std::to_string(cert.prime));
  return kExitOk;
}

int run_rf_pullback(const Options& opt, const std::string& endo_text,
                    const std::string& subgroup_file) {
  auto [theta, names] = cycpres::parse_endomorphism(endo_text);
  auto h = cycpres::subgroup_from_json(load_json_file(subgroup_file), names);
  auto orbit = cycpres::pullback_orbit(theta, h);
  json j;
  j["input"] = {{"endo", endo_text}, {"subgroup", subgroup_file}};
  j["preperiod"] = orbit.preperiod;
  j["period"] = orbit.period;
  json chain = json::array();
  for (const auto& s : orbit.chain)
    chain.push_back(cycpres::subgroup_to_json(s, names));
  j["chain"] = chain;
  json indices = json::array();
  for (const auto& s : orbit.chain) indices.push_back(s.index);
  j["indices"] = indices;
  emit(opt, j,
       "preperiod " + std::to_string(orbit.preperiod) + ", period " +
           std::to_string(orbit.period));
  return kExitOk;
}

int run_magnus(const Options& opt, const std::string& word_text, int p,
               int degree, bool separating) {
  cycpres::Word w = cycpres::parse_word(word_text);
  json j;
  j["input"] = {{"word", word_text}, {"p", p}, {"degree", degree}};
  auto series = cycpres::magnus_expand(w, p, degree);
  json terms = json::array();
  for (const auto& [mono, coeff] : series.terms) {
    json e;
    e["monomial"] = mono;
    e["coefficient"] = coeff;
    terms.push_back(e);
  }
  j["terms"] = terms;
  if (separating) j["separating_degree"] = cycpres::separating_degree(w, p);
  emit(opt, j, j.dump());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclically presented groups, cyclic covers and "
               "residual-finiteness certificates"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--verify", opt.verify,
               "re-run independent verification paths");
  app.add_option("--threads", opt.threads, "worker thread hint");

  std::string word, endo_text, presentation_file, subgroup_file, target,
      targets_csv;
  std::vector<std::string> witness_texts;
  int n = 0, d = 0, max_n = 0, p_prime = 2, degree = 6;
  bool classify = false, separating = false;
  std::int64_t budget = -1;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "work-unit budget");
  };

  auto* present = app.add_subcommand("present", "build presentations");
  auto* pc = present->add_subcommand("cyclic", "G_n(v)");
  pc->add_option("--word", word)->required();
  pc->add_option("--n", n)->required();
  pc->add_option("--d", d, "ambient rank (default: inferred)");
  auto* pt = present->add_subcommand("two-gen", "H_n(w) from v");
  pt->add_option("--word", word)->required();
  pt->add_option("--n", n)->required();
  pt->add_option("--d", d);
  present->require_subcommand(1);

  auto* fbc = app.add_subcommand("fbc", "free-by-cyclic criterion");
  auto* fc = fbc->add_subcommand("check", "check a word");
  fc->add_option("--word", word)->required();
  fc->add_option("--d", d);
  fbc->require_subcommand(1);

  auto* poly = app.add_subcommand("poly", "associated polynomial");
  auto* pa = poly->add_subcommand("assoc", "coefficients of f_v");
  pa->add_option("--word", word)->required();
  pa->add_option("--d", d);
  pa->add_flag("--classify", classify, "classify cyclotomic type");
  poly->require_subcommand(1);

  auto* ab = app.add_subcommand("ab", "abelianization of G_n(v)");
  ab->add_option("--word", word);
  ab->add_option("--n", n);
  ab->add_option("--d", d);
  ab->add_option("--presentation", presentation_file, "presentation JSON");

  auto* quotient = app.add_subcommand("quotient", "finite quotient search");
  auto* qs = quotient->add_subcommand("scan", "enumerate homs to a target");
  qs->add_option("--presentation", presentation_file)->required();
  qs->add_option("--target", target)->required();
  add_budget(qs);
  auto* qf = quotient->add_subcommand("find", "cyclic-cover pipeline");
  qf->add_option("--word", word)->required();
  qf->add_option("--targets", targets_csv)->required();
  qf->add_option("--max-n", max_n);
  qf->add_option("--d", d);
  add_budget(qf);
  quotient->require_subcommand(1);

  auto* cover = app.add_subcommand("cover", "cyclic covers of F_r x| Z");
  auto* cp = cover->add_subcommand("present", "cover presentation");
  cp->add_option("--word", word)->required();
  cp->add_option("--n", n)->required();
  cp->add_option("--d", d);
  auto* cd = cover->add_subcommand("degree", "period for a target");
  cd->add_option("--word", word)->required();
  cd->add_option("--target", target)->required();
  cd->add_option("--d", d);
  add_budget(cd);
  cover->require_subcommand(1);

  auto* rf = app.add_subcommand("rf", "residual finiteness for F_r *_theta");
  auto* rc = rf->add_subcommand("certificate", "determinant test + witnesses");
  rc->add_option("--endo", endo_text)->required();
  rc->add_option("--witness", witness_texts, "witness word (repeatable)");
  auto* rp = rf->add_subcommand("pullback", "pullback orbit of a subgroup");
  rp->add_option("--endo", endo_text)->required();
  rp->add_option("--subgroup", subgroup_file)->required();
  rf->require_subcommand(1);

  auto* magnus = app.add_subcommand("magnus", "truncated Magnus expansion");
  magnus->add_option("--word", word)->required();
  magnus->add_option("--p", p_prime)->required();
  magnus->add_option("--degree", degree, "truncation degree");
  magnus->add_flag("--separating", separating, "report separating degree");

  // Let global options (--format, --verify, --threads) appear after the
  // subcommand as well as before it.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* sub : a->get_subcommands([](CLI::App*) { return true; }))
      enable_fallthrough(sub);
  };
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    enable_fallthrough(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (budget < 0) budget = default_budget();
    if (pc->parsed()) return run_present_cyclic(opt, word, d, n);
    if (pt->parsed()) return run_present_two_gen(opt, word, d, n);
    if (fc->parsed()) return run_fbc_check(opt, word, d);
    if (pa->parsed()) return run_poly_assoc(opt, word, d, classify);
    if (ab->parsed()) {
      if (presentation_file.empty() && (word.empty() || n == 0))
        throw cycpres::ParseError("ab: need --word and --n, or --presentation");
      return run_ab(opt, word, d, n, presentation_file);
    }
    if (qs->parsed()) return run_quotient_scan(opt, presentation_file, target, budget);
    if (qf->parsed())
      return run_quotient_find(opt, word, d, targets_csv, max_n, budget);
    if (cp->parsed()) return run_cover_present(opt, word, d, n);
    if (cd->parsed()) return run_cover_degree(opt, word, d, target, budget);
    if (rc->parsed()) return run_rf_certificate(opt, endo_text, witness_texts);
    if (rp->parsed()) return run_rf_pullback(opt, endo_text, subgroup_file);
    if (magnus->parsed())
      return run_magnus(opt, word, p_prime, degree, separating);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const cycpres::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const cycpres::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    if (msg.find("bound exceeded") != std::string::npos) return kExitBudget;
    return kExitNoResult;
  }
}
