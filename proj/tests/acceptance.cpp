// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned in the check itself; nothing here is floating
// point except the byte-for-byte CLI comparison, which is exact anyway.

#include "oracles.hpp"
#include "taulab/audit.hpp"
#include "taulab/cli.hpp"
#include "taulab/word_text.hpp"

#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace taulab;
using namespace taulab::testing;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

template <typename Fn>
void criterion(int num, const std::string& what, Fn&& body) {
    try {
        std::string detail;
        const bool ok = body(detail);
        report(num, what, ok, detail);
    } catch (const std::exception& e) {
        report(num, what, false, std::string("exception: ") + e.what());
    }
}

std::vector<FunctorWord> sample_words(std::uint64_t seed, int max_len, int count) {
    WordSampler s;
    s.seed = seed;
    s.max_len = max_len;
    std::vector<FunctorWord> words;
    words.reserve(count);
    for (int i = 0; i < count; ++i) words.push_back(word_at(s, i));
    return words;
}

int worker_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main() {
    const DObject g = standard_generator();
    const std::vector<FunctorWord> words = sample_words(2026, 12, 200);
    const std::vector<HeartCut> cuts = {HeartCut::coh(), HeartCut(LiftedRay(-1, 1, 0)),
                                        HeartCut(LiftedRay(-1, 2, 0)), HeartCut(LiftedRay(-3, 1, 0))};

    criterion(1, "exact shifting numbers of the pinned words, cross-checked by orbit return",
              [&](std::string& detail) {
                  const std::vector<std::pair<std::string, Rational>> pinned = {
                      {"[1]", 1},          {"S", Rational(-1, 2)}, {"S S", -1},
                      {"T", 0},            {"T S", Rational(-1, 3)},
                  };
                  bool ok = true;
                  std::ostringstream os;
                  for (const auto& [text, expected] : pinned) {
                      const FunctorWord w = parse_word(text);
                      const Rational got = tau_exact(w).value;
                      const auto oracle = orbit_return_tau(w);
                      if (got != expected || !oracle || *oracle != expected) ok = false;
                      os << text << "=" << to_string(got) << " ";
                  }
                  const Rational hyp = tau_exact(parse_word("T^-1 S T S^-1")).value;
                  if (hyp != 0) ok = false;
                  os << "T^-1_S_T_S^-1=" << to_string(hyp);
                  detail = os.str();
                  return ok;
              });

    criterion(2, "heart-degree ratios within 2/n of tau for n <= 64 at four cuts, 200 words",
              [&](std::string& detail) {
                  long long checked = 0;
                  for (const FunctorWord& w : words) {
                      const Rational tau = tau_exact(w).value;
                      DObject e = g;
                      for (long long n = 1; n <= 64; ++n) {
                          e = apply_word_obj(w, e);
                          for (const HeartCut& cut : cuts) {
                              const Rational diff = Rational(phi_plus(cut, e)) - n * tau;
                              if (diff > 2 || diff < -2) {
                                  detail = "word '" + format_word(w) + "' cut " + cut.s.str() +
                                           " n=" + std::to_string(n);
                                  return false;
                              }
                              ++checked;
                          }
                      }
                  }
                  detail = std::to_string(checked) + " bounds checked";
                  return true;
              });

    criterion(3, "hom-range inequalities pass for every sampled word, n <= 16",
              [&](std::string& detail) {
                  long long total = 0;
                  for (const FunctorWord& w : words) {
                      const InequalityResult r = inequality_suite(w, g, 16);
                      total += static_cast<long long>(r.checks.size());
                      if (!r.pass()) {
                          detail = "word '" + format_word(w) + "'";
                          return false;
                      }
                  }
                  detail = std::to_string(total) + " checks, 0 violations";
                  return true;
              });

    criterion(4, "ext-degree extremes within 4 of n*tau, gap eps_plus - eps_minus in [0,4]",
              [&](std::string& detail) {
                  long long checked = 0;
                  for (const FunctorWord& w : words) {
                      const Rational tau = tau_exact(w).value;
                      DObject e = g;
                      for (long long n = 1; n <= 16; ++n) {
                          e = apply_word_obj(w, e);
                          const BigInt ep = eps_plus(g, e, EqualClassPolicy::generic);
                          const BigInt em = eps_minus(g, e, EqualClassPolicy::generic);
                          const Rational dp = Rational(ep) - n * tau;
                          const Rational dm = Rational(em) - n * tau;
                          const BigInt gap = ep - em;
                          if (dp > 4 || dp < -4 || dm > 4 || dm < -4 || gap < 0 || gap > 4) {
                              detail = "word '" + format_word(w) + "' n=" + std::to_string(n);
                              return false;
                          }
                          ++checked;
                      }
                  }
                  detail = std::to_string(checked) + " bounds checked";
                  return true;
              });

    std::optional<AuditReport> audit1, audit2;
    std::string audit_error;
    {
        WordSampler s1;
        s1.seed = 7;
        s1.max_len = 16;
        try {
            audit1 = audit_run(s1, 10000, 1, worker_threads());
            audit2 = audit_run(s1, 10000, 2, worker_threads());
        } catch (const std::exception& e) {
            audit_error = e.what();
        }
    }

    criterion(5, "randomized audit: integer defect <= 6d, tau defect <= 12d, no violations",
              [&](std::string& detail) {
                  if (!audit1 || !audit2) {
                      detail = "audit run threw: " + audit_error;
                      return false;
                  }
                  std::ostringstream os;
                  os << "d=1: tilde " << to_string(audit1->max_tilde_defect) << " (bound 6), tau "
                     << to_string(audit1->max_tau_defect) << " (bound 12); d=2: tilde "
                     << to_string(audit2->max_tilde_defect) << " (bound 12), tau "
                     << to_string(audit2->max_tau_defect) << " (bound 24)";
                  detail = os.str();
                  return audit1->pass() && audit1->max_tilde_defect <= 6 &&
                         audit1->max_tau_defect <= 12 && audit2->pass() &&
                         audit2->max_tilde_defect <= 12 && audit2->max_tau_defect <= 24;
              });

    criterion(6, "image spread of sampled words stays within 3d",
              [&](std::string& detail) {
                  if (!audit1 || !audit2) {
                      detail = "audit run threw: " + audit_error;
                      return false;
                  }
                  detail = "d=1: " + to_string(audit1->max_spread) + " (bound 3), d=2: " +
                           to_string(audit2->max_spread) + " (bound 6)";
                  return audit1->max_spread <= 3 && audit2->max_spread <= 6;
              });

    criterion(7, "structural invariants on 1000 random instances each",
              [&](std::string& detail) {
                  TestRng rng(777);
                  const HeartCut tilted(LiftedRay(-1, 1, 0));

                  for (int i = 0; i < 1000; ++i) {  // left shifts kill low ext degrees
                      const Atom b(random_ray(rng), 1);
                      const LiftedRay r1 = random_ray(rng);
                      // Lift the left atom strictly above the right one.
                      const BigInt want = b.shift() + 1 + rng.below(3);
                      const Atom a(r1.translated(want - Atom(r1, 0).shift()), 0);
                      const ExtTable t = ext_dims(a, b, EqualClassPolicy::isomorphic);
                      if (!t.empty() && t.begin()->first < 1) {
                          detail = "hom vanishing failed";
                          return false;
                      }
                      if (t.count(0) != 0) {
                          detail = "hom vanishing failed at degree zero";
                          return false;
                      }
                  }

                  for (int i = 0; i < 1000; ++i) {  // filtration reconstruction
                      std::vector<Atom> parts;
                      const auto count = 1 + rng.below(4);
                      for (std::uint64_t j = 0; j < count; ++j)
                          parts.push_back(Atom(random_ray(rng), static_cast<int>(rng.below(3))));
                      const DObject e(std::move(parts));
                      const HeartCut& cut = (i % 2 == 0) ? cuts[0] : tilted;
                      DObject back;
                      BigInt last;
                      bool first = true;
                      for (const auto& [k, piece] : heart_filtration(cut, e)) {
                          if (!first && !(k < last)) {
                              detail = "filtration degrees not decreasing";
                              return false;
                          }
                          last = k;
                          first = false;
                          back = direct_sum(back, piece.shifted(k));
                      }
                      if (!(back == e)) {
                          detail = "filtration does not reassemble";
                          return false;
                      }
                  }

                  for (int i = 0; i < 1000; ++i) {  // duality pairs k with 1-k
                      const Atom a(random_ray(rng), static_cast<int>(rng.below(2)));
                      const Atom b(random_ray(rng), static_cast<int>(rng.below(2)));
                      const ExtTable ab = ext_dims(a, b, EqualClassPolicy::generic);
                      const ExtTable ba = ext_dims(b, a, EqualClassPolicy::generic);
                      if (ab.size() != ba.size()) {
                          detail = "duality size mismatch";
                          return false;
                      }
                      for (const auto& [deg, dim] : ab) {
                          const auto it = ba.find(1 - deg);
                          if (it == ba.end() || it->second != dim) {
                              detail = "duality entry mismatch";
                              return false;
                          }
                      }
                  }

                  for (int i = 0; i < 1000; ++i) {  // deck equivariance
                      const FunctorWord w = random_word(rng, 6);
                      const LiftedRay x = random_ray(rng);
                      if (!(apply_word(w, x.translated(2)) == apply_word(w, x).translated(2))) {
                          detail = "translation equivariance failed";
                          return false;
                      }
                  }

                  for (int i = 0; i < 1000; ++i) {  // monotonicity
                      const FunctorWord w = random_word(rng, 6);
                      LiftedRay x = random_ray(rng), y = random_ray(rng);
                      if (y < x) std::swap(x, y);
                      if (apply_word(w, y) < apply_word(w, x)) {
                          detail = "order preservation failed";
                          return false;
                      }
                  }

                  const FunctorWord s4(std::vector<Letter>(4, Letter::mukai));
                  for (int i = 0; i < 1000; ++i) {  // fourth power of the transform
                      const LiftedRay x = random_ray(rng);
                      if (!(apply_word(s4, x) == x.translated(-2))) {
                          detail = "fourth transform power failed";
                          return false;
                      }
                  }

                  for (int i = 0; i < 1000; ++i) {  // matrices compose contravariantly
                      const FunctorWord w1 = random_word(rng, 6);
                      const FunctorWord w2 = random_word(rng, 6);
                      if (!(word_matrix(concat(w1, w2)) == word_matrix(w2) * word_matrix(w1))) {
                          detail = "matrix composition failed";
                          return false;
                      }
                  }

                  detail = "7000 instances";
                  return true;
              });

    criterion(8, "product shifting numbers add and land in the product-heart enclosure",
              [&](std::string& detail) {
                  TestRng rng(888);
                  for (int i = 0; i < 100; ++i) {
                      const FunctorWord w1 = random_word(rng, 8);
                      const FunctorWord w2 = random_word(rng, 8);
                      const ProductWord pw({w1, w2});
                      const Rational sum = tau_exact(w1).value + tau_exact(w2).value;
                      if (product_tau(pw, TauMethod::exact).value != sum) {
                          detail = "sum formula failed";
                          return false;
                      }
                      const TauResult hr = product_tau(pw, TauMethod::heart_limit, 32);
                      if (sum < hr.enclosure_lo || hr.enclosure_hi < sum) {
                          detail = "enclosure missed the sum for '" + format_word(w1) + "' x '" +
                                   format_word(w2) + "'";
                          return false;
                      }
                  }
                  detail = "100 pairs, enclosure width 1/4";
                  return true;
              });

    criterion(9, "audit reports byte-identical across repeat runs and thread counts",
              [&](std::string& detail) {
                  const std::vector<std::string> base = {"audit",     "--pairs", "300",
                                                         "--max-len", "10",      "--seed", "11"};
                  auto threaded = base;
                  threaded.push_back("--threads");
                  threaded.push_back("5");

                  std::ostringstream o1, o2, o3, e;
                  const int c1 = run_cli(base, o1, e);
                  const int c2 = run_cli(base, o2, e);
                  const int c3 = run_cli(threaded, o3, e);
                  detail = std::to_string(o1.str().size()) + " bytes";
                  if (c1 != 0 || c2 != 0 || c3 != 0) {
                      detail = "audit exit codes " + std::to_string(c1) + "," +
                               std::to_string(c2) + "," + std::to_string(c3);
                      return false;
                  }
                  return o1.str() == o2.str() && o1.str() == o3.str();
              });

    if (failures > 0) {
        std::cout << failures << " of 9 criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all 9 criteria passed" << std::endl;
    return 0;
}
