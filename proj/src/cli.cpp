#include "taulab/cli.hpp"

#include "taulab/audit.hpp"
#include "taulab/word_text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace taulab {

namespace {

std::string rat(const Rational& r) { return to_string(r); }

LiftedRay parse_cut(const std::string& text) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) parts.push_back(piece);
    if (parts.size() != 2 && parts.size() != 3)
        throw std::invalid_argument("heart cut must be 'a,b' or 'a,b,m', got '" + text + "'");
    try {
        const BigInt a(parts[0]), b(parts[1]);
        const BigInt m = parts.size() == 3 ? BigInt(parts[2]) : BigInt(0);
        return LiftedRay(a, b, m);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad heart cut '" + text + "'");
    }
}

EqualClassPolicy parse_policy(const std::string& text) {
    if (text == "generic") return EqualClassPolicy::generic;
    if (text == "isomorphic") return EqualClassPolicy::isomorphic;
    throw std::invalid_argument("policy must be 'generic' or 'isomorphic'");
}

std::string matrix_str(const Sl2zMatrix& m) {
    std::ostringstream os;
    os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
    return os.str();
}

std::string classification_str(const Classification& c) {
    std::ostringstream os;
    os << matrix_kind_name(c.kind);
    if (c.kind == MatrixKind::elliptic) os << ", order " << c.order;
    return os.str();
}

int cmd_tau(std::ostream& out, std::ostream& err, const std::string& word_text,
            const std::string& method, long long max_n, const std::string& cut_text, long long h,
            EqualClassPolicy policy, const std::string& sign) {
    const FunctorWord w = parse_word(word_text);
    const TauResult exact = tau_exact(w);
    out << "word: " << format_word(w) << "\n";
    out << "matrix: " << matrix_str(word_matrix(w)) << "\n";
    out << "classification: " << classification_str(*exact.certificate) << "\n";
    out << "tau: " << rat(exact.value) << "\n";
    if (method == "exact") return 0;

    const DObject g = standard_generator(h, &err);
    TauResult limit;
    if (method == "heart") {
        limit = tau_heart_limit(w, HeartCut(parse_cut(cut_text)), g, max_n);
        out << "method: heart_limit (cut " << cut_text << ")\n";
    } else {
        limit = tau_ext_limit(w, g, max_n, sign == "minus" ? ExtSign::minus : ExtSign::plus, policy);
        out << "method: ext_limit (sign " << sign << ")\n";
    }
    out << "n,ratio\n";
    for (std::size_t i = 0; i < limit.ratios.size(); ++i)
        out << i + 1 << "," << rat(limit.ratios[i]) << "\n";
    out << "enclosure: [" << rat(limit.enclosure_lo) << "," << rat(limit.enclosure_hi) << "]\n";
    const bool inside = limit.enclosure_lo <= exact.value && exact.value <= limit.enclosure_hi;
    out << "enclosure_contains_exact: " << (inside ? "yes" : "no") << "\n";
    return 0;
}

int cmd_converge(std::ostream& out, std::ostream& err, const std::string& word_text, long long max_n,
                 std::vector<std::string> cut_texts, long long h, EqualClassPolicy policy,
                 const std::string& entropy_t) {
    const FunctorWord w = parse_word(word_text);
    const DObject g = standard_generator(h, &err);
    const Rational exact = tau_exact(w).value;
    if (cut_texts.empty()) cut_texts.push_back("1,0");
    std::vector<LiftedRay> cut_rays;
    cut_rays.reserve(cut_texts.size());
    for (const std::string& t : cut_texts) cut_rays.push_back(parse_cut(t));

    std::vector<DObject> orbit;
    orbit.reserve(static_cast<std::size_t>(max_n));
    DObject e = g;
    for (long long n = 1; n <= max_n; ++n) {
        e = apply_word_obj(w, e);
        orbit.push_back(e);
    }
    std::vector<BigInt> ep, em;
    ep.reserve(orbit.size());
    em.reserve(orbit.size());
    for (const DObject& fn : orbit) {
        ep.push_back(eps_plus(g, fn, policy));
        em.push_back(eps_minus(g, fn, policy));
    }

    out << "# tau_exact " << rat(exact) << "\n";
    for (std::size_t ci = 0; ci < cut_rays.size(); ++ci) {
        const HeartCut cut(cut_rays[ci]);
        if (ci > 0) out << "\n";
        out << "# heart-cut " << cut_texts[ci] << "\n";
        out << "n,phi_plus,phi_minus,eps_plus,eps_minus,"
               "phi_plus_ratio,eps_plus_ratio,eps_minus_ratio,enclosure_lo,enclosure_hi\n";
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            const BigInt n(i + 1);
            const BigInt pp = phi_plus(cut, orbit[i]);
            const BigInt pm = phi_minus(cut, orbit[i]);
            out << n << "," << pp << "," << pm << "," << ep[i] << "," << em[i] << ","
                << rat(Rational(pp, n)) << "," << rat(Rational(ep[i], n)) << ","
                << rat(Rational(em[i], n)) << "," << rat(Rational(pp - 2, n)) << ","
                << rat(Rational(pp + 2, n)) << "\n";
        }
    }
    if (!entropy_t.empty()) {
        const Rational t(entropy_t);
        const EntropyBound b = entropy_lower_bound(w, g, t, max_n);
        out << "# entropy_lower_bound t=" << rat(t) << " n=" << max_n << ": " << rat(b.lower_bound)
            << "\n";
        out << "# ext_growth_entropy (approximate diagnostic): "
            << ext_growth_entropy(w, g, t, max_n, policy) << "\n";
    }
    return 0;
}

nlohmann::json report_json(const AuditReport& r, const std::string& policy_text) {
    nlohmann::json j;
    j["version"] = 1;
    j["seed"] = r.seed;
    j["config"] = {
        {"pairs", r.pairs_tested}, {"max_len", r.max_len},        {"dim", r.dim},
        {"ineq_max_n", r.ineq_max_n}, {"policy", policy_text},
    };
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [k, v] : r.histogram) hist[to_string(k)] = v;
    nlohmann::json hist_tilde = nlohmann::json::object();
    for (const auto& [k, v] : r.histogram_tilde) hist_tilde[to_string(k)] = v;
    nlohmann::json violations = nlohmann::json::array();
    for (const AuditViolation& v : r.violations)
        violations.push_back({{"pair_index", v.pair_index}, {"kind", v.kind}, {"detail", v.detail}});
    j["results"] = {
        {"pairs_tested", r.pairs_tested},
        {"max_tau_defect", to_string(r.max_tau_defect)},
        {"max_tilde_defect", to_string(r.max_tilde_defect)},
        {"max_spread", to_string(r.max_spread)},
        {"inequality_violations", r.inequality_violations},
        {"bounds",
         {{"tilde_defect", to_string(BigInt(6 * r.dim))},
          {"tau_defect", to_string(BigInt(12 * r.dim))},
          {"spread", to_string(BigInt(3 * r.dim))}}},
        {"histogram", hist},
        {"histogram_tilde", hist_tilde},
        {"violations", violations},
    };
    return j;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

int cmd_audit(std::ostream& out, std::ostream& err, long long pairs, long long max_len,
              std::uint64_t seed, long long dim, long long threads, const std::string& policy_text,
              long long ineq_max_n, const std::string& out_path) {
    WordSampler sampler;
    sampler.seed = seed;
    sampler.max_len = static_cast<int>(max_len);
    const AuditReport r = audit_run(sampler, pairs, static_cast<int>(dim),
                                    static_cast<int>(threads), parse_policy(policy_text), ineq_max_n);
    const std::string text = report_json(r, policy_text).dump(2) + "\n";

    if (out_path.empty()) {
        out << text;
    } else {
        std::string base = out_path;
        if (base.size() > 5 && base.substr(base.size() - 5) == ".json") base.resize(base.size() - 5);
        std::ostringstream hist, hist_tilde;
        hist << "defect,count\n";
        for (const auto& [k, v] : r.histogram) hist << to_string(k) << "," << v << "\n";
        hist_tilde << "defect,count\n";
        for (const auto& [k, v] : r.histogram_tilde) hist_tilde << to_string(k) << "," << v << "\n";
        if (!write_file(out_path, text, err) ||
            !write_file(base + ".histogram.csv", hist.str(), err) ||
            !write_file(base + ".histogram_tilde.csv", hist_tilde.str(), err))
            return 2;
        out << "report: " << out_path << "\n";
        out << "histograms: " << base << ".histogram.csv, " << base << ".histogram_tilde.csv\n";
    }
    if (!r.pass()) {
        err << "audit violations: " << r.violations.size() << "\n";
        return 3;
    }
    return 0;
}

int cmd_ext_table(std::ostream& out, std::ostream& err, const std::string& word_text, long long steps,
                  long long h, EqualClassPolicy policy) {
    const FunctorWord w = parse_word(word_text);
    const DObject g = standard_generator(h, &err);
    DObject e = g;
    for (long long i = 0; i < steps; ++i) e = apply_word_obj(w, e);
    const ExtTable table = ext_total(g, e, policy);
    out << "degree,dim\n";
    for (const auto& [k, v] : table) out << k << "," << v << "\n";
    if (table.empty()) {
        out << "# no nonzero Hom in any degree\n";
        return 0;
    }
    out << "eps_plus," << eps_plus(g, e, policy) << "\n";
    out << "eps_minus," << eps_minus(g, e, policy) << "\n";
    return 0;
}

int cmd_orbit(std::ostream& out, std::ostream& err, const std::string& word_text, long long steps,
              long long h) {
    const FunctorWord w = parse_word(word_text);
    const DObject g = standard_generator(h, &err);
    const HeartCut cut = HeartCut::coh();
    out << "n,atom,u_x,u_y,sheet,heart_degree\n";
    DObject e = g;
    for (long long n = 0; n <= steps; ++n) {
        for (std::size_t i = 0; i < e.atoms.size(); ++i) {
            const LiftedRay& ray = e.atoms[i].ray;
            out << n << "," << i << "," << ray.dir_x() << "," << ray.dir_y() << "," << ray.sheet()
                << "," << heart_degree(ray, cut.s) << "\n";
        }
        if (n < steps) e = apply_word_obj(w, e);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact shifting numbers of autoequivalence words on an elliptic curve"};
    app.name("taulab");
    app.require_subcommand(1);

    std::string word_text, out_path, entropy_t;
    std::string method = "exact", sign = "plus", policy_text = "generic", cut_text = "1,0";
    std::vector<std::string> cut_texts;
    long long tau_max_n = 32, conv_max_n = 32, ext_steps = 1, orbit_steps = 8;
    long long h = 3, pairs = 10000, max_len = 16, dim = 1, threads = 1, ineq_max_n = 16;
    std::uint64_t seed = 0;

    const std::string word_help = "word text, e.g. 'T S^-1 [1]'";
    const std::string h_help = "degree of the generator's ample summand (default 3)";
    const std::string policy_help = "Hom policy for equal-class atoms";

    CLI::App* tau = app.add_subcommand("tau", "shifting number of a word, exact or as a limit");
    tau->add_option("--word", word_text, word_help)->required();
    tau->add_option("--method", method, "exact, heart, or ext")
        ->check(CLI::IsMember({"exact", "heart", "ext"}));
    tau->add_option("--max-n", tau_max_n, "iterations for limit methods")->check(CLI::PositiveNumber);
    tau->add_option("--heart-cut", cut_text, "cut ray 'a,b' or 'a,b,m' for the heart method");
    tau->add_option("--sign", sign, "which ext limit")->check(CLI::IsMember({"plus", "minus"}));
    tau->add_option("--generator-degree", h, h_help);
    tau->add_option("--policy", policy_text, policy_help)
        ->check(CLI::IsMember({"generic", "isomorphic"}));

    CLI::App* conv = app.add_subcommand("converge", "per-n convergence table as CSV");
    conv->add_option("--word", word_text, word_help)->required();
    conv->add_option("--max-n", conv_max_n, "last n of the table")->check(CLI::PositiveNumber);
    conv->add_option("--heart-cut", cut_texts, "cut ray 'a,b[,m]'; repeat for several blocks");
    conv->add_option("--generator-degree", h, h_help);
    conv->add_option("--policy", policy_text, policy_help)
        ->check(CLI::IsMember({"generic", "isomorphic"}));
    conv->add_option("--entropy-t", entropy_t,
                     "also print the entropy lower bound and the approximate growth diagnostic at "
                     "this t (rational, nonzero)");

    CLI::App* audit = app.add_subcommand("audit", "randomized defect and inequality audit");
    audit->add_option("--pairs", pairs, "number of word pairs")->check(CLI::PositiveNumber);
    audit->add_option("--max-len", max_len, "maximal word length")->check(CLI::PositiveNumber);
    audit->add_option("--seed", seed, "sampler seed");
    audit->add_option("--dim", dim, "product dimension d")->check(CLI::PositiveNumber);
    audit->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    audit->add_option("--ineq-max-n", ineq_max_n, "n range of the inequality suite")
        ->check(CLI::PositiveNumber);
    audit->add_option("--policy", policy_text, policy_help)
        ->check(CLI::IsMember({"generic", "isomorphic"}));
    audit->add_option("--out", out_path, "write the JSON report and histogram CSVs here");

    CLI::App* ext = app.add_subcommand("ext-table", "Ext table of (G, F^n G) by degree");
    ext->add_option("--word", word_text, word_help + " (empty = identity)");
    ext->add_option("--n", ext_steps, "how many times to apply the word")
        ->check(CLI::NonNegativeNumber);
    ext->add_option("--generator-degree", h, h_help);
    ext->add_option("--policy", policy_text, policy_help)
        ->check(CLI::IsMember({"generic", "isomorphic"}));

    CLI::App* orbit = app.add_subcommand("orbit", "lifted-ray orbit of the generator's atoms");
    orbit->add_option("--word", word_text, word_help)->required();
    orbit->add_option("--n", orbit_steps, "orbit length")->check(CLI::NonNegativeNumber);
    orbit->add_option("--generator-degree", h, h_help);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const EqualClassPolicy policy = parse_policy(policy_text);
        if (app.got_subcommand(tau))
            return cmd_tau(out, err, word_text, method, tau_max_n, cut_text, h, policy, sign);
        if (app.got_subcommand(conv))
            return cmd_converge(out, err, word_text, conv_max_n, cut_texts, h, policy, entropy_t);
        if (app.got_subcommand(audit))
            return cmd_audit(out, err, pairs, max_len, seed, dim, threads, policy_text, ineq_max_n,
                             out_path);
        if (app.got_subcommand(ext)) return cmd_ext_table(out, err, word_text, ext_steps, h, policy);
        if (app.got_subcommand(orbit)) return cmd_orbit(out, err, word_text, orbit_steps, h);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace taulab
