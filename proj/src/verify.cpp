#include "hecke_atlas/verify.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "hecke_atlas/corpus.hpp"
#include "hecke_atlas/error.hpp"
#include "hecke_atlas/hecke.hpp"
#include "hecke_atlas/kernels.hpp"
#include "hecke_atlas/support.hpp"

namespace hecke_atlas::verify {

using params::LDParameter;

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Flagged: return "flagged";
  }
  return "?";
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Case make_case(std::string input, std::string expected, std::string actual, Status status) {
  Case c;
  c.digest = fnv1a_hex(input);
  c.input = std::move(input);
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.status = status;
  return c;
}

Case compare(std::string input, std::string expected, std::string actual) {
  const Status s = expected == actual ? Status::Pass : Status::Fail;
  return make_case(std::move(input), std::move(expected), std::move(actual), s);
}

/// Runs f on every item; a thrown error turns the case into a failure.
template <class T, class F>
std::vector<Case> run_cases(Exec exec, const std::vector<T>& items, F&& f) {
  return map_indexed<Case>(exec, items.size(), [&](std::size_t i) {
    try {
      return f(items[i]);
    } catch (const std::exception& e) {
      std::ostringstream in;
      in << "item " << i;
      return make_case(in.str(), "no error", e.what(), Status::Fail);
    }
  });
}

std::vector<Case> thm11(int max_dim, Exec exec) {
  const auto inv = corpus::test_inventory();
  return run_cases(exec, corpus::supercuspidal_corpus(inv, max_dim), [](const LDParameter& phi) {
    const auto r = kernels::count_one(phi);
    std::ostringstream e, a;
    e << "G+=" << r.brute_plus << " G-=" << r.brute_minus << " total=" << r.total;
    a << "G+=" << r.formula_plus << " G-=" << r.formula_minus << " total=" << r.formula_plus + r.formula_minus;
    return compare(phi.to_string(), e.str(), a.str());
  });
}

std::vector<Case> thm16(int max_dim, Exec exec) {
  const auto inv = corpus::test_inventory();
  return run_cases(exec, corpus::normed_corpus(inv, max_dim), [&](const LDParameter& phi0) {
    const auto pairs = support::cuspidal_pairs(inv, phi0);
    const int n = phi0.ambient.ambient_dim;
    int parity_bad = 0;
    std::int64_t expected_pairs = 0;
    for (const auto& s : support::supports(phi0)) {
      const auto phi = support::build_phi_S(inv, phi0, s);
      if ((phi.L_S - n) % 2 != 0) ++parity_bad;
      expected_pairs += params::count_supercuspidals(phi.phi_S, 1) + params::count_supercuspidals(phi.phi_S, -1);
    }
    std::ostringstream e, a;
    e << "parity_bad=0 pairs=" << expected_pairs << " duplicates=0";
    a << "parity_bad=" << parity_bad << " pairs=" << pairs.pairs.size() << " duplicates=" << pairs.duplicates.size();
    Case c = compare(phi0.to_string(), e.str(), a.str());
    if (c.status == Status::Pass && pairs.degenerate > 0) {
      c.status = Status::Flagged;
      c.actual += " degenerate=" + std::to_string(pairs.degenerate);
    }
    return c;
  });
}

/// Independent restatement of the three descriptor cases.
hecke::HeckeFactor expected_factor(const support::Orbit& o, int mpm, int ap, int am) {
  const int t = o.cls->torsion;
  hecke::HeckeFactor f;
  f.t = t;
  f.internal2 = f.end_long2 = f.end_short2 = 2 * t;
  if (!o.self_dual) {
    f.family = hecke::RootFamily::GL;
    f.size = o.m;
    return f;
  }
  f.family = hecke::RootFamily::SO;
  if (o.of_type_plus && o.of_type_minus && ap == 0 && am == 0) {
    f.size = o.m;
    f.extended = true;
    return f;
  }
  const int kp = o.of_type_plus ? 0 : 1, km = o.of_type_minus ? 0 : 1;
  f.size = o.m - mpm + 1;
  f.equal = false;
  f.end_long2 = t * (2 * ap + 2 * am + kp + km);
  const int d = 2 * ap - 2 * am + kp - km;
  f.end_short2 = t * (d < 0 ? -d : d);
  return f;
}

std::vector<Case> thm18(int max_dim, Exec exec) {
  const auto inv = corpus::test_inventory();
  return run_cases(exec, corpus::normed_corpus(inv, max_dim), [&](const LDParameter& phi0) {
    const auto orbs = support::orbits(phi0);
    int even_case3 = 0, mismatched = 0;
    for (const auto& s : support::supports(phi0)) {
      const auto desc = hecke::hecke_descriptor(phi0, s);
      for (std::size_t i = 0; i < orbs.size(); ++i) {
        const auto [ap, am] = s.entries[i];
        const auto f = expected_factor(orbs[i], support::m_pm(orbs, s, i), ap, am);
        if (!f.equal && f.size % 2 == 0) ++even_case3;
        if (!(f == desc[i])) ++mismatched;
      }
    }
    std::string why;
    const bool factored = hecke::factorization_check(inv, phi0, &why);
    std::ostringstream a;
    a << "even_case3=" << even_case3 << " mismatched=" << mismatched << " factorization=" << (factored ? "ok" : why);
    return compare(phi0.to_string(), "even_case3=0 mismatched=0 factorization=ok", a.str());
  });
}

std::string row_key(int dp, int dm, const hecke::HeckeFactor& f, const std::string& bucket) {
  return "(" + std::to_string(dp) + "," + std::to_string(dm) + ") " + f.to_string() + " " + bucket;
}

std::string render(const std::map<std::string, int>& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (v == 0) continue;
    if (!out.empty()) out += "; ";
    out += k + " x" + std::to_string(v);
  }
  return out;
}

std::map<std::string, int> derived_buckets(hecke::Kind kind, int rank) {
  std::map<std::string, int> out;
  for (const auto& r : hecke::derived_rows(kind, rank))
    ++out[row_key(r.d_plus, r.d_minus, r.factor, r.eps_z > 0 ? "+" : "-")];
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<Case> thm31(int max_d, Exec exec) {
  return run_cases(exec, range(1, max_d), [](int d) {
    std::map<std::string, int> table;
    for (const auto& r : hecke::specialize(hecke::Kind::SoOdd, d))
      table[row_key(r.d_plus, r.d_minus, r.factor, hecke::bucket_name(r.bucket))] += r.mult;
    return compare("so-odd d=" + std::to_string(d), render(table), render(derived_buckets(hecke::Kind::SoOdd, d)));
  });
}

struct EpsItem {
  hecke::Kind kind;
  int d;
  int dp;
  int dm;
};

std::vector<Case> thm32(int max_d, Exec exec) {
  std::vector<EpsItem> items;
  for (auto kind : {hecke::Kind::Sp, hecke::Kind::OEven})
    for (int d = 1; d <= max_d; ++d) {
      std::map<std::pair<int, int>, bool> seen;
      for (const auto& r : hecke::specialize(kind, d))
        if (!seen[{r.d_plus, r.d_minus}]) {
          seen[{r.d_plus, r.d_minus}] = true;
          items.push_back({kind, d, r.d_plus, r.d_minus});
        }
    }
  return run_cases(exec, items, [](const EpsItem& it) {
    const auto rows = hecke::derived_rows(it.kind, it.d);
    int plus = 0, minus = 0;
    for (const auto& r : rows)
      if (r.d_plus == it.dp && r.d_minus == it.dm) ++(r.eps_z > 0 ? plus : minus);
    std::ostringstream in, e, a;
    in << hecke::kind_name(it.kind) << " d=" << it.d << " (" << it.dp << "," << it.dm << ")";
    e << "eps+=" << hecke::epsilon_multiplicity(it.dp, it.dm, 1) << " eps-=" << hecke::epsilon_multiplicity(it.dp, it.dm, -1);
    a << "eps+=" << plus << " eps-=" << minus;
    Case c = compare(in.str(), e.str(), a.str());
    if (c.status == Status::Fail && it.kind == hecke::Kind::Sp && it.dp * it.dm == 0) c.status = Status::Flagged;
    return c;
  });
}

std::vector<Case> thm33(int max_m, Exec exec) {
  return run_cases(exec, range(2, max_m), [](int m) {
    std::map<std::string, int> table;
    for (const auto& r : hecke::specialize(hecke::Kind::Unitary, m))
      table[row_key(r.d_plus, r.d_minus, r.factor, hecke::bucket_name(r.bucket))] += r.mult;
    return compare("unitary m=" + std::to_string(m), render(table), render(derived_buckets(hecke::Kind::Unitary, m)));
  });
}

std::vector<Case> thm26(int max_dim, Exec exec) {
  const auto inv = corpus::test_inventory();
  return run_cases(exec, corpus::discrete_corpus(inv, max_dim), [&](const LDParameter& phi) {
    const auto r = kernels::matrix_one(inv, phi);
    std::ostringstream a;
    a << "scaling=" << r.scaling_ok << " gram=" << r.gram_ok << " form=" << r.form_ok << " round_trip=" << r.round_trip;
    return compare(phi.to_string(), "scaling=1 gram=1 form=1 round_trip=1", a.str());
  });
}

std::vector<Case> weyl_suite(int max_rank, bool decorated, Exec exec) {
  if (max_rank > 5) throw InputError("Weyl suites support rank at most 5");
  return run_cases(exec, kernels::weyl_cases(max_rank, decorated), [](const kernels::WeylCase& c) {
    const auto r = kernels::weyl_one(c);
    std::string input = c.levi.to_string();
    if (c.decorated) input += " " + weyl::decorations_to_string(c.decorations);
    std::ostringstream e, a;
    e << "equal=" << r.predicted << (c.decorated ? " semidirect=1" : "");
    a << "equal=" << r.observed << (c.decorated ? " semidirect=" + std::to_string(r.semidirect) : "");
    return compare(input, e.str(), a.str());
  });
}

std::vector<Case> lem22(int max_dim, Exec exec) {
  const auto inv = corpus::test_inventory();
  return run_cases(exec, corpus::semisimple_family(inv, max_dim), [&](const corpus::SInstance& in) {
    const auto phi = centralizer::parameter_of_s(inv, in.phi0, in.s);
    const auto image = centralizer::centralizer_of_image(inv, phi).group;
    const auto sc = centralizer::centralizer_of_s(in.phi0, in.s);
    // type condition: every self-dual summand has the type of its normed base point
    bool same_type = true;
    for (const auto& x : phi.summands)
      if (weil::is_self_dual(x.point) && weil::point_type(x.point) != x.point.cls->type_plus) same_type = false;
    std::ostringstream e, a;
    e << "naive~image=" << same_type << " naive~modified=" << (sc.mixed_minus_mult == 0) << " modified~image=1";
    a << "naive~image=" << sc.naive.isomorphic(image) << " naive~modified=" << sc.naive.isomorphic(sc.modified)
      << " modified~image=" << sc.modified.isomorphic(image);
    return compare(in.phi0.to_string() + " s=" + in.s.to_string(), e.str(), a.str());
  });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"thm11", "thm16", "thm18", "thm31", "thm32", "thm33", "thm26-matrix", "lemA3", "lemA4", "lem22"};
}

int default_max_rank(const std::string& suite) {
  if (suite == "thm11") return 9;
  if (suite == "thm16" || suite == "thm18" || suite == "thm26-matrix") return 8;
  if (suite == "thm31" || suite == "thm32") return 6;
  if (suite == "thm33") return 12;
  if (suite == "lemA3" || suite == "lemA4") return 4;
  if (suite == "lem22") return 6;
  throw InputError("unknown suite \"" + suite + "\"");
}

Report run_suite(const std::string& suite, int max_rank, Exec exec) {
  const int bound = max_rank == 0 ? default_max_rank(suite) : max_rank;
  if (bound < 1) throw InputError("--max-rank must be positive");
  Report r;
  r.suite = suite;
  if (suite == "thm11") r.cases = thm11(bound, exec);
  else if (suite == "thm16") r.cases = thm16(bound, exec);
  else if (suite == "thm18") r.cases = thm18(bound, exec);
  else if (suite == "thm31") r.cases = thm31(bound, exec);
  else if (suite == "thm32") r.cases = thm32(bound, exec);
  else if (suite == "thm33") r.cases = thm33(bound, exec);
  else if (suite == "thm26-matrix") r.cases = thm26(bound, exec);
  else if (suite == "lemA3") r.cases = weyl_suite(bound, false, exec);
  else if (suite == "lemA4") r.cases = weyl_suite(bound, true, exec);
  else if (suite == "lem22") r.cases = lem22(bound, exec);
  else throw InputError("unknown suite \"" + suite + "\"");
  for (const auto& c : r.cases) {
    if (c.status == Status::Pass) ++r.passed;
    else if (c.status == Status::Fail) ++r.failed;
    else ++r.flagged;
  }
  return r;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"input", c.input},
                     {"digest", c.digest},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"status", status_name(c.status)}});
  return {{"suite", r.suite}, {"cases", cases}, {"passed", r.passed}, {"failed", r.failed}, {"flagged", r.flagged}};
}

}  // namespace hecke_atlas::verify
