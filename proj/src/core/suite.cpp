#include "core/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "core/errors.hpp"

namespace gl2h {
namespace {

using json = nlohmann::ordered_json;
using L = SubgroupLabel;

std::string complex_string(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real();
  if (std::abs(z.imag()) > kImaginaryTolerance) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

bool close(const Complex& a, const Complex& b) { return std::abs(a - b) <= kIntegralityTolerance; }

// Collects named sub-assertions of a check.
class Tally {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    json item{{"name", name}, {"passed", ok}};
    if (!detail.empty()) item["detail"] = detail;
    items_.push_back(std::move(item));
    ++total_;
    if (ok) {
      ++passed_;
    } else if (first_failure_.empty()) {
      first_failure_ = detail.empty() ? name : name + ": " + detail;
    }
  }
  bool empty() const { return total_ == 0; }
  bool ok() const { return passed_ == total_; }
  void finish(CheckResult& r, const std::string& note = {}) const {
    r.status = ok() ? Status::Pass : Status::Fail;
    r.detail = ok() ? std::to_string(passed_) + "/" + std::to_string(total_) + " assertions" : first_failure_;
    if (!note.empty()) r.detail += "; " + note;
    r.data["assertions"] = items_;
  }

 private:
  json items_ = json::array();
  std::size_t total_ = 0, passed_ = 0;
  std::string first_failure_;
};

std::string big(const BigInt& n) { return n.get_str(); }

std::string mismatch(const BigInt& got, const BigInt& want) { return "got " + factored(got) + ", expected " + factored(want); }

json decomposition_json(const Decomposition& d) {
  json out = json::object();
  for (const auto& [chi, m] : d) out[to_string(chi)] = m;
  return out;
}

class PrimeRunner {
 public:
  PrimeRunner(std::uint32_t p, Mode mode, bool allow_large)
      : ctx_(PrimeContext::build(p)),
        mode_(mode),
        limit_(allow_large ? kHardEnumerationLimit : kDefaultEnumerationLimit) {}

  std::optional<Table2Row> table2;

  CheckResult run(Check check) {
    CheckResult r;
    r.check = check;
    const auto start = std::chrono::steady_clock::now();
    try {
      switch (check) {
        case Check::Structure: structure(r); break;
        case Check::DoubleCosets: dcosets(r); break;
        case Check::Characters: characters(r); break;
        case Check::Decompose: decompose_check(r); break;
        case Check::Relations: relations(r); break;
        case Check::Exactness: exactness(r); break;
        case Check::Nonvanishing: nonvanishing(r); break;
        case Check::Table2: table2_check(r); break;
      }
    } catch (const Error& e) {
      r.status = Status::Fail;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  std::uint32_t p() const { return ctx_.p(); }
  bool enumerable() const { return p() <= limit_; }
  bool matrix_route() const { return mode_ != Mode::Charsum && enumerable(); }
  bool sum_route() const { return mode_ != Mode::Matrix; }

  const GroupWorkspace& ws() {
    if (!ws_) ws_.emplace(ctx_, limit_);
    return *ws_;
  }
  const CharacterTable& table() {
    if (!table_) table_.emplace(ctx_);
    return *table_;
  }
  const BigInt& nprime_det() {
    if (!det_) det_ = nprime_determinant(ws());
    return *det_;
  }

  static void skip(CheckResult& r, std::string why) {
    r.status = Status::Skipped;
    r.detail = std::move(why);
  }
  std::string beyond_limit() const {
    return "p = " + std::to_string(p()) + " exceeds the enumeration limit " + std::to_string(limit_);
  }

  void structure(CheckResult& r) {
    if (!enumerable()) return skip(r, beyond_limit());
    Tally t;
    for (const auto& item : structural_checks(ws()).items) t.add(item.name, item.passed, item.detail);
    t.finish(r);
  }

  void dcosets(CheckResult& r) {
    if (!enumerable()) return skip(r, beyond_limit());
    const auto& w = ws();
    const std::uint64_t q = p();
    Tally t;
    const L labels[] = {L::G, L::B, L::N, L::NPrime, L::NDoublePrime};
    json counts = json::object();
    for (auto h : labels)
      for (auto k : labels) {
        const auto dcs = double_cosets(w, h, k);
        const std::string pair = std::string(label_name(h)) + "\\G/" + std::string(label_name(k));
        counts[pair] = dcs.size();
        std::uint64_t total = 0;
        bool consistent = true;
        for (const auto& dc : dcs) {
          total += dc.degree;
          consistent = consistent && dc.degree == dc.k_cosets.size() && dc.degree == degree(w, h, dc.rep, k);
        }
        t.add("partition " + pair, total == w.cosets(k).size(),
              std::to_string(total) + " cosets of " + std::to_string(w.cosets(k).size()));
        t.add("degrees " + pair, consistent);
      }
    r.data["double_coset_counts"] = counts;

    const std::uint32_t e = w.group().identity();
    const std::pair<std::pair<L, L>, std::uint64_t> expected[] = {
        {{L::N, L::NPrime}, (q - 1) / 2}, {{L::NPrime, L::N}, (q + 1) / 2}, {{L::N, L::B}, 2},
        {{L::B, L::N}, q},                {{L::N, L::G}, 1},                {{L::G, L::N}, q * (q + 1) / 2},
        {{L::B, L::G}, 1},                {{L::G, L::B}, q + 1},            {{L::N, L::NDoublePrime}, (q - 1) / 2},
        {{L::NDoublePrime, L::N}, (q - 1) / 2}};
    for (const auto& [pair, want] : expected) {
      const auto got = degree(w, pair.first, e, pair.second);
      t.add("deg(" + std::string(label_name(pair.first)) + std::string(label_name(pair.second)) + ")", got == want,
            std::to_string(got) + " vs " + std::to_string(want));
    }

    const auto nn = double_cosets(w, L::N, L::N);
    t.add("N\\G/N count", nn.size() == (q + 3) / 2, std::to_string(nn.size()) + " vs " + std::to_string((q + 3) / 2));
    bool degrees_ok = true;
    for (const auto& dc : nn) {
      std::uint64_t want = 1;
      if (dc.sigma_t) {
        const Residue s = *dc.sigma_t;
        want = s == 0 ? 2 * (q - 1) : s == q - 1 ? (q - 1) / 2 : q - 1;
      } else if (dc.rep != e && !w.subgroup(L::N).contains(dc.rep)) {
        degrees_ok = false;
      }
      degrees_ok = degrees_ok && dc.degree == want;
    }
    t.add("N sigma_t N degrees", degrees_ok);
    t.finish(r);
  }

  void characters(CheckResult& r) {
    Tally t;
    const auto& tab = table();
    const auto orth = orthogonality_check(tab);
    t.add("orthogonality", orth.passed, orth.failure);
    t.add("sum of squared dimensions", orth.sum_dim_squared == group_order(p()),
          std::to_string(orth.sum_dim_squared) + " vs |G| = " + std::to_string(group_order(p())));
    t.add("class count", tab.classes().size() == static_cast<std::size_t>(p()) * p() - 1);
    r.data["max_row_error"] = orth.max_row_error;
    r.data["max_column_error"] = orth.max_column_error;
    if (enumerable()) {
      std::map<ConjClassId, std::uint64_t> seen;
      for (const auto& g : ws().group().elements()) ++seen[classify(ctx_, g)];
      bool sizes_ok = seen.size() == tab.classes().size();
      for (std::size_t i = 0; sizes_ok && i < tab.classes().size(); ++i)
        sizes_ok = seen[tab.classes()[i]] == tab.class_sizes()[i];
      t.add("class sizes match enumeration", sizes_ok);
    }
    t.finish(r);
  }

  void decompose_check(CheckResult& r) {
    if (!enumerable()) return skip(r, beyond_limit());
    const auto& w = ws();
    const auto& tab = table();
    Tally t;
    json decs = json::object();
    for (auto h : {L::G, L::B, L::N, L::NPrime, L::NDoublePrime, L::C, L::CPrime, L::CDoublePrime}) {
      const auto d = decompose(w, tab, h);
      decs[std::string(label_name(h))] = decomposition_json(d);
      std::uint64_t dim = 0;
      for (const auto& [chi, m] : d) dim += m * dimension(p(), chi);
      t.add("dimension of C[G/" + std::string(label_name(h)) + "]", dim == w.cosets(h).size());
      if (h == L::G || h == L::B || h == L::N || h == L::NPrime) {
        const auto want = predicted_decomposition(ctx_, h);
        t.add("components of C[G/" + std::string(label_name(h)) + "]", d == want,
              std::to_string(d.size()) + " components, " + std::to_string(want.size()) + " predicted");
      }
    }
    r.data["decompositions"] = decs;

    const auto pn = perm_character(w, tab, L::NPrime).values;
    const auto pb = perm_character(w, tab, L::B).values;
    const auto pnn = perm_character(w, tab, L::N).values;
    const auto pg = perm_character(w, tab, L::G).values;
    bool identity_ok = true;
    for (std::size_t i = 0; i < pn.size(); ++i) identity_ok = identity_ok && pn[i] + pb[i] == pnn[i] + pg[i];
    t.add("1_N' + 1_B = 1_N + 1_G", identity_ok);

    std::string note;
    const auto mult = multiplicity_one_report(w, tab);
    json m = json::object();
    for (const auto& e : mult.entries) {
      m[std::string(label_name(e.label))] = e.max_multiplicity;
      if (e.asserted) {
        t.add("multiplicity one on C[G/" + std::string(label_name(e.label)) + "]", e.max_multiplicity <= 1);
      } else if (e.max_multiplicity > 1) {
        note += (note.empty() ? "" : ", ") + std::string("C[G/") + std::string(label_name(e.label)) +
                "] has multiplicity " + std::to_string(e.max_multiplicity);
      }
    }
    r.data["max_multiplicity"] = m;
    t.finish(r, note);
  }

  void relations(CheckResult& r) {
    if (mode_ == Mode::Charsum) return skip(r, "matrix route not requested");
    if (!enumerable()) return skip(r, beyond_limit());
    const auto& w = ws();
    const std::uint32_t q = p();
    auto pair = [&](L h, L k) { return compose(standard_operator(w, h, k), standard_operator(w, k, h)); };
    const auto nprime = pair(L::N, L::NPrime);
    const auto ndouble = pair(L::N, L::NDoublePrime);
    const auto nb = pair(L::N, L::B);
    const auto ng = pair(L::N, L::G);

    Tally t;
    const auto lhs = add(add(nprime, ndouble), nb);
    const auto rhs = add(scale(identity_operator(w, L::N), q), ng);
    t.add("NN'xN'N + NN''xN''N + NBxBN = pN + NGxGN", lhs.matrix == rhs.matrix);

    const auto dcs = double_cosets(w, L::N, L::N);
    const auto minus_one = std::find_if(dcs.begin(), dcs.end(), [&](const DoubleCoset& dc) { return dc.sigma_t == q - 1; });
    if (minus_one == dcs.end()) {
      t.add("N s_-1 N located", false);
    } else {
      const auto s = operator_of_double_coset(w, *minus_one);
      t.add("(N s_-1 N)^2 = NN''xN''N", compose(s, s).matrix == ndouble.matrix);
    }

    auto expected = [&](auto coefficient) {
      std::vector<BigInt> out;
      for (const auto& dc : dcs) out.push_back(coefficient(dc.sigma_t));
      return out;
    };
    const long half = (q - 1) / 2;
    const std::pair<std::string, std::pair<const CosetOperator*, std::vector<BigInt>>> expansions[] = {
        {"NN'xN'N expansion",
         {&nprime, expected([&](std::optional<Residue> s) { return s ? BigInt(ctx_.legendre(*s) == -1 ? 1 : 0) : BigInt(half); })}},
        {"NN''xN''N expansion",
         {&ndouble, expected([&](std::optional<Residue> s) { return s ? BigInt(ctx_.legendre(*s) == 1 ? 1 : 0) : BigInt(half); })}},
        {"NBxBN expansion", {&nb, expected([&](std::optional<Residue> s) { return s ? BigInt(*s == 0 ? 1 : 0) : BigInt(2); })}},
        {"NGxGN expansion", {&ng, expected([&](std::optional<Residue>) { return BigInt(1); })}},
    };
    json coefficients = json::object();
    for (const auto& [name, spec] : expansions) {
      const auto got = expand_in_theta_basis(w, *spec.first, dcs);
      t.add(name, got && *got == spec.second);
      if (got) {
        json row = json::array();
        for (const auto& c : *got) row.push_back(big(c));
        coefficients[name] = row;
      }
    }
    r.data["theta_coefficients"] = coefficients;
    t.finish(r);
  }

  void exactness(CheckResult& r) {
    if (!enumerable()) return skip(r, beyond_limit());
    const auto& w = ws();
    const auto& tab = table();
    const std::uint64_t q = p();
    const auto u1 = trivial_character();
    const auto v1 = steinberg_character();
    const Complex gb_want(static_cast<double>(q + 1));
    // Both routes give p - 1 here; the published value is p^2 + p - 1.
    const Complex bn_want(static_cast<double>(q - 1));
    const Complex nn_want(static_cast<double>(q * q - 1) / 4.0);
    Tally t;

    if (matrix_route()) {
      const auto seq = sequence_operators(w);
      t.add("sigma_BG o sigma_NB = 0", compose(seq.sigma_nb, seq.sigma_bg).matrix.is_zero());
      t.add("sigma_NB o sigma_N'N = 0", compose(seq.sigma_nprime_n, seq.sigma_nb).matrix.is_zero());
      const auto r_bg = exact_rank(seq.sigma_bg.matrix);
      const auto r_nb = exact_rank(seq.sigma_nb.matrix);
      const auto r_nn = exact_rank(seq.sigma_nprime_n.matrix);
      t.add("rank sigma_BG = 1", r_bg == 1, std::to_string(r_bg));
      t.add("rank sigma_NB = p", r_nb == q, std::to_string(r_nb));
      t.add("rank sigma_N'N = (p^2-p)/2", r_nn == (q * q - q) / 2, std::to_string(r_nn));
      t.add("exact over Q at Z[G/B]", r_bg + r_nb == w.cosets(L::B).size());
      t.add("exact over Q at Z[G/N]", r_nb + r_nn == w.cosets(L::N).size());
      r.data["ranks"] = {r_bg, r_nb, r_nn};

      auto pair = [&](L h, L k) { return compose(standard_operator(w, h, k), standard_operator(w, k, h)); };
      const auto gb = MatrixEigenvalues(w, tab, pair(L::G, L::B))(u1);
      const auto bn = MatrixEigenvalues(w, tab, pair(L::B, L::N))(v1);
      const auto nn_op = pair(L::N, L::NPrime);
      const auto nn = MatrixEigenvalues(w, tab, nn_op)(u1);
      t.add("matrix: U_1 on GBxBG = p+1", close(gb, gb_want), complex_string(gb));
      t.add("matrix: V_1 on BNxNB = p-1", close(bn, bn_want), complex_string(bn));
      t.add("matrix: U_1 on NN'xN'N = (p^2-1)/4", close(nn, nn_want), complex_string(nn));
      const auto image = nn_op.matrix.apply(std::vector<BigInt>(nn_op.matrix.cols(), 1));
      const BigInt scalar = (q * q - 1) / 4;
      t.add("NN'xN'N fixes the all-ones line", std::all_of(image.begin(), image.end(), [&](const BigInt& v) { return v == scalar; }));
    }

    if (sum_route()) {
      const auto gb = trace_pair_operator(w, tab, u1, L::G, L::B);
      const auto bn = trace_pair_operator(w, tab, v1, L::B, L::N);
      const auto bn_u = trace_pair_operator(w, tab, u1, L::B, L::N);
      const auto nn = trace_pair_operator(w, tab, u1, L::N, L::NPrime);
      t.add("trace: U_1 on GBxBG = p+1", close(gb, gb_want), complex_string(gb));
      t.add("trace: V_1 on BNxNB = p-1", close(bn, bn_want), complex_string(bn));
      t.add("trace: U_1 on BNxNB = 2p", close(bn_u, Complex(2.0 * q)), complex_string(bn_u));
      t.add("trace: U_1 on NN'xN'N = (p^2-1)/4", close(nn, nn_want), complex_string(nn));
      t.add("closed form: U_1 on NN'xN'N", close(lambda_nn_prime(ctx_, u1).lambda, nn_want));

      const auto hyp = exactness_hypotheses_check(w, tab);
      t.add("eigenvalue hypotheses at G, B, N, N'", hyp.passed, hyp.failure);
      json entries = json::array();
      for (const auto& e : hyp.entries)
        entries.push_back({{"position", label_name(e.position)},
                           {"character", to_string(e.character)},
                           {"lambda_eps", complex_string(e.lambda_eps)},
                           {"lambda_delta", complex_string(e.lambda_delta)},
                           {"holds", e.hypothesis_holds}});
      r.data["hypotheses"] = entries;
    }
    if (t.empty()) return skip(r, "no route applicable");
    r.data["published_V1_on_BNxNB"] = q * q + q - 1;
    t.finish(r, "V_1 on BNxNB is p-1, not the published p^2+p-1");
  }

  void nonvanishing(CheckResult& r) {
    Tally t;
    std::optional<NonvanishingReport> sums;
    if (sum_route()) {
      sums = nonvanishing_check(ctx_);
      bool nonzero = true, avoids = true;
      json entries = json::array();
      for (const auto& e : sums->entries) {
        nonzero = nonzero && e.nonzero;
        avoids = avoids && e.avoids_sqrt_p;
        json item{{"character", to_string(e.character)}, {"lambda", complex_string(e.lambda_nn_prime)}};
        if (e.sigma_eigen) item["sigma_minus_one"] = complex_string(*e.sigma_eigen);
        entries.push_back(item);
      }
      t.add("character sums: lambda(NN'xN'N) != 0", nonzero);
      t.add("character sums: lambda(N s_-1 N)^2 != p", avoids);
      r.data["eigenvalues"] = entries;
    }
    if (matrix_route()) {
      t.add("det(N'N x NN') != 0", sgn(nprime_det()) != 0);
      if (sums) {
        const auto& w = ws();
        const MatrixEigenvalues me(w, table(),
                                   compose(standard_operator(w, L::N, L::NPrime), standard_operator(w, L::NPrime, L::N)));
        for (const auto& e : sums->entries) {
          const auto got = me(e.character);
          t.add("routes agree on " + to_string(e.character), close(got, e.lambda_nn_prime),
                complex_string(got) + " vs " + complex_string(e.lambda_nn_prime));
        }
      }
    }
    if (t.empty()) return skip(r, "no route applicable");
    t.finish(r);
  }

  void table2_check(CheckResult& r) {
    Table2Row row;
    row.p = p();
    Tally t;
    const auto ref = reference_row(p());
    if (sum_route()) {
      const auto sums = table2_charsum(ctx_);
      row.det_u = sums.det_u;
      row.det_w = sums.det_w;
      row.det_x = sums.det_x;
      row.det_v = sums.det_v;
      if (ref) {
        t.add("U column", *row.det_u == expand(ref->u), mismatch(*row.det_u, expand(ref->u)));
        t.add("W column", *row.det_w == expand(ref->w), mismatch(*row.det_w, expand(ref->w)));
        t.add("X column", *row.det_x == expand(ref->x), mismatch(*row.det_x, expand(ref->x)));
        if (ref->v || row.det_v) {
          t.add("V column", ref->v && row.det_v && *row.det_v == expand(*ref->v),
                row.det_v && ref->v ? mismatch(*row.det_v, expand(*ref->v)) : "V present on one side only");
        }
      }
    }
    if (matrix_route()) {
      row.det_total = nprime_det();
      const BigInt magnitude = abs(*row.det_total);
      if (ref) t.add("C[G/N'] column", magnitude == expand(ref->total), mismatch(magnitude, expand(ref->total)));
      if (row.det_u) {
        const BigInt product = *row.det_u * *row.det_w * *row.det_x * (row.det_v ? *row.det_v : BigInt(1));
        t.add("|det| = U W X V", magnitude == product, mismatch(magnitude, product));
      }
    }
    if (!row.det_total && !row.det_u) return skip(r, beyond_limit());
    table2 = row;
    if (t.empty()) {
      r.status = Status::Pass;
      r.detail = "computed; no published row for comparison";
    } else {
      t.finish(r, ref ? "" : "no published row for comparison");
    }
    if (row.det_total) {
      r.data["det_total"] = big(abs(*row.det_total));
      r.data["det_total_sign"] = sgn(*row.det_total);
    }
    auto put = [&](const char* key, const std::optional<BigInt>& v) {
      if (v) r.data[key] = big(*v);
    };
    put("det_U", row.det_u);
    put("det_W", row.det_w);
    put("det_X", row.det_x);
    put("det_V", row.det_v);
  }

  PrimeContext ctx_;
  Mode mode_;
  std::uint32_t limit_;
  std::optional<GroupWorkspace> ws_;
  std::optional<CharacterTable> table_;
  std::optional<BigInt> det_;
};

PrimeReport run_prime(std::uint32_t p, const SuiteConfig& config) {
  PrimeRunner runner(p, config.mode, config.allow_large);
  PrimeReport rep;
  rep.p = p;
  for (auto c : config.checks) rep.results.push_back(runner.run(c));
  rep.table2 = runner.table2;
  return rep;
}

json table2_json(const Table2Row& row) {
  json out{{"p", row.p}};
  auto put = [&](const char* key, const std::optional<BigInt>& v) {
    if (!v) return;
    out[key] = big(abs(*v));
    out[std::string(key) + "_factored"] = factored(*v);
  };
  put("det_total", row.det_total);
  if (row.det_total) out["det_total_sign"] = sgn(*row.det_total);
  put("det_U", row.det_u);
  put("det_W", row.det_w);
  put("det_X", row.det_x);
  put("det_V", row.det_v);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_text(const VerificationReport& report, bool include_timing) {
  std::ostringstream os;
  os << "mode: " << mode_name(report.mode) << "\n";
  for (const auto& pr : report.primes) {
    os << "\np = " << pr.p << "  [" << (pr.passed() ? "PASS" : "FAIL") << "]\n";
    for (const auto& r : pr.results) {
      os << "  " << std::left << std::setw(8) << status_name(r.status) << std::setw(13) << check_name(r.check) << r.detail;
      if (include_timing) os << "  (" << std::fixed << std::setprecision(3) << r.seconds << "s)" << std::defaultfloat;
      os << "\n";
    }
  }
  std::vector<const Table2Row*> rows;
  for (const auto& pr : report.primes)
    if (pr.table2) rows.push_back(&*pr.table2);
  if (!rows.empty()) {
    auto cell = [](const std::optional<BigInt>& v) { return v ? factored(*v) : std::string("-"); };
    const char* headers[] = {"p", "C[G/N']", "U", "W", "X", "V"};
    std::vector<std::array<std::string, 6>> table;
    for (const auto* row : rows)
      table.push_back({std::to_string(row->p), cell(row->det_total), cell(row->det_u), cell(row->det_w),
                       cell(row->det_x), row->det_u && !row->det_v ? std::string() : cell(row->det_v)});
    std::array<std::size_t, 6> width{};
    for (std::size_t c = 0; c < 6; ++c) {
      width[c] = std::string(headers[c]).size();
      for (const auto& line : table) width[c] = std::max(width[c], line[c].size());
    }
    os << "\nDeterminants of N'N x NN'\n";
    for (std::size_t c = 0; c < 6; ++c) os << std::left << std::setw(static_cast<int>(width[c] + 2)) << headers[c];
    os << "\n";
    for (const auto& line : table) {
      for (std::size_t c = 0; c < 6; ++c) os << std::left << std::setw(static_cast<int>(width[c] + 2)) << line[c];
      os << "\n";
    }
  }
  os << "\noverall: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace

std::string_view check_name(Check c) {
  switch (c) {
    case Check::Structure: return "structure";
    case Check::DoubleCosets: return "dcosets";
    case Check::Characters: return "characters";
    case Check::Decompose: return "decompose";
    case Check::Relations: return "relations";
    case Check::Exactness: return "exactness";
    case Check::Table2: return "table2";
    case Check::Nonvanishing: return "nonvanishing";
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (auto c : kAllChecks)
    if (check_name(c) == name) return c;
  return std::nullopt;
}

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::Matrix: return "matrix";
    case Mode::Charsum: return "charsum";
    case Mode::Both: return "both";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (auto m : {Mode::Matrix, Mode::Charsum, Mode::Both})
    if (mode_name(m) == name) return m;
  return std::nullopt;
}

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "?";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  for (auto f : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv})
    if (format_name(f) == name) return f;
  return std::nullopt;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

void validate(const SuiteConfig& config) {
  if (config.primes.empty()) throw Error(ErrorCode::InvalidArgument, "no primes requested");
  if (config.checks.empty()) throw Error(ErrorCode::InvalidArgument, "no checks requested");
  for (auto p : config.primes) {
    if (p == 2 || !is_prime(p)) throw Error(ErrorCode::UnsupportedPrime, std::to_string(p) + " is not an odd prime");
    if (p > kMaxSupportedPrime) {
      throw Error(ErrorCode::UnsupportedPrime,
                  std::to_string(p) + " exceeds the largest supported prime " + std::to_string(kMaxSupportedPrime));
    }
    const std::uint32_t limit = config.allow_large ? kHardEnumerationLimit : kDefaultEnumerationLimit;
    if (config.mode == Mode::Matrix && p > limit) {
      throw Error(ErrorCode::ResourceLimit, "matrix mode at p = " + std::to_string(p) + " exceeds the limit " +
                                                std::to_string(limit) +
                                                (config.allow_large ? "" : " (pass --allow-large to raise it)"));
    }
  }
}

SuiteConfig normalized(SuiteConfig config) {
  std::sort(config.primes.begin(), config.primes.end());
  config.primes.erase(std::unique(config.primes.begin(), config.primes.end()), config.primes.end());
  std::vector<Check> ordered;
  for (auto c : kAllChecks)
    if (std::find(config.checks.begin(), config.checks.end(), c) != config.checks.end()) ordered.push_back(c);
  config.checks = ordered;
  config.threads = std::max(1u, config.threads);
  return config;
}

unsigned threads_from_environment() {
  const char* v = std::getenv("GL2H_THREADS");
  if (v == nullptr) return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1) return 1;
  return static_cast<unsigned>(std::min(n, 256L));
}

bool PrimeReport::passed() const {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::Fail; });
}

bool VerificationReport::passed() const {
  return std::all_of(primes.begin(), primes.end(), [](const PrimeReport& p) { return p.passed(); });
}

std::optional<ReferenceRow> reference_row(std::uint32_t p) {
  switch (p) {
    case 3: return ReferenceRow{{{2, 3}}, {{2, 1}}, {}, {{2, 2}}, std::nullopt};
    case 5: return ReferenceRow{{{2, 11}, {3, 1}}, {{2, 1}, {3, 1}}, {}, {}, Factorization{{2, 10}}};
    case 7: return ReferenceRow{{{2, 20}, {3, 9}}, {{2, 2}, {3, 1}}, {{3, 8}}, {{2, 18}}, std::nullopt};
    case 11: return ReferenceRow{{{2, 71}, {3, 1}, {5, 13}}, {{2, 1}, {3, 1}, {5, 1}}, {{5, 12}}, {{2, 70}}, std::nullopt};
    case 13:
      return ReferenceRow{{{2, 83}, {3, 15}, {7, 1}}, {{2, 1}, {3, 1}, {7, 1}}, {{2, 56}, {3, 14}}, {}, Factorization{{2, 26}}};
    case 17:
      return ReferenceRow{{{2, 215}, {3, 2}, {19, 32}}, {{2, 3}, {3, 2}}, {{2, 144}}, {{19, 32}}, Factorization{{2, 68}}};
    case 19:
      return ReferenceRow{{{2, 163}, {3, 78}, {5, 1}, {17, 40}},
                          {{2, 1}, {3, 2}, {5, 1}},
                          {{3, 40}, {17, 40}},
                          {{2, 162}, {3, 36}},
                          std::nullopt};
    default: return std::nullopt;
  }
}

BigInt expand(const Factorization& f) {
  BigInt out = 1;
  for (const auto& [q, e] : f) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), q, e);
    out *= power;
  }
  return out;
}

std::string factored(const BigInt& n, std::uint64_t bound) {
  BigInt rest = abs(n);
  if (rest == 0) return "0";
  if (rest == 1) return "1";
  std::string out;
  auto emit = [&](const std::string& base, unsigned e) {
    if (!out.empty()) out += " * ";
    out += base;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::uint64_t q = 2; q < bound && rest > 1; q += (q == 2 ? 1 : 2)) {
    if (BigInt(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q) > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      ++e;
    }
    if (e) emit(std::to_string(q), e);
  }
  if (rest > 1) emit(rest.get_str(), 1);
  return out;
}

CheckResult run_check(std::uint32_t p, Check check, Mode mode, bool allow_large) {
  return PrimeRunner(p, mode, allow_large).run(check);
}

VerificationReport run_suite(const SuiteConfig& raw) {
  validate(raw);
  const SuiteConfig config = normalized(raw);
  VerificationReport report;
  report.mode = config.mode;
  report.primes.resize(config.primes.size());

  std::size_t next = 0;
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next == config.primes.size() || failure) return;
        i = next++;
      }
      try {
        report.primes[i] = run_prime(config.primes[i], config);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<std::size_t>(config.threads, config.primes.size());
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

std::string render(const VerificationReport& report, OutputFormat format, bool include_timing) {
  switch (format) {
    case OutputFormat::Text: return render_text(report, include_timing);
    case OutputFormat::Csv: {
      std::string out = "prime,check,status,detail\n";
      for (const auto& pr : report.primes)
        for (const auto& r : pr.results)
          out += std::to_string(pr.p) + "," + std::string(check_name(r.check)) + "," + std::string(status_name(r.status)) +
                 "," + csv_field(r.detail) + "\n";
      return out;
    }
    case OutputFormat::Json: {
      json out{{"mode", mode_name(report.mode)}, {"passed", report.passed()}};
      json primes = json::array();
      json timing = json::object();
      for (const auto& pr : report.primes) {
        json p{{"p", pr.p}, {"passed", pr.passed()}};
        json checks = json::array();
        json t = json::object();
        for (const auto& r : pr.results) {
          checks.push_back({{"check", check_name(r.check)}, {"status", status_name(r.status)}, {"detail", r.detail}, {"data", r.data}});
          t[std::string(check_name(r.check))] = r.seconds;
        }
        p["checks"] = checks;
        if (pr.table2) p["table2"] = table2_json(*pr.table2);
        primes.push_back(p);
        timing[std::to_string(pr.p)] = t;
      }
      out["primes"] = primes;
      if (include_timing) out["timing"] = timing;
      return out.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace gl2h
