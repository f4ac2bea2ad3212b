#include "cli.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyltn/dense.hpp"
#include "cyltn/factor.hpp"
#include "cyltn/interlace.hpp"
#include "cyltn/json_io.hpp"
#include "cyltn/loop_matrix.hpp"
#include "cyltn/network.hpp"
#include "cyltn/prng.hpp"
#include "cyltn/tl.hpp"
#include "cyltn/tncheck.hpp"

namespace cyltn::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  std::size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) out.push_back(trimmed(piece));
  if (!text.empty() && text.back() == ',') out.push_back("");
  return out;
}

std::vector<long> parse_index_list(const std::string& text) {
  const auto pieces = split_csv(text);
  if (pieces.empty()) throw std::invalid_argument("empty index list");
  std::vector<long> out;
  for (const std::string& p : pieces) {
    if (p.empty() || p.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("malformed index list: \"" + text + "\"");
    out.push_back(std::stol(p));
  }
  return out;
}

RatPoly parse_poly(const std::string& text) {
  const auto pieces = split_csv(text);
  if (pieces.empty())
    throw std::invalid_argument("empty coefficient list");
  std::vector<Rational> coeffs;
  for (const std::string& p : pieces) coeffs.push_back(rational_from_string(p));
  return RatPoly(std::move(coeffs));
}

std::string format_index_list(const std::vector<long>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(v[k]);
  }
  return out + "}";
}

void emit(const ojson& payload) { std::cout << payload.dump() << "\n"; }

int run_factor(const std::string& input, const std::string& output,
               bool trace) {
  const LoopMatrix m = loop_matrix_from_json(read_text_file(input));
  try {
    const FactorResult res = factor(m);
    if (trace) {
      long idx = 0;
      for (const FactorStep& s : res.steps) {
        std::cerr << "step " << ++idx << " [" << step_kind_name(s.kind) << ", "
                  << (s.side == StepSide::Left ? "left" : "right") << "] "
                  << s.note << "\n";
      }
      std::cerr << (res.certified
                        ? "certified: network weight matrix equals the input\n"
                        : "certification failed\n");
    }
    if (!res.certified) {
      ojson payload;
      payload["kind"] = "certification_failed";
      emit(payload);
      return 2;
    }
    const std::string net_json = to_json(res.network);
    if (!output.empty()) write_text_file(output, net_json + "\n");
    std::cout << net_json << "\n";
    return 0;
  } catch (const NotTotallyNonnegative& e) {
    ojson payload;
    payload["kind"] = "not_totally_nonnegative";
    payload["reason"] = e.what();
    payload["witness"] =
        e.witness() ? ojson::parse(to_json(*e.witness())) : ojson(nullptr);
    emit(payload);
    return 2;
  } catch (const FactorizationStuck& e) {
    ojson payload;
    payload["kind"] = "factorization_stuck";
    payload["reason"] = e.what();
    emit(payload);
    return 2;
  }
}

int run_check_tn(const std::string& input, long span, long order) {
  const LoopMatrix m = loop_matrix_from_json(read_text_file(input));
  const auto witness = is_tn_window(m, span, order);
  ojson payload;
  payload["tn_window"] = !witness.has_value();
  payload["witness"] =
      witness ? ojson::parse(to_json(*witness)) : ojson(nullptr);
  emit(payload);
  return witness ? 2 : 0;
}

int run_weight_matrix(const std::string& input, bool folded,
                      const std::vector<long>& window) {
  const CylNetwork net = network_from_json(read_text_file(input));
  const LoopMatrix w = folded_weight_matrix(net);
  if (!window.empty()) {
    std::cout << to_json(w.window(window[0], window[1])) << "\n";
  } else {
    (void)folded;  // folded output is also the default
    std::cout << to_json(w) << "\n";
  }
  return 0;
}

int run_glv_verify(const std::string& input, const std::string& rows,
                   const std::string& cols) {
  const CylNetwork net = network_from_json(read_text_file(input));
  const std::vector<long> I = parse_index_list(rows);
  const std::vector<long> J = parse_index_list(cols);
  const Rational path_sum = glv_minor(net, I, J);
  const Rational det =
      folded_weight_matrix(net).window(I, J).determinant();
  ojson payload;
  payload["rows"] = I;
  payload["cols"] = J;
  payload["glv"] = rational_to_string(path_sum);
  payload["det"] = rational_to_string(det);
  payload["equal"] = (path_sum == det);
  emit(payload);
  return path_sum == det ? 0 : 2;
}

bool check_tl_relations(long n) {
  const LaurentPoly xi = LaurentPoly::monomial(Rational(1), 1);
  for (long i = 1; i + 1 <= n; ++i) {
    const TlElement ti = TlElement::from_diagram(tl_generator(n, i));
    if (tl_multiply(ti, ti) != tl_scale(xi, ti)) return false;
    for (long j = 1; j + 1 <= n; ++j) {
      const TlElement tj = TlElement::from_diagram(tl_generator(n, j));
      if (std::abs(i - j) == 1) {
        if (tl_multiply(tl_multiply(ti, tj), ti) != ti) return false;
      } else if (std::abs(i - j) >= 2) {
        if (tl_multiply(ti, tj) != tl_multiply(tj, ti)) return false;
      }
    }
  }
  return true;
}

int run_tl_verify(long n, long trials, std::uint64_t seed,
                  const std::string& matrix_path, const std::string& rows,
                  const std::string& cols) {
  bool all_ok = true;
  if (!matrix_path.empty()) {
    const DenseMatrix m = dense_matrix_from_json(read_text_file(matrix_path));
    const std::vector<long> I = parse_index_list(rows);
    const std::vector<long> J = parse_index_list(cols);
    const bool ok = verify_rs(m, I, J);
    std::cout << "rs-identity (rows=" << format_index_list(I)
              << ", cols=" << format_index_list(J) << "): "
              << (ok ? "ok" : "FAIL") << "\n";
    all_ok = all_ok && ok;
  } else {
    const bool rel = check_tl_relations(n);
    std::cout << "tl-relations (n=" << n << "): " << (rel ? "ok" : "FAIL")
              << "\n";
    all_ok = all_ok && rel;
    SplitMix64 rng(seed);
    for (long trial = 1; trial <= trials; ++trial) {
      DenseMatrix m(n, n);
      for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) m.set(i, j, Rational(rng.below(10)));
      bool rs_ok = true;
      for (long k = 0; k <= n && rs_ok; ++k)
        for (const auto& I : k_subsets(n, k)) {
          for (const auto& J : k_subsets(n, k))
            if (!verify_rs(m, I, J)) {
              rs_ok = false;
              break;
            }
          if (!rs_ok) break;
        }
      std::cout << "trial " << trial << ": rs-identity over all index pairs: "
                << (rs_ok ? "ok" : "FAIL") << "\n";
      const bool det_ok =
          tl_immanant(identity_matching(n), m) == m.determinant();
      std::cout << "trial " << trial
                << ": identity immanant equals determinant: "
                << (det_ok ? "ok" : "FAIL") << "\n";
      all_ok = all_ok && rs_ok && det_ok;
    }
  }
  std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? 0 : 2;
}

int run_interlace(const std::string& s0, const std::string& s1,
                  const std::string& method) {
  const RatPoly p0 = parse_poly(s0);
  const RatPoly p1 = parse_poly(s1);
  for (const RatPoly* p : {&p0, &p1})
    for (const Rational& c : p->coeffs())
      if (c < 0)
        throw std::invalid_argument(
            "interlace requires nonnegative coefficients");
  ojson payload;
  bool ok = false;
  if (method == "sturm") {
    ok = interlaces_sturm(p0, p1);
    payload["interlaces"] = ok;
  } else if (method == "routh") {
    ok = interlaces_routh(p0, p1);
    payload["interlaces"] = ok;
  } else {
    const bool s = interlaces_sturm(p0, p1);
    const bool r = interlaces_routh(p0, p1);
    payload["interlaces"] = s;
    payload["agree"] = (s == r);
    ok = s && s == r;
  }
  emit(payload);
  return ok ? 0 : 2;
}

int run_hurwitz(const std::string& s0, const std::string& s1,
                const std::string& out_path) {
  const RatPoly p0 = parse_poly(s0);
  const RatPoly p1 = parse_poly(s1);
  const std::string text = to_json(hurwitz(p0, p1));
  if (!out_path.empty()) write_text_file(out_path, text + "\n");
  std::cout << text << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "exact factorization of periodic totally nonnegative matrices into "
      "cylindrical networks, with combinatorial verification tools"};
  app.require_subcommand(1);

  auto* factor_cmd = app.add_subcommand(
      "factor", "factor a folded matrix into a certified network");
  std::string factor_input, factor_output;
  bool factor_trace = false;
  factor_cmd->add_option("--input", factor_input, "folded matrix JSON file")
      ->required();
  factor_cmd->add_option("--output", factor_output,
                         "also write the network JSON to this file");
  factor_cmd->add_flag("--trace", factor_trace,
                       "print each factorization step to stderr");

  auto* check_cmd = app.add_subcommand(
      "check-tn", "scan a window of unfolded minors for a negative one");
  std::string check_input;
  long check_span = 3, check_order = 0;
  check_cmd->add_option("--input", check_input, "folded matrix JSON file")
      ->required();
  check_cmd->add_option("--span", check_span, "window size in periods");
  check_cmd->add_option("--order", check_order,
                        "largest minor order, 0 picks a default");

  auto* wm_cmd = app.add_subcommand(
      "weight-matrix", "weight matrix of a network, folded or windowed");
  std::string wm_input;
  bool wm_folded = false;
  std::vector<long> wm_window;
  wm_cmd->add_option("--input", wm_input, "network JSON file")->required();
  auto* wm_folded_opt = wm_cmd->add_flag("--folded", wm_folded,
                                         "print the folded matrix (default)");
  auto* wm_window_opt =
      wm_cmd
          ->add_option("--window", wm_window,
                       "print a dense unfolded window of R rows, C columns")
          ->expected(2);
  wm_folded_opt->excludes(wm_window_opt);
  wm_window_opt->excludes(wm_folded_opt);

  auto* glv_cmd = app.add_subcommand(
      "glv-verify",
      "compare a path-family minor against the windowed determinant");
  std::string glv_input, glv_rows, glv_cols;
  glv_cmd->add_option("--input", glv_input, "network JSON file")->required();
  glv_cmd->add_option("--rows", glv_rows, "row indices, e.g. \"1,3\"")
      ->required();
  glv_cmd->add_option("--cols", glv_cols, "column indices, e.g. \"4,6\"")
      ->required();

  auto* tl_cmd = app.add_subcommand(
      "tl-verify", "check diagram-algebra identities, randomized or fixed");
  long tl_n = 0, tl_trials = 10;
  std::uint64_t tl_seed = 0;
  std::string tl_matrix, tl_rows, tl_cols;
  tl_cmd->add_option("--n", tl_n, "number of strands")->required();
  tl_cmd->add_option("--trials", tl_trials, "random matrices to test");
  tl_cmd->add_option("--seed", tl_seed, "random seed");
  auto* tl_matrix_opt =
      tl_cmd->add_option("--matrix", tl_matrix, "dense matrix JSON file");
  auto* tl_rows_opt =
      tl_cmd->add_option("--rows", tl_rows, "row indices for one check");
  auto* tl_cols_opt =
      tl_cmd->add_option("--cols", tl_cols, "column indices for one check");
  tl_matrix_opt->needs(tl_rows_opt)->needs(tl_cols_opt);
  tl_rows_opt->needs(tl_matrix_opt);
  tl_cols_opt->needs(tl_matrix_opt);

  auto* il_cmd = app.add_subcommand(
      "interlace", "decide weak root interlacing of two polynomials");
  std::string il_p0, il_p1, il_method = "both";
  il_cmd
      ->add_option("--p0", il_p0,
                   "comma separated coefficients, low degree first")
      ->required();
  il_cmd->add_option("--p1", il_p1, "comma separated coefficients")
      ->required();
  il_cmd->add_option("--method", il_method, "sturm, routh, or both")
      ->check(CLI::IsMember({"sturm", "routh", "both"}));

  auto* hw_cmd = app.add_subcommand(
      "hurwitz", "build the folded two-row matrix of a polynomial pair");
  std::string hw_p0, hw_p1, hw_out;
  hw_cmd->add_option("--p0", hw_p0, "comma separated coefficients")
      ->required();
  hw_cmd->add_option("--p1", hw_p1, "comma separated coefficients")
      ->required();
  hw_cmd->add_option("--out", hw_out, "also write the matrix to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (factor_cmd->parsed())
      return run_factor(factor_input, factor_output, factor_trace);
    if (check_cmd->parsed())
      return run_check_tn(check_input, check_span, check_order);
    if (wm_cmd->parsed())
      return run_weight_matrix(wm_input, wm_folded, wm_window);
    if (glv_cmd->parsed()) return run_glv_verify(glv_input, glv_rows, glv_cols);
    if (tl_cmd->parsed())
      return run_tl_verify(tl_n, tl_trials, tl_seed, tl_matrix, tl_rows,
                           tl_cols);
    if (il_cmd->parsed()) return run_interlace(il_p0, il_p1, il_method);
    if (hw_cmd->parsed()) return run_hurwitz(hw_p0, hw_p1, hw_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cyltn::cli
