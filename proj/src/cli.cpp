#include "spinvol/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinvol/serialize.hpp"

namespace spinvol {

namespace {

int code(ExitStatus s) { return static_cast<int>(s); }

template <class T> std::string list_str(const std::vector<T> &xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << ']';
  return os.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("cannot write " + path);
}

int report_verdict(const Verdict &v, const std::optional<std::string> &json_out,
                   std::ostream &out) {
  const Certificate &c = v.certificate;
  out << "form: " << c.params.n << "(-E8) + " << c.params.m << "H, r = "
      << c.params.r << "\n"
      << "signature: " << c.sigma << "\n"
      << "fixed points: " << c.fixed_count << "\n"
      << "framings: " << list_str(c.framings) << " (mod 4: "
      << list_str(c.framing_classes) << ")\n"
      << "epsilon sum candidates: " << list_str(c.epsilon_sum_candidates)
      << ", forced: " << c.epsilon_sum << "\n"
      << "P' relative to P: " << to_string(c.p_pprime) << "\n"
      << "smooth partition: {" << c.partition.n_plus << ", "
      << c.partition.n_minus << "}\n"
      << "rohlin residue: " << c.rohlin_residue << " mod 16\n";
  if (v.kind == VerdictKind::Inconclusive) {
    out << "admissible partitions:";
    for (const auto &p : v.admissible_partitions)
      out << " (" << p.n_plus << ", " << p.n_minus << ")";
    out << "\nINCONCLUSIVE\n";
  } else {
    out << "NONSMOOTHABLE\n";
  }
  if (json_out) write_file(*json_out, canonical_dump(to_json(c)));
  return code(v.kind == VerdictKind::Nonsmoothable ? ExitStatus::Success
                                                   : ExitStatus::Negative);
}

int classify_form(const std::string &path, std::ostream &out) {
  const IntSymForm form = parse_form_file(path);
  json result{{"invariants", to_json(invariants(form))}};
  int status = code(ExitStatus::Success);
  try {
    result["classification"] =
        to_json(classify_indefinite_even_unimodular(form));
  } catch (const Error &e) {
    switch (e.code()) {
    case ErrorCode::NotEven:
    case ErrorCode::NotUnimodular:
    case ErrorCode::NotIndefinite:
      result["classification"] = nullptr;
      result["reason"] = e.what();
      status = code(ExitStatus::Negative);
      break;
    default: throw;
    }
  }
  out << canonical_dump(result);
  return status;
}

int check_action(const std::string &path, std::ostream &out) {
  const RealizationReport rep = check_edmonds_ewing(parse_action_file(path));
  out << canonical_dump(to_json(rep));
  return code(rep.all_pass() ? ExitStatus::Success : ExitStatus::Negative);
}

int smith(const std::string &path, std::ostream &out) {
  const json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("matrix"))
    throw Error(ErrorCode::MalformedInput, "expected {\"matrix\": [[...]]}");
  out << canonical_dump(
      to_json(smith_normal_form(matrix_from_json(doc["matrix"], "matrix"))));
  return code(ExitStatus::Success);
}

int enumerate(long sigma, long fixed, const std::string &mode,
              std::ostream &out) {
  json arr = json::array();
  if (mode == "epsilon") {
    for (long s : admissible_epsilon_sums(sigma, fixed)) arr.push_back(s);
  } else {
    for (const auto &p : rohlin_admissible_pairs(sigma, fixed))
      arr.push_back(json::array({p.n_plus, p.n_minus}));
  }
  out << arr.dump() << "\n";
  return code(ExitStatus::Success);
}

int verify_cert(const std::string &path, std::ostream &out) {
  const Certificate cert = certificate_from_json(read_json_file(path));
  const ReplayResult res = verify_certificate(cert);
  if (res) {
    out << "certificate verified: " << to_string(cert.verdict) << "\n";
    return code(ExitStatus::Success);
  }
  out << "certificate rejected: first divergence in " << res.divergence
      << "\n";
  return code(ExitStatus::Negative);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Exact arithmetic for nonsmoothable involutions on spin "
               "4-manifolds with intersection form n(-E8) + mH",
               "spinvol"};
  app.require_subcommand(1);

  long n = 0, m = 0, k = 0, sigma = 0, fixed = 0;
  std::optional<long> r;
  std::optional<std::string> json_out;
  std::string file, mode = "rohlin";

  auto *certify_cmd =
      app.add_subcommand("certify", "Certify the constructed action");
  certify_cmd->add_option("--n", n, "number of -E8 summands")->required();
  certify_cmd->add_option("--m", m, "number of H summands")->required();
  certify_cmd->add_option("--r", r, "rank parameter of the trivial part "
                                    "(default m - 2)");
  certify_cmd->add_option("--json-out", json_out, "write the certificate");

  auto *elliptic_cmd = app.add_subcommand(
      "elliptic", "Certify the elliptic surface E(k): k(-E8) + (2k-1)H");
  elliptic_cmd->add_option("--k", k, "elliptic surface index")->required();
  elliptic_cmd->add_option("--json-out", json_out, "write the certificate");

  auto *classify_cmd = app.add_subcommand(
      "classify-form", "Invariants and canonical label of a form file");
  classify_cmd->add_option("file", file, "{\"gram\": [[...]]}")->required();

  auto *check_cmd = app.add_subcommand(
      "check-action", "Check the realization conditions for an action file");
  check_cmd->add_option("file", file, "{\"gram\": [[...]], \"g\": [[...]]}")
      ->required();

  auto *enum_cmd = app.add_subcommand(
      "enumerate", "List Rohlin-admissible partitions or epsilon sums");
  enum_cmd->add_option("--sigma", sigma, "signature")->required();
  enum_cmd->add_option("--fixed", fixed, "number of fixed points")
      ->required();
  enum_cmd->add_option("--mode", mode, "rohlin | epsilon")
      ->check(CLI::IsMember({"rohlin", "epsilon"}));

  auto *snf_cmd =
      app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf_cmd->add_option("file", file, "{\"matrix\": [[...]]}")->required();

  auto *verify_cmd =
      app.add_subcommand("verify-cert", "Replay a certificate file");
  verify_cmd->add_option("file", file, "certificate JSON")->required();

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? code(ExitStatus::Success) : code(ExitStatus::InputError);
  }

  try {
    if (*certify_cmd) {
      const PaperParams params{n, m, r.value_or(default_r(m))};
      return report_verdict(certify(params), json_out, out);
    }
    if (*elliptic_cmd) {
      const PaperParams params = elliptic_preset(k);
      out << "E(" << k << ")\n";
      return report_verdict(certify(params), json_out, out);
    }
    if (*classify_cmd) return classify_form(file, out);
    if (*check_cmd) return check_action(file, out);
    if (*enum_cmd) return enumerate(sigma, fixed, mode, out);
    if (*snf_cmd) return smith(file, out);
    if (*verify_cmd) return verify_cert(file, out);
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return code(ExitStatus::IoFailure);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return code(ExitStatus::InputError);
  }
  return code(ExitStatus::InputError);
}

} // namespace spinvol
