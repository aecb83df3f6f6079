#include "spinvol/serialize.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace spinvol {

json to_json(const Integer &x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const IntMatrix &m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const IntSymForm &f) { return json{{"gram", to_json(f.gram())}}; }

json to_json(const EquivariantForm &ef) {
  return json{{"gram", to_json(ef.form().gram())},
              {"g", to_json(ef.g().matrix())}};
}

json to_json(const FormInvariants &inv) {
  return json{{"rank", inv.rank},
              {"inertia",
               {{"positive", inv.inertia.positive},
                {"negative", inv.inertia.negative},
                {"zero", inv.inertia.zero}}},
              {"signature", inv.signature},
              {"parity", std::string(to_string(inv.parity))},
              {"det", to_json(inv.det)},
              {"definiteness", std::string(to_string(inv.definiteness))}};
}

json to_json(const CanonicalEvenForm &c) {
  return json{{"e8_count", c.e8_count},
              {"e8_sign", c.e8_sign},
              {"h_count", c.h_count}};
}

json to_json(const ModuleDecomposition &d) {
  return json{{"trivial_rank", d.trivial_rank},
              {"sign_rank", d.sign_rank},
              {"free_rank", d.free_rank}};
}

json to_json(const RealizationReport &rep) {
  json out{{"form_even", rep.form_even},
           {"form_unimodular", rep.form_unimodular},
           {"condition1", rep.condition1},
           {"decomposition", to_json(rep.decomposition)},
           {"condition2", rep.condition2},
           {"condition3", rep.condition3},
           {"g_signature", rep.g_signature},
           {"trivial_rank", rep.trivial_rank},
           {"all_pass", rep.all_pass()}};
  out["fixed_point_count"] =
      rep.fixed_point_count ? json(*rep.fixed_point_count) : json(nullptr);
  return out;
}

json to_json(const SNFResult &snf) {
  json factors = json::array();
  for (const auto &x : snf.invariant_factors()) factors.push_back(to_json(x));
  return json{{"u", to_json(snf.u)},
              {"d", to_json(snf.d)},
              {"v", to_json(snf.v)},
              {"rank", snf.rank},
              {"invariant_factors", std::move(factors)}};
}

json to_json(const PaperAction &action) {
  json out = to_json(action.equivariant);
  out["params"] = {{"n", action.params.n},
                   {"m", action.params.m},
                   {"r", action.params.r}};
  json points = json::array();
  for (const auto &p : action.roster.points) {
    json entry{{"name", p.name}};
    entry["framing"] = p.framing ? json(*p.framing) : json(nullptr);
    points.push_back(std::move(entry));
  }
  out["roster"] = std::move(points);
  out["link"] = {{"linking", to_json(action.link.linking)},
                 {"framings", action.link.framings}};
  return out;
}

namespace {

json partition_json(const SpinPartition &p) {
  return json::array({p.n_plus, p.n_minus});
}

} // namespace

json to_json(const Certificate &cert) {
  json admissible = json::array();
  for (const auto &p : cert.admissible_partitions)
    admissible.push_back(partition_json(p));
  return json{
      {"version", cert.version},
      {"params",
       {{"n", cert.params.n}, {"m", cert.params.m}, {"r", cert.params.r}}},
      {"rank", cert.rank},
      {"decomposition", to_json(cert.decomposition)},
      {"sigma", cert.sigma},
      {"fixed_count", cert.fixed_count},
      {"framings", cert.framings},
      {"framing_classes", cert.framing_classes},
      {"epsilon_sum_candidates", cert.epsilon_sum_candidates},
      {"epsilon_sum", cert.epsilon_sum},
      {"p_pprime", std::string(to_string(cert.p_pprime))},
      {"partition", partition_json(cert.partition)},
      {"rohlin_residue", cert.rohlin_residue},
      {"verdict", std::string(to_string(cert.verdict))},
      {"admissible_partitions", std::move(admissible)},
  };
}

namespace {

[[noreturn]] void malformed(const std::string &field, const std::string &why) {
  throw Error(ErrorCode::MalformedInput, field + ": " + why);
}

Integer integer_from_json(const json &j, const std::string &field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      Integer out;
      out = std::to_string(j.get<std::uint64_t>());
      return out;
    }
    return Integer(j.get<long>());
  }
  if (j.is_string()) {
    const auto &s = j.get_ref<const std::string &>();
    const std::size_t sign = (!s.empty() && s[0] == '-') ? 1 : 0;
    const bool digits = s.size() > sign &&
                        s.find_first_not_of("0123456789", sign) ==
                            std::string::npos;
    Integer out;
    if (!digits || out.set_str(s, 10) != 0)
      malformed(field, "'" + s + "' is not a decimal integer");
    return out;
  }
  malformed(field, "expected an integer, got " + std::string(j.type_name()));
}

long long_from_json(const json &j, const std::string &field) {
  if (!j.is_number_integer() ||
      (j.is_number_unsigned() &&
       j.get<std::uint64_t>() >
           static_cast<std::uint64_t>(std::numeric_limits<long>::max())))
    malformed(field, "expected a 64-bit integer");
  return j.get<long>();
}

std::vector<long> long_array_from_json(const json &j,
                                       const std::string &field) {
  if (!j.is_array()) malformed(field, "expected an array");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(long_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

const json &require_key(const json &obj, const std::string &key,
                        const std::string &where) {
  if (!obj.is_object()) malformed(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(where, "missing key '" + key + "'");
  return *it;
}

void reject_unknown_keys(const json &obj, std::set<std::string> known,
                         const std::string &where) {
  for (const auto &[key, _] : obj.items())
    if (!known.contains(key)) malformed(where, "unknown key '" + key + "'");
}

SpinPartition partition_from_json(const json &j, const std::string &field) {
  const auto v = long_array_from_json(j, field);
  if (v.size() != 2) malformed(field, "expected [n_plus, n_minus]");
  return {v[0], v[1]};
}

IntMatrix square_from_json(const json &j, const std::string &field) {
  IntMatrix m = matrix_from_json(j, field);
  if (!m.is_square())
    malformed(field, "matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  return m;
}

} // namespace

IntMatrix matrix_from_json(const json &j, const std::string &field) {
  if (!j.is_array()) malformed(field, "expected an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) malformed(where, "expected an array of integers");
    if (i > 0 && j[i].size() != j[0].size())
      malformed(where, "row has " + std::to_string(j[i].size()) +
                           " entries, expected " +
                           std::to_string(j[0].size()));
    std::vector<Integer> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(
          integer_from_json(j[i][k], where + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

IntSymForm form_from_json(const json &j) {
  return IntSymForm(square_from_json(require_key(j, "gram", "form"), "gram"));
}

EquivariantForm action_from_json(const json &j) {
  IntSymForm form =
      IntSymForm(square_from_json(require_key(j, "gram", "action"), "gram"));
  IntMatrix g = square_from_json(require_key(j, "g", "action"), "g");
  return make_equivariant(std::move(form), std::move(g));
}

Certificate certificate_from_json(const json &j) {
  const std::string where = "certificate";
  reject_unknown_keys(j,
                      {"version", "params", "rank", "decomposition", "sigma", "fixed_count", "framings",
                       "framing_classes", "epsilon_sum_candidates",
                       "epsilon_sum", "p_pprime", "partition",
                       "rohlin_residue", "verdict", "admissible_partitions"},
                      where);
  Certificate c;
  c.version = static_cast<int>(
      long_from_json(require_key(j, "version", where), "version"));

  const json &params = require_key(j, "params", where);
  reject_unknown_keys(params, {"n", "m", "r"}, "params");
  c.params.n = long_from_json(require_key(params, "n", "params"), "params.n");
  c.params.m = long_from_json(require_key(params, "m", "params"), "params.m");
  c.params.r = long_from_json(require_key(params, "r", "params"), "params.r");

  c.rank = long_from_json(require_key(j, "rank", where), "rank");
  const json &dec = require_key(j, "decomposition", where);
  reject_unknown_keys(dec, {"trivial_rank", "sign_rank", "free_rank"},
                      "decomposition");
  const auto dec_field = [&](const char *key) {
    const long v = long_from_json(require_key(dec, key, "decomposition"),
                                  std::string("decomposition.") + key);
    if (v < 0) malformed(std::string("decomposition.") + key, "negative rank");
    return static_cast<std::size_t>(v);
  };
  c.decomposition.trivial_rank = dec_field("trivial_rank");
  c.decomposition.sign_rank = dec_field("sign_rank");
  c.decomposition.free_rank = dec_field("free_rank");

  c.sigma = long_from_json(require_key(j, "sigma", where), "sigma");
  c.fixed_count =
      long_from_json(require_key(j, "fixed_count", where), "fixed_count");
  c.framings = long_array_from_json(require_key(j, "framings", where),
                                    "framings");
  c.framing_classes = long_array_from_json(
      require_key(j, "framing_classes", where), "framing_classes");
  c.epsilon_sum_candidates =
      long_array_from_json(require_key(j, "epsilon_sum_candidates", where),
                           "epsilon_sum_candidates");
  c.epsilon_sum =
      long_from_json(require_key(j, "epsilon_sum", where), "epsilon_sum");

  const json &rel = require_key(j, "p_pprime", where);
  if (rel == "same")
    c.p_pprime = RelativeSign::Same;
  else if (rel == "opposite")
    c.p_pprime = RelativeSign::Opposite;
  else
    malformed("p_pprime", "expected \"same\" or \"opposite\"");

  c.partition = partition_from_json(require_key(j, "partition", where),
                                    "partition");
  c.rohlin_residue = long_from_json(require_key(j, "rohlin_residue", where),
                                    "rohlin_residue");

  const json &verdict = require_key(j, "verdict", where);
  if (verdict == "nonsmoothable")
    c.verdict = VerdictKind::Nonsmoothable;
  else if (verdict == "inconclusive")
    c.verdict = VerdictKind::Inconclusive;
  else
    malformed("verdict", "expected \"nonsmoothable\" or \"inconclusive\"");

  const json &adm = require_key(j, "admissible_partitions", where);
  if (!adm.is_array()) malformed("admissible_partitions", "expected an array");
  for (std::size_t i = 0; i < adm.size(); ++i)
    c.admissible_partitions.push_back(partition_from_json(
        adm[i], "admissible_partitions[" + std::to_string(i) + "]"));
  return c;
}

json parse_json_text(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return parse_json_text(buf.str());
}

IntSymForm parse_form_file(const std::filesystem::path &path) {
  return form_from_json(read_json_file(path));
}

EquivariantForm parse_action_file(const std::filesystem::path &path) {
  return action_from_json(read_json_file(path));
}

std::string canonical_dump(const json &j) { return j.dump(2) + "\n"; }

} // namespace spinvol
