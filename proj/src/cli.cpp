#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "jsonio.hpp"
#include "seifert/cli.hpp"
#include "seifert/cobordism.hpp"
#include "seifert/hyperbolic.hpp"
#include "seifert/passmove.hpp"
#include "seifert/realize.hpp"

namespace seifert::cli {

namespace {

using detail::integer_to_json;
using detail::json;
using detail::json_to_integer;
using detail::json_to_matrix;
using detail::matrix_to_json;
using detail::vector_to_json;

const char* const kProgram = "seifert-tool";

// Raised once a command has settled on an error outcome.
struct Failure {
  int code;
  std::string status;
  std::string message;
};

// ---------------------------------------------------------------- reports

class Report {
 public:
  void set(const std::string& key, json value) { doc_[key] = std::move(value); }

  // Array of integer rows, printed one row per line in text form.
  void set_rows(const std::string& key, json rows) {
    blocks_.insert(key);
    doc_[key] = std::move(rows);
  }

  std::string render(bool structured) const {
    if (structured) return doc_.dump(2) + "\n";
    std::ostringstream os;
    for (const auto& item : doc_.items()) {
      const json& v = item.value();
      if (blocks_.count(item.key())) {
        os << item.key() << ": " << v.size() << "\n";
        for (const auto& row : v) {
          os << " ";
          for (const auto& x : row) os << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
          os << "\n";
        }
      } else if (v.is_string()) {
        os << item.key() << ": " << v.get<std::string>() << "\n";
      } else {
        os << item.key() << ": " << v.dump() << "\n";
      }
    }
    return os.str();
  }

 private:
  json doc_ = json::object();
  std::set<std::string> blocks_;
};

// A previously emitted report, in either format.
class ParsedReport {
 public:
  static ParsedReport parse(const std::string& text, const std::set<std::string>& block_keys) {
    ParsedReport out;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      try {
        out.doc_ = json::parse(text);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what());
      }
      if (!out.doc_.is_object()) throw ParseError("report must be a JSON object");
      out.structured_ = true;
      return out;
    }
    std::istringstream in(text);
    std::string line, block;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      if (line.rfind("  ", 0) == 0) {
        if (block.empty()) throw ParseError("report line " + std::to_string(lineno) + " is outside a block");
        std::istringstream tokens(line);
        std::vector<std::string> row;
        for (std::string t; tokens >> t;) row.push_back(t);
        out.rows_[block].push_back(std::move(row));
        continue;
      }
      const std::size_t colon = line.find(": ");
      if (colon == std::string::npos) throw ParseError("report line " + std::to_string(lineno) + " has no key");
      const std::string key = line.substr(0, colon);
      out.raw_[key] = line.substr(colon + 2);
      block.clear();
      if (block_keys.count(key)) {
        block = key;
        out.rows_[key];
      }
    }
    return out;
  }

  bool has(const std::string& key) const { return structured_ ? doc_.contains(key) : raw_.count(key) > 0; }

  std::string str(const std::string& key) const {
    require(key);
    if (structured_) return doc_[key].is_string() ? doc_[key].get<std::string>() : doc_[key].dump();
    return raw_.at(key);
  }

  json value(const std::string& key) const {
    require(key);
    if (structured_) return doc_[key];
    try {
      return json::parse(raw_.at(key));
    } catch (const json::parse_error&) {
      throw ParseError("report field " + key + " is not a JSON value");
    }
  }

  std::vector<IntVector> rows(const std::string& key) const {
    require(key);
    std::vector<IntVector> out;
    if (structured_) {
      const json& v = doc_[key];
      if (!v.is_array()) throw ParseError("report field " + key + " is not a list of rows");
      for (const auto& row : v) {
        if (!row.is_array()) throw ParseError("report field " + key + " is not a list of rows");
        IntVector r;
        for (const auto& x : row) r.push_back(json_to_integer(x, " in report field " + key));
        out.push_back(std::move(r));
      }
      return out;
    }
    const auto it = rows_.find(key);
    if (it == rows_.end()) throw ParseError("report field " + key + " is not a block");
    for (const auto& row : it->second) {
      IntVector r;
      for (const auto& t : row) r.push_back(json_to_integer(json(t), " in report field " + key));
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  void require(const std::string& key) const {
    if (!has(key)) throw ParseError("report has no field " + key);
  }

  bool structured_ = false;
  json doc_;
  std::map<std::string, std::string> raw_;
  std::map<std::string, std::vector<std::vector<std::string>>> rows_;
};

const std::set<std::string> kBlockKeys = {"schedule", "metabolizer"};

// ---------------------------------------------------------------- inputs

struct Input {
  std::string path;
  std::string bytes;
  std::string digest;
};

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kParseError, "parse-error", "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  Input out{path, buf.str(), {}};
  out.digest = sha256_hex(out.bytes);
  return out;
}

KnotFile parse_input(const Input& in, bool index_required = true) {
  try {
    return parse_knot_file(in.bytes, index_required);
  } catch (const ParseError& e) {
    throw Failure{kParseError, "parse-error", in.path + ": " + e.what()};
  }
}

SeifertKnot load_knot(const Input& in) {
  const KnotFile file = parse_input(in);
  try {
    return to_knot(file);
  } catch (const Error& e) {
    throw Failure{kValidationError, "invalid-input", in.path + ": " + e.what()};
  }
}

std::string quote_arg(const std::string& a) {
  if (!a.empty() && a.find_first_of(" \t\"'") == std::string::npos) return a;
  std::string out = "'";
  for (char c : a) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// ---------------------------------------------------------------- commands

struct Options {
  std::vector<std::string> args;
  bool structured = false;
  std::string verify;
  std::optional<long> bound;
  std::optional<long> isotropic_bound;
};

struct Command {
  const Options& opt;
  std::vector<Input> inputs;
  Report report;
  int exit_code = kCertified;

  explicit Command(const Options& o) : opt(o) {
    std::string echo = kProgram;
    for (const auto& a : o.args) echo += " " + quote_arg(a);
    report.set("command", echo);
  }

  void add_input(Input in) {
    const std::string idx = std::to_string(inputs.size() + 1);
    report.set("input" + idx, in.path);
    report.set("input" + idx + "_sha256", in.digest);
    inputs.push_back(std::move(in));
  }

  void finish(const std::string& status, int code) {
    report.set("status", status);
    report.set("exit_code", code);
    exit_code = code;
  }
};

json ops_to_rows(const std::vector<PassMoveOp>& ops) {
  json rows = json::array();
  for (const auto& op : ops) rows.push_back(json::array({op.i + 1, op.j + 1, op.delta}));
  return rows;
}

json vectors_to_rows(const std::vector<IntVector>& vs) {
  json rows = json::array();
  for (const auto& v : vs) rows.push_back(vector_to_json(v));
  return rows;
}

std::vector<PassMoveOp> rows_to_ops(const std::vector<IntVector>& rows) {
  std::vector<PassMoveOp> ops;
  for (const auto& r : rows) {
    if (r.size() != 3) throw ParseError("schedule rows need three entries");
    if (r[0] < 1 || r[1] < 1 || !r[0].fits_ulong_p() || !r[1].fits_ulong_p())
      throw ParseError("schedule indices are 1-based positive integers");
    if (r[2] != 1 && r[2] != -1) throw ParseError("schedule delta must be 1 or -1");
    ops.push_back(PassMoveOp{r[0].get_ui() - 1, r[1].get_ui() - 1, static_cast<int>(r[2].get_si())});
  }
  return ops;
}

void put_invariant(Report& report, const SeifertKnot& kn) {
  if (kn.k_even())
    report.set("arf", arf(kn));
  else
    report.set("sigma", sigma(kn));
}

void put_metabolizer(Report& report, const CobordismVerdict& v) {
  if (v.status == CobordismStatus::Cobordant) report.set_rows("metabolizer", vectors_to_rows(v.witness->vectors));
  if (v.status == CobordismStatus::Obstructed) report.set("reason", v.reason);
  if (v.algebraic_only) report.set("algebraic_only", true);
}

int status_code(CobordismStatus s) {
  switch (s) {
    case CobordismStatus::Cobordant: return kCertified;
    case CobordismStatus::Obstructed: return kObstructed;
    case CobordismStatus::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

const char* status_word(CobordismStatus s) {
  switch (s) {
    case CobordismStatus::Cobordant: return "certified";
    case CobordismStatus::Obstructed: return "obstructed";
    case CobordismStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

long metabolizer_bound(const Options& o) { return o.bound.value_or(kDefaultMetabolizerBound); }
long isotropic_bound(const Options& o) { return o.bound.value_or(kDefaultIsotropicBound); }

void cmd_invariants(Command& c, const std::string& path) {
  c.add_input(read_input(path));
  const SeifertKnot kn = load_knot(c.inputs[0]);
  c.report.set("k", kn.k());
  c.report.set("n", kn.n());
  c.report.set("dim", kn.dim());
  c.report.set("intersection_det", integer_to_json(determinant(intersection_form(kn))));
  c.report.set("unimodular", true);
  put_invariant(c.report, kn);
  c.finish("ok", kCertified);
}

void cmd_realizable(Command& c, unsigned long n, const std::vector<std::string>& paths) {
  if (!paths.empty() && paths.size() != 2)
    throw Failure{kParseError, "parse-error", "realizable takes zero or two knot files"};
  std::optional<SeifertKnot> k1, k2;
  c.report.set("n", n);
  for (const auto& p : paths) c.add_input(read_input(p));
  if (!paths.empty()) {
    k1 = load_knot(c.inputs[0]);
    k2 = load_knot(c.inputs[1]);
  }
  const SearchBounds bounds{metabolizer_bound(c.opt), c.opt.isotropic_bound.value_or(kDefaultIsotropicBound)};
  c.report.set("bound_metabolizer", bounds.metabolizer);
  c.report.set("bound_isotropic", bounds.isotropic);

  RealizabilityVerdict v;
  try {
    v = decide_realizable(n, k1, k2, bounds);
  } catch (const Error& e) {
    throw Failure{kValidationError, "invalid-input", e.what()};
  }
  if (v.obstruction) {
    c.report.set("invariant", v.obstruction->name);
    c.report.set("first", v.obstruction->first);
    c.report.set("second", v.obstruction->second);
  }
  c.report.set("realizable", v.realizable);
  if (!v.realizable) {
    c.report.set("obstruction", v.obstruction->name + ":(" + std::to_string(v.obstruction->first) + "," +
                                    std::to_string(v.obstruction->second) + ")");
    c.finish("not-realizable", kObstructed);
    return;
  }
  if (v.certificate) {
    const RealizationCertificate& cert = *v.certificate;
    c.report.set("k3", matrix_to_json(cert.k3.matrix()));
    c.report.set("schedule_planes", (cert.k3.dim() - k1->dim()) / 2);
    c.report.set_rows("schedule", ops_to_rows(cert.schedule.ops));
    c.report.set("metabolizer_status", to_string(cert.metabolizer.status));
    put_metabolizer(c.report, cert.metabolizer);
  } else if (!v.certificate_error.empty()) {
    c.report.set("certificate_error", v.certificate_error);
  }
  c.finish("realizable", kCertified);
}

void cmd_passmoves(Command& c, const std::string& path) {
  c.add_input(read_input(path));
  const SeifertKnot kn = load_knot(c.inputs[0]);
  const long bound = isotropic_bound(c.opt);
  c.report.set("k", kn.k());
  c.report.set("dim", kn.dim());
  c.report.set("bound_isotropic", bound);
  put_invariant(c.report, kn);
  try {
    const TrivializingPlan plan = plan_trivializing_schedule(kn, bound);
    c.report.set("witness", matrix_to_json(plan.witness.transform));
    c.report.set("target", matrix_to_json(plan.schedule.claimed_end));
    c.report.set("moves", plan.schedule.ops.size());
    c.report.set_rows("schedule", ops_to_rows(plan.schedule.ops));
    c.finish("certified", kCertified);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ObstructionNonzero) {
      c.report.set("reason", e.what());
      c.finish("obstructed", kObstructed);
    } else if (e.kind() == ErrorKind::SearchExhausted) {
      c.report.set("reason", e.what());
      c.finish("inconclusive", kInconclusive);
    } else {
      throw;
    }
  }
}

void cmd_cobordant(Command& c, const std::string& p1, const std::string& p2) {
  c.add_input(read_input(p1));
  c.add_input(read_input(p2));
  const SeifertKnot k1 = load_knot(c.inputs[0]), k2 = load_knot(c.inputs[1]);
  if (k1.k() != k2.k())
    throw Failure{kValidationError, "invalid-input",
                  "ParityMismatch: knots have k=" + std::to_string(k1.k()) + " and k=" + std::to_string(k2.k())};
  const long bound = metabolizer_bound(c.opt);
  c.report.set("k", k1.k());
  c.report.set("bound_metabolizer", bound);
  CobordismVerdict v = necessary_obstructions(k1, k2);
  if (v.status != CobordismStatus::Obstructed) v = find_metabolizer(cobordism_block(k1, k2), bound);
  v.algebraic_only = k1.k() == 0;
  put_metabolizer(c.report, v);
  c.finish(status_word(v.status), status_code(v.status));
}

void cmd_slice(Command& c, const std::string& path) {
  c.add_input(read_input(path));
  const SeifertKnot kn = load_knot(c.inputs[0]);
  const long bound = metabolizer_bound(c.opt);
  c.report.set("k", kn.k());
  c.report.set("bound_metabolizer", bound);
  const CobordismVerdict v = algebraically_slice(kn, bound);
  put_metabolizer(c.report, v);
  c.finish(status_word(v.status), status_code(v.status));
}

// The form to hyperbolize: a bare matrix as given, or A + A^T for a k-odd
// Seifert matrix.
IntMatrix load_form(const Input& in) {
  const KnotFile file = parse_input(in, false);
  if (!file.n && !file.k) return file.matrix;
  SeifertKnot kn = SeifertKnot::trivial(0);
  try {
    kn = to_knot(file);
  } catch (const Error& e) {
    throw Failure{kValidationError, "invalid-input", in.path + ": " + e.what()};
  }
  if (kn.k_even())
    throw Failure{kValidationError, "invalid-input",
                  in.path + ": WrongParity: the intersection form of an even-k knot is antisymmetric"};
  return intersection_form(kn);
}

void cmd_hyperbolize(Command& c, const std::string& path) {
  c.add_input(read_input(path));
  const IntMatrix g = load_form(c.inputs[0]);
  const long bound = isotropic_bound(c.opt);
  c.report.set("dim", g.dim());
  c.report.set("bound_isotropic", bound);
  c.report.set("form", matrix_to_json(g));
  try {
    const CongruenceWitness w = hyperbolize(g, bound);
    c.report.set("witness", matrix_to_json(w.transform));
    c.finish("certified", kCertified);
  } catch (const Error& e) {
    c.report.set("reason", e.what());
    if (e.kind() == ErrorKind::PreconditionFailed)
      c.finish("obstructed", kObstructed);
    else if (e.kind() == ErrorKind::SearchExhausted)
      c.finish("inconclusive", kInconclusive);
    else
      throw;
  }
}

// ---------------------------------------------------------------- verify

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

void check_digests(const ParsedReport& r, const Command& c, Check& check) {
  for (std::size_t i = 0; i < c.inputs.size(); ++i) {
    const std::string key = "input" + std::to_string(i + 1) + "_sha256";
    if (!r.has(key) || r.str(key) != c.inputs[i].digest)
      check.fail("input " + c.inputs[i].path + " does not match the digest in the report");
  }
}

void check_same_status(const ParsedReport& r, const std::string& status, Check& check) {
  if (r.str("status") != status)
    check.fail("report status " + r.str("status") + " but recomputation gives " + status);
}

std::vector<IntVector> optional_rows(const ParsedReport& r, const std::string& key) {
  return r.has(key) ? r.rows(key) : std::vector<IntVector>{};
}

// Recomputes the command and compares or re-validates what the report claims.
void verify_report(const std::string& verb, Command& fresh, const ParsedReport& r, Check& check) {
  check_digests(r, fresh, check);
  const std::string claimed = r.str("status");

  const json doc = json::parse(fresh.report.render(true));
  const std::string status = doc["status"].get<std::string>();

  if (verb == "invariants") {
    for (const char* key : {"arf", "sigma"})
      if (r.has(key) != doc.contains(key) || (r.has(key) && r.value(key) != doc[key]))
        check.fail(std::string(key) + " differs from the recomputed value");
    check_same_status(r, status, check);
    return;
  }

  if (verb == "passmoves" && claimed == "certified") {
    const SeifertKnot kn = load_knot(fresh.inputs[0]);
    const IntMatrix s = json_to_matrix(r.value("witness"), "witness");
    const IntMatrix x = json_to_matrix(r.value("target"), "target");
    if (s.dim() != kn.dim() || x.dim() != kn.dim()) return check.fail("witness or target has the wrong size");
    if (abs(determinant(s)) != 1) return check.fail("witness is not unimodular");
    if (congruence_apply(kn.matrix(), s) != x) return check.fail("target is not S A S^T");
    const PassMoveSchedule sched{rows_to_ops(r.rows("schedule")), SeifertKnot::trivial_blocks(kn.k(), kn.dim() / 2), x};
    const ScheduleCheck sc = verify_schedule(sched);
    if (!sc && *sc.failed_at == sched.ops.size())
      check.fail("schedule replay does not reach the target");
    else if (!sc)
      check.fail("schedule step " + std::to_string(*sc.failed_at + 1) + " fails: " + sc.reason);
    return;
  }

  if (verb == "hyperbolize" && claimed == "certified") {
    const IntMatrix g = load_form(fresh.inputs[0]);
    const IntMatrix s = json_to_matrix(r.value("witness"), "witness");
    if (s.dim() != g.dim()) return check.fail("witness has the wrong size");
    if (abs(determinant(s)) != 1) return check.fail("witness is not unimodular");
    if (congruence_apply(g, s) != hyperbolic_planes(g.dim() / 2))
      check.fail("S G S^T is not a sum of hyperbolic planes");
    return;
  }

  if ((verb == "cobordant" || verb == "slice") && claimed == "certified") {
    IntMatrix context;
    if (verb == "slice") {
      context = load_knot(fresh.inputs[0]).matrix();
    } else {
      context = cobordism_block(load_knot(fresh.inputs[0]), load_knot(fresh.inputs[1]));
    }
    if (!is_valid_metabolizer(Metabolizer{optional_rows(r, "metabolizer"), context}))
      check.fail("metabolizer does not validate");
    return;
  }

  if (verb == "realizable" && claimed == "realizable" && r.has("k3")) {
    const SeifertKnot k1 = load_knot(fresh.inputs[0]), k2 = load_knot(fresh.inputs[1]);
    SeifertKnot k3 = SeifertKnot::trivial(0);
    try {
      k3 = validate(k1.k(), json_to_matrix(r.value("k3"), "k3"));
    } catch (const Error& e) {
      return check.fail(std::string("k3 is not a valid Seifert matrix: ") + e.what());
    }
    const json planes = r.value("schedule_planes");
    if (!planes.is_number_unsigned()) return check.fail("schedule_planes is not a count");
    const IntMatrix start = direct_sum(k1.matrix(), SeifertKnot::trivial_blocks(k1.k(), planes.get<std::size_t>()).matrix());
    RealizationCertificate cert{k3, PassMoveSchedule{rows_to_ops(r.rows("schedule")), validate(k1.k(), start), k3.matrix()},
                                CobordismVerdict{}};
    const std::string ms = r.str("metabolizer_status");
    if (ms == "cobordant")
      cert.metabolizer = CobordismVerdict::cobordant(Metabolizer{optional_rows(r, "metabolizer"), cobordism_block(k3, k2)});
    else if (ms == "inconclusive")
      cert.metabolizer = CobordismVerdict::inconclusive(metabolizer_bound(fresh.opt));
    else
      return check.fail("certificate metabolizer status " + ms);
    if (!verify_certificate(k1, k2, cert)) check.fail("certificate does not verify");
    check_same_status(r, status, check);
    return;
  }

  // No witness to replay: the claim must match a fresh run with the same bounds.
  check_same_status(r, status, check);
  if (r.has("obstruction") && doc.contains("obstruction") && r.str("obstruction") != doc["obstruction"].get<std::string>())
    check.fail("obstruction values differ");
}

// ---------------------------------------------------------------- driver

struct Invocation {
  std::string verb;
  std::vector<std::string> files;
  std::string file;
  std::string file2;
  unsigned long n = 0;
};

void dispatch(Command& c, const Invocation& inv) {
  if (inv.verb == "invariants") cmd_invariants(c, inv.file);
  else if (inv.verb == "realizable") cmd_realizable(c, inv.n, inv.files);
  else if (inv.verb == "passmoves") cmd_passmoves(c, inv.file);
  else if (inv.verb == "cobordant") cmd_cobordant(c, inv.file, inv.file2);
  else if (inv.verb == "hyperbolize") cmd_hyperbolize(c, inv.file);
  else if (inv.verb == "slice") cmd_slice(c, inv.file);
}

// Bounds the report was produced with, so a verification reruns the same search.
Options bounds_from_report(const Options& given, const std::string& verb, const ParsedReport& r) {
  Options o = given;
  auto read = [&](const char* key) -> std::optional<long> {
    if (!r.has(key)) return std::nullopt;
    const json v = r.value(key);
    if (!v.is_number_integer() || v.get<long>() <= 0) throw ParseError(std::string("report field ") + key + " is not a positive bound");
    return v.get<long>();
  };
  if (verb == "realizable") {
    o.bound = read("bound_metabolizer");
    o.isotropic_bound = read("bound_isotropic");
  } else if (verb == "passmoves" || verb == "hyperbolize") {
    o.bound = read("bound_isotropic");
  } else if (verb == "cobordant" || verb == "slice") {
    o.bound = read("bound_metabolizer");
  }
  return o;
}

int execute(const Options& opt, const Invocation& inv, std::ostream& out, std::ostream& err) {
  Command c(opt);
  try {
    if (opt.verify.empty()) {
      dispatch(c, inv);
      out << c.report.render(opt.structured);
      return c.exit_code;
    }

    Input report_in = read_input(opt.verify);
    ParsedReport parsed;
    try {
      parsed = ParsedReport::parse(report_in.bytes, kBlockKeys);
    } catch (const ParseError& e) {
      throw Failure{kParseError, "parse-error", opt.verify + ": " + e.what()};
    }
    Options rerun = opt;
    try {
      rerun = bounds_from_report(opt, inv.verb, parsed);
    } catch (const ParseError& e) {
      throw Failure{kParseError, "parse-error", opt.verify + ": " + e.what()};
    }
    Command fresh(rerun);
    dispatch(fresh, inv);

    Check check;
    try {
      verify_report(inv.verb, fresh, parsed, check);
    } catch (const ParseError& e) {
      check.fail(std::string("malformed report: ") + e.what());
    } catch (const Error& e) {
      check.fail(e.what());
    }
    for (const auto& in : fresh.inputs) c.add_input(in);
    c.report.set("report", report_in.path);
    c.report.set("report_sha256", report_in.digest);
    c.report.set("verified", check.ok);
    if (!check.ok) c.report.set("detail", check.detail);
    c.finish(check.ok ? "verified" : "rejected", check.ok ? kCertified : kObstructed);
    out << c.report.render(opt.structured);
    return c.exit_code;
  } catch (const Failure& f) {
    err << kProgram << ": " << f.message << "\n";
    c.report.set("error", f.message);
    c.finish(f.status, f.code);
    out << c.report.render(opt.structured);
    return f.code;
  } catch (const Error& e) {
    err << kProgram << ": " << e.what() << "\n";
    c.report.set("error", e.what());
    c.finish("invalid-input", kValidationError);
    out << c.report.render(opt.structured);
    return kValidationError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert matrix invariants, pass-move schedules, cobordism and realizability"};
  app.name(kProgram);
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options opt;
  opt.args = args;
  std::string format = "text";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--verify", opt.verify, "re-check a report produced by the same command");

  Invocation inv;
  long bound = 0, iso = 0;
  auto bound_option = [&](CLI::App* sub, const char* what) {
    sub->add_option("--bound", bound, what)->check(CLI::PositiveNumber);
  };

  CLI::App* invariants = app.add_subcommand("invariants", "print k, n, dim and the Arf invariant or signature");
  invariants->add_option("file", inv.file, "knot file")->required();

  CLI::App* realizable = app.add_subcommand("realizable", "decide whether a pair of n-knots is realizable");
  realizable->add_option("n", inv.n, "knot dimension")->required()->check(CLI::PositiveNumber);
  realizable->add_option("files", inv.files, "two knot files (needed for odd n)");
  bound_option(realizable, "coefficient bound of the metabolizer search (default 2)");
  realizable->add_option("--isotropic-bound", iso, "coefficient bound of the isotropic search (default 10)")
      ->check(CLI::PositiveNumber);

  CLI::App* passmoves = app.add_subcommand("passmoves", "pass-move schedule from the trivial knot");
  passmoves->add_option("file", inv.file, "knot file")->required();
  bound_option(passmoves, "coefficient bound of the isotropic search (default 10)");

  CLI::App* cobordant = app.add_subcommand("cobordant", "search a metabolizer of A1 + (-A2)");
  cobordant->add_option("file1", inv.file, "first knot file")->required();
  cobordant->add_option("file2", inv.file2, "second knot file")->required();
  bound_option(cobordant, "coefficient bound of the metabolizer search (default 2)");

  CLI::App* hyper = app.add_subcommand("hyperbolize", "split an even unimodular form into hyperbolic planes");
  hyper->add_option("file", inv.file, "form file or k-odd knot file")->required();
  bound_option(hyper, "coefficient bound of the isotropic search (default 10)");

  CLI::App* slice = app.add_subcommand("slice", "search a metabolizer of A itself");
  slice->add_option("file", inv.file, "knot file")->required();
  bound_option(slice, "coefficient bound of the metabolizer search (default 2)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kParseError;
  }

  for (CLI::App* sub : app.get_subcommands()) inv.verb = sub->get_name();
  opt.structured = format == "structured";
  if (bound > 0) opt.bound = bound;
  if (iso > 0) opt.isotropic_bound = iso;
  return execute(opt, inv, out, err);
}

}  // namespace seifert::cli
