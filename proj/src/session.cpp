#include "dualhs/session.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>
#include <variant>

#include "dualhs/claims.hpp"

namespace dualhs {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const { throw ScriptError(line, message); }

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    ws();
    return pos >= s.size();
  }
  bool accept(std::string_view token) {
    ws();
    if (s.compare(pos, token.size(), token) != 0) return false;
    pos += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string ident() {
    ws();
    const std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) fail("expected a name");
    return s.substr(start, pos - start);
  }
  long long integer() {
    ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    try {
      return std::stoll(s.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }
  // Text between a matching open/close pair, with nesting.
  std::string balanced(char open, char close) {
    ws();
    if (pos >= s.size() || s[pos] != open) fail(std::string("expected '") + open + "'");
    const std::size_t start = ++pos;
    int depth = 1;
    for (; pos < s.size(); ++pos) {
      if (s[pos] == open) ++depth;
      if (s[pos] == close && --depth == 0) return s.substr(start, pos++ - start);
    }
    fail(std::string("missing '") + close + "'");
  }
  std::vector<std::string> words() {
    std::vector<std::string> out;
    std::istringstream in(s.substr(pos));
    for (std::string w; in >> w;) out.push_back(w);
    pos = s.size();
    return out;
  }
};

struct Command {
  std::size_t line = 0;
  std::string text;
  std::string verb;  // compute, verify or report
  std::string what;
  std::vector<std::string> args;
  int upto = 10;
  int index = 1;
  std::string format;
  std::string path;
};

using Object = std::variant<RingPtr, IdealPtr, FPModule>;

class Session {
 public:
  explicit Session(const SessionFlags& flags) : flags_(flags) {
    if (flags.field) field_ = *flags.field;
  }

  void parse(const std::string& script) {
    std::istringstream in(script);
    std::string raw;
    for (std::size_t line = 1; std::getline(in, raw); ++line) {
      const std::string text = strip(raw.substr(0, raw.find('#')));
      if (text.empty()) continue;
      Cursor c{text, line};
      const std::string verb = c.ident();
      if (verb == "field") parse_field(c);
      else if (verb == "ring") parse_ring(c);
      else if (verb == "ideal") parse_ideal(c);
      else if (verb == "module") parse_module(c);
      else if (verb == "compute" || verb == "verify" || verb == "report") parse_command(c, verb);
      else c.fail("unknown statement '" + verb + "'");
    }
  }

  SessionResult run() {
    SessionResult result;
    Json pending = Json::array();
    bool reported = false;
    for (const Command& cmd : commands_) {
      if (cmd.verb == "report") {
        const std::string format = flags_.format ? *flags_.format : cmd.format.empty() ? "json" : cmd.format;
        const std::string out = render(pending, format);
        if (cmd.path.empty()) {
          result.output += out;
        } else {
          std::ofstream file(cmd.path, std::ios::binary);
          file << out;
          if (!file) {
            result.exit_status = 1;
            result.diagnostics += "line " + std::to_string(cmd.line) + ": cannot write " + cmd.path + "\n";
          }
        }
        pending = Json::array();
        reported = true;
        continue;
      }
      Json rep = execute(cmd);
      if (rep["status"] != "ok") {
        result.exit_status = 1;
        result.diagnostics += "line " + std::to_string(cmd.line) + ": " + cmd.text + ": " +
                              (rep.contains("error") ? rep["error"].get<std::string>()
                                                     : "verdict " + rep["verdict"].get<std::string>()) +
                              "\n";
      }
      pending.push_back(std::move(rep));
    }
    if (!pending.empty() || !reported) result.output += render(pending, flags_.format.value_or("json"));
    return result;
  }

 private:
  static std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
  }

  template <class T>
  const T& lookup(const Cursor& c, const std::string& name, const char* kind) const {
    const auto it = objects_.find(name);
    if (it == objects_.end()) c.fail("undefined name '" + name + "'");
    if (!std::holds_alternative<T>(it->second)) c.fail("'" + name + "' is not a " + kind);
    return std::get<T>(it->second);
  }
  const RingPtr& ring(const Cursor& c, const std::string& n) const { return lookup<RingPtr>(c, n, "ring"); }
  const IdealPtr& ideal(const Cursor& c, const std::string& n) const { return lookup<IdealPtr>(c, n, "ideal"); }
  const FPModule& module(const Cursor& c, const std::string& n) const { return lookup<FPModule>(c, n, "module"); }

  void define(const Cursor& c, const std::string& name, Object object) {
    if (!objects_.emplace(name, std::move(object)).second) c.fail("'" + name + "' is already defined");
  }

  std::string definition_name(Cursor& c) {
    const std::string name = c.ident();
    c.expect("=");
    return name;
  }

  void parse_field(Cursor& c) {
    const std::string text = strip(c.s.substr(c.pos));
    Field parsed = Field::rationals();
    try {
      parsed = Field::parse(text);
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
    if (field_set_ && !(parsed == script_field_)) c.fail("a session uses a single field");
    if (!objects_.empty()) c.fail("field must come before any definition");
    script_field_ = parsed;
    field_set_ = true;
    if (!flags_.field) field_ = parsed;
  }

  template <class F>
  auto guarded(const Cursor& c, F&& body) -> decltype(body()) {
    try {
      return body();
    } catch (const ScriptError&) {
      throw;
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
  }

  void parse_ring(Cursor& c) {
    const std::string name = definition_name(c);
    if (c.ident() != "poly") c.fail("expected poly(<vars>)");
    std::vector<std::string> vars;
    {
      const std::string inner = c.balanced('(', ')');
      Cursor v{inner, c.line};
      while (!v.done()) {
        vars.push_back(v.ident());
        if (!v.done()) v.expect(",");
      }
    }
    std::string rels;
    if (c.accept("/")) rels = c.balanced('(', ')');
    if (!c.done()) c.fail("unexpected text after ring definition");
    define(c, name, guarded(c, [&] {
             const auto sig = RingSignature::make(vars, field_);
             return QuotientRing::make(sig, parse_poly_list(rels, sig));
           }));
  }

  void parse_ideal(Cursor& c) {
    const std::string name = definition_name(c);
    const std::string gens = c.balanced('(', ')');
    if (c.ident() != "in") c.fail("expected 'in <ring>'");
    const RingPtr& r = ring(c, c.ident());
    if (!c.done()) c.fail("unexpected text after ideal definition");
    define(c, name, guarded(c, [&] { return make_ideal(r, polys(r, gens)); }));
  }

  static std::vector<Polynomial> polys(const RingPtr& r, const std::string& text) {
    std::vector<Polynomial> out;
    for (const auto& p : parse_poly_list(text, r->signature())) out.push_back(r->reduce(p));
    return out;
  }

  struct Vectors {
    RingPtr ring;
    std::size_t rank = 0;
    std::vector<FreeVector> columns;
  };

  // "<ring>^<k>; [..], [..]" as k-component vectors.
  Vectors vectors(const Cursor& outer, const std::string& inner) {
    Cursor c{inner, outer.line};
    Vectors out;
    out.ring = ring(c, c.ident());
    c.expect("^");
    out.rank = static_cast<std::size_t>(c.integer());
    if (out.rank == 0) c.fail("rank must be positive");
    if (c.accept(";")) {
      do {
        const auto entries = guarded(c, [&] { return polys(out.ring, c.balanced('[', ']')); });
        if (entries.size() != out.rank)
          c.fail("vector has " + std::to_string(entries.size()) + " entries, expected " +
                 std::to_string(out.rank));
        out.columns.push_back(FreeVector::from_polynomials(out.ring->signature(), entries));
      } while (c.accept(","));
    }
    if (!c.done()) c.fail("unexpected text in module definition");
    return out;
  }

  void parse_module(Cursor& c) {
    const std::string name = definition_name(c);
    const std::string kind = c.ident();
    const std::string inner = c.balanced('(', ')');
    if (!c.done()) c.fail("unexpected text after module definition");
    if (kind == "free") {
      Cursor a{inner, c.line};
      const RingPtr& r = ring(a, a.ident());
      a.expect(",");
      const auto rank = static_cast<std::size_t>(a.integer());
      if (!a.done()) a.fail("expected free(<ring>, <rank>)");
      define(c, name, FPModule::free(r, rank));
    } else if (kind == "residue") {
      Cursor a{inner, c.line};
      const RingPtr& r = ring(a, a.ident());
      if (!a.done()) a.fail("expected residue(<ring>)");
      define(c, name, guarded(c, [&] { return FPModule::residue_field(r); }));
    } else if (kind == "sub") {
      const Vectors v = vectors(c, inner);
      if (v.columns.empty()) c.fail("sub needs at least one generator");
      define(c, name, guarded(c, [&] { return submodule_presentation(v.ring, v.columns); }));
    } else if (kind == "coker") {
      const Vectors v = vectors(c, inner);
      define(c, name, guarded(c, [&] { return FPModule(v.ring, v.rank, v.columns); }));
    } else {
      c.fail("unknown module constructor '" + kind + "'");
    }
  }

  void parse_command(Cursor& c, const std::string& verb) {
    Command cmd;
    cmd.line = c.line;
    cmd.text = c.s;
    cmd.verb = verb;
    auto words = c.words();
    auto take_flag = [&](const std::string& flag) -> std::optional<std::string> {
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i] != flag) continue;
        if (i + 1 >= words.size()) c.fail(flag + " needs a value");
        std::string value = words[i + 1];
        words.erase(words.begin() + static_cast<long>(i), words.begin() + static_cast<long>(i) + 2);
        return value;
      }
      return std::nullopt;
    };
    auto number = [&](const std::string& text) {
      Cursor n{text, c.line};
      const long long v = n.integer();
      if (!n.done() || v > 100000) c.fail("bad number '" + text + "'");
      return static_cast<int>(v);
    };

    if (verb == "report") {
      if (auto f = take_flag("--format")) cmd.format = *f;
      if (!cmd.format.empty() && cmd.format != "json" && cmd.format != "csv" && cmd.format != "text")
        c.fail("unknown format '" + cmd.format + "'");
      if (words.size() > 1) c.fail("report takes at most one path");
      if (!words.empty()) cmd.path = words.front();
      commands_.push_back(cmd);
      return;
    }
    if (auto u = take_flag("--upto")) cmd.upto = number(*u);
    if (words.empty()) c.fail(verb + " needs arguments");
    cmd.what = words.front();
    cmd.args.assign(words.begin() + 1, words.end());

    auto arity = [&](std::size_t n, const std::string& usage) {
      if (cmd.args.size() != n) c.fail("usage: " + usage);
    };
    auto module_ideal = [&](std::size_t offset) {
      const FPModule& m = module(c, cmd.args[offset]);
      const IdealPtr& i = ideal(c, cmd.args[offset + 1]);
      if (m.ring() != i->ring()) c.fail("module and ideal live over different rings");
    };

    if (verb == "compute") {
      const std::string& w = cmd.what;
      if (w == "dual_hs" || w == "hs" || w == "ext1_dual" || w == "delta" || w == "coefficients" ||
          w == "phi") {
        arity(2, "compute " + w + " <module> <ideal>");
        module_ideal(0);
      } else if (w == "ext") {
        arity(3, "compute ext <i> <module> <ideal>");
        cmd.index = number(cmd.args[0]);
        cmd.args.erase(cmd.args.begin());
        module_ideal(0);
      } else if (w == "reduction") {
        arity(1, "compute reduction <ideal>");
        ideal(c, cmd.args[0]);
      } else if (w == "zero_dim") {
        arity(2, "compute zero_dim <ring> <module>");
        if (module(c, cmd.args[1]).ring() != ring(c, cmd.args[0])) c.fail("module is not over that ring");
      } else {
        c.fail("unknown computation '" + w + "'");
      }
    } else {
      const ClaimInfo* info = nullptr;
      for (const auto& i : claim_registry())
        if (i.id == cmd.what) info = &i;
      if (!info) c.fail("unknown claim '" + cmd.what + "'");
      switch (info->arguments) {
        case ClaimArguments::module_ideal:
          arity(2, "verify " + cmd.what + " <module> <ideal>");
          module_ideal(0);
          break;
        case ClaimArguments::module_only:
          arity(1, "verify " + cmd.what + " <module>");
          module(c, cmd.args[0]);
          break;
        case ClaimArguments::ring_only:
          arity(1, "verify " + cmd.what + " <ring>");
          ring(c, cmd.args[0]);
          break;
      }
    }
    commands_.push_back(cmd);
  }

  Options options(const Command& cmd) const {
    Options o;
    o.seed = flags_.seed;
    o.window = flags_.window;
    o.nmax = flags_.nmax;
    o.upto = cmd.upto;
    return o;
  }

  const Object& object(const std::string& name) const { return objects_.at(name); }
  const FPModule& mod(const std::string& n) const { return std::get<FPModule>(object(n)); }
  const IdealPtr& idl(const std::string& n) const { return std::get<IdealPtr>(object(n)); }
  const RingPtr& rng(const std::string& n) const { return std::get<RingPtr>(object(n)); }

  Json execute(const Command& cmd) const {
    Json rep;
    rep["command"] = cmd.text;
    rep["line"] = cmd.line;
    Json inputs = Json::object();
    for (const auto& a : cmd.args) {
      const Object& o = object(a);
      if (std::holds_alternative<RingPtr>(o)) inputs[a] = std::get<RingPtr>(o)->describe();
      else if (std::holds_alternative<IdealPtr>(o)) inputs[a] = std::get<IdealPtr>(o)->describe();
      else inputs[a] = std::get<FPModule>(o).describe();
    }
    rep["inputs"] = inputs;
    rep["values"] = Json::array();
    rep["postulation"] = nullptr;
    rep["coefficients"] = nullptr;
    rep["series_numerator"] = nullptr;
    rep["reduction"] = nullptr;
    rep["phi"] = nullptr;
    rep["verdict"] = nullptr;
    rep["checks"] = Json::array();
    rep["seed"] = flags_.seed;
    rep["provenance"] = {{"source", "computed"}, {"operation", operation(cmd)}};
    rep["status"] = "ok";
    const Options opt = options(cmd);
    try {
      if (cmd.verb == "verify") run_verify(cmd, opt, rep);
      else run_compute(cmd, opt, rep);
    } catch (const std::exception& e) {
      rep["status"] = "error";
      rep["error"] = e.what();
    }
    return rep;
  }

  static std::string operation(const Command& cmd) {
    if (cmd.verb == "verify") return "verify";
    static const std::map<std::string, std::string> ops = {
        {"dual_hs", "dual_hs_value"},      {"hs", "module_truncation_length"},
        {"ext1_dual", "ext_dual_value"},   {"ext", "ext_dual_value"},
        {"delta", "dual_hilbert_function_delta"}, {"coefficients", "dual_hilbert_coefficients"},
        {"reduction", "minimal_reduction"}, {"phi", "phi"},
        {"zero_dim", "zero_dim_report"},
    };
    return ops.at(cmd.what);
  }

  template <class Fit>
  static void postulation(Json& rep, Fit&& fit) {
    try {
      rep["postulation"] = fit().postulation;
    } catch (const BudgetExhausted&) {
    }
  }

  void run_compute(const Command& cmd, const Options& opt, Json& rep) const {
    const std::string& w = cmd.what;
    if (w == "reduction") {
      const auto red = minimal_reduction(*idl(cmd.args[0]), opt.seed);
      Json gens = Json::array();
      for (const auto& g : red.generators) gens.push_back(g.to_string());
      rep["reduction"] = {{"r", red.r}, {"generators", gens}};
      return;
    }
    if (w == "zero_dim") {
      const RingPtr& r = rng(cmd.args[0]);
      const auto z = zero_dim_report(mod(cmd.args[1]), *maximal_ideal(r), opt);
      rep["reduction"] = {{"r", z.r}};
      rep["coefficients"] = {{"c", {z.e0, z.c1}}};
      rep["series_numerator"] = z.f.numerator;
      rep["zero_dim"] = {{"r", z.r},         {"e0", z.e0}, {"alpha", z.alpha},
                         {"c1", z.c1},       {"f", z.f.to_string()},
                         {"c1_series", z.c1_series}, {"consistent", z.consistent}};
      return;
    }
    const FPModule& m = mod(cmd.args[0]);
    const Ideal& I = *idl(cmd.args[1]);
    if (w == "coefficients") {
      const auto dual = dual_hilbert_coefficients(m, I, opt);
      const auto hs = hilbert_coefficients(m, I, opt);
      rep["values"] = dual.fit.values;
      rep["postulation"] = dual.fit.postulation;
      rep["coefficients"] = {{"c", dual.values}, {"e", hs.values}};
      rep["series_numerator"] = dual.series.numerator;
      rep["e0"] = hs.values[0];
      rep["mu"] = m.minimal_generators();
      return;
    }
    if (w == "phi") {
      const int r = minimal_reduction(I, opt.seed).r;
      rep["reduction"] = {{"r", r}};
      rep["phi"] = phi(m, I, r, opt.route);
      return;
    }
    if (w == "ext" && (cmd.index < 0 || cmd.index > m.ring()->dimension() + 1))
      throw std::invalid_argument("Ext index must lie in [0, d + 1]");
    Json values = Json::array();
    for (int n = 0; n <= cmd.upto; ++n) {
      if (w == "dual_hs") values.push_back(dual_hs_value(m, I, n, opt.route));
      else if (w == "hs") values.push_back(module_truncation_length(m, I, n));
      else if (w == "ext1_dual") values.push_back(ext_dual_value(1, m, I, n, opt.route));
      else if (w == "ext") values.push_back(ext_dual_value(static_cast<std::size_t>(cmd.index), m, I, n, opt.route));
      else values.push_back(dual_hilbert_function_delta(m, I, n));
    }
    rep["values"] = values;
    if (w == "dual_hs") postulation(rep, [&] { return dual_hs_function(m, I, opt); });
    if (w == "hs") postulation(rep, [&] { return hs_function(m, I, opt); });
    if (w == "ext1_dual") postulation(rep, [&] { return ext1_dual_function(m, I, opt); });
  }

  void run_verify(const Command& cmd, const Options& opt, Json& rep) const {
    ClaimInstance in;
    switch (claim_info(cmd.what).arguments) {
      case ClaimArguments::module_ideal:
        in = {mod(cmd.args[0]).ring(), mod(cmd.args[0]), idl(cmd.args[1])};
        break;
      case ClaimArguments::module_only:
        in = {mod(cmd.args[0]).ring(), mod(cmd.args[0]), nullptr};
        break;
      case ClaimArguments::ring_only:
        in = {rng(cmd.args[0]), std::nullopt, nullptr};
        break;
    }
    const VerificationReport v = verify(cmd.what, in, opt);
    rep["verdict"] = v.verdict;
    for (const auto& c : v.checks)
      rep["checks"].push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}});
    rep["quantities"] = v.quantities;
    if (v.quantities.contains("r")) rep["reduction"] = {{"r", v.quantities["r"]}};
    if (v.quantities.contains("phi")) rep["phi"] = v.quantities["phi"];
    if (!v.error.empty()) rep["error"] = v.error;
    if (v.verdict != "pass") rep["status"] = v.verdict;
  }

  std::string render(const Json& reports, const std::string& format) const {
    if (format == "csv") return render_csv(reports);
    if (format == "text") return render_text(reports);
    const Json doc = {{"field", field_.name()}, {"seed", flags_.seed}, {"reports", reports}};
    return doc.dump(2) + "\n";
  }

  static std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
  }

  // One row per scalar; arrays of scalars use the index column.
  static void flatten(const Json& v, const std::string& key, const std::string& prefix,
                      std::string& out) {
    if (v.is_null()) return;
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), prefix, out);
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_structured())
          flatten(v[i], key + "[" + std::to_string(i) + "]", prefix, out);
        else
          out += prefix + csv_field(key) + "," + std::to_string(i) + "," + csv_field(scalar(v[i])) + "\n";
      }
    } else {
      out += prefix + csv_field(key) + ",," + csv_field(scalar(v)) + "\n";
    }
  }

  static std::string render_csv(const Json& reports) {
    std::string out = "line,command,key,index,value\n";
    for (const auto& rep : reports) {
      const std::string prefix = std::to_string(rep["line"].get<std::size_t>()) + "," +
                                 csv_field(rep["command"].get<std::string>()) + ",";
      for (auto it = rep.begin(); it != rep.end(); ++it) {
        if (it.key() == "command" || it.key() == "line" || it.key() == "inputs") continue;
        flatten(it.value(), it.key(), prefix, out);
      }
    }
    return out;
  }

  std::string render_text(const Json& reports) const {
    std::string out = "field " + field_.name() + ", seed " + std::to_string(flags_.seed) + "\n";
    for (const auto& rep : reports) {
      out += "\nline " + std::to_string(rep["line"].get<std::size_t>()) + ": " +
             rep["command"].get<std::string>() + "\n";
      for (auto it = rep.begin(); it != rep.end(); ++it) {
        const Json& v = it.value();
        if (it.key() == "command" || it.key() == "line" || it.key() == "checks" || it.key() == "seed" ||
            it.key() == "provenance" || v.is_null() || (v.is_array() && v.empty()))
          continue;
        out += "  " + it.key() + ": " + scalar(v) + "\n";
      }
      for (const auto& c : rep["checks"])
        out += std::string("  [") + (c["ok"].get<bool>() ? "ok" : "FAILED") + "] " +
               c["name"].get<std::string>() + ": " + scalar(c["lhs"]) + " vs " + scalar(c["rhs"]) + "\n";
    }
    return out;
  }

  SessionFlags flags_;
  Field field_ = Field::prime(kDefaultPrime);
  Field script_field_ = Field::prime(kDefaultPrime);
  bool field_set_ = false;
  std::map<std::string, Object> objects_;
  std::vector<Command> commands_;
};

}  // namespace

SessionResult run_session(const std::string& script, const SessionFlags& flags) {
  if (flags.format && *flags.format != "json" && *flags.format != "csv" && *flags.format != "text")
    throw std::invalid_argument("unknown format '" + *flags.format + "'");
  Session session(flags);
  session.parse(script);
  return session.run();
}

}  // namespace dualhs
