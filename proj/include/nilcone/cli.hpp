#pragma once

// Command-line front end. run() is the whole program minus main(); tests
// can drive it in-process.
//
// Exit codes: 0 ok, 2 domain error, 3 resource error, 64 usage, 70 internal.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilcone/chain.hpp"
#include "nilcone/hecke.hpp"
#include "nilcone/json_io.hpp"
#include "nilcone/multgl.hpp"
#include "nilcone/multsimple.hpp"
#include "nilcone/rootsys.hpp"

namespace nilcone {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

enum ExitCode : int { kOk = 0, kDomain = 2, kResource = 3, kUsage = 64, kInternal = 70 };

namespace cli_detail {

inline json read_json_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw DomainError("io_error", field, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("parse_error", field, std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

inline void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else {
    out.emplace_back(path, j.dump());
  }
}

/// One "key  value" line per leaf, keys padded to a common width.
inline std::string render_text(const json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

inline LieType parse_lie_type(const std::string& family, int rank) {
  if (family.size() != 1) throw DomainError("invalid_type", "type", "type must be a single letter A-G, got '" + family + "'");
  LieType t{static_cast<char>(std::toupper(static_cast<unsigned char>(family[0]))), rank};
  validate(t);
  return t;
}

inline std::string join_command(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace cli_detail

/// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nilcone: equivariant multiplicities of nilpotent-cone components (simple roots use Bourbaki numbering)",
               "nilcone"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string format = "json";
  bool timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", timing, "Include wall-clock timing_ms in the report");
  };

  json inputs = json::object();
  std::string command;
  std::function<json()> action;

  // mult gl / mult simple
  auto* mult = app.add_subcommand("mult", "Virtual equivariant multiplicities");
  mult->require_subcommand(1);
  auto* gl = mult->add_subcommand("gl", "GL_n fixed points: --type n | chain | type12");
  int g = 0, n = 0;
  std::string gl_type;
  std::vector<std::int64_t> mvec;
  std::string chain_file;
  std::int64_t twol_minus_v = 0;
  gl->add_option("--g", g, "Genus (>= 2)");
  gl->add_option("--n", n, "Rank");
  gl->add_option("--type", gl_type, "Fixed-point type")->required()->check(CLI::IsMember({"n", "chain", "type12"}));
  gl->add_option("--m", mvec, "Comma-separated m-vector for --type chain")->delimiter(',');
  gl->add_option("--chain-file", chain_file, "Chain JSON for --type chain");
  gl->add_option("--twol-minus-v", twol_minus_v, "2l - v for --type type12");
  add_common(gl);
  gl->callback([&] {
    command = "mult gl";
    action = [&]() -> json {
      inputs["type"] = gl_type;
      if (gl_type == "n") {
        require(gl->count("--g") && gl->count("--n"), "missing_flag", "--g/--n", "--type n needs --g and --n");
        inputs["g"] = g;
        inputs["n"] = n;
        return to_json(mult_type_n(g, n));
      }
      if (gl_type == "type12") {
        require(gl->count("--g") && gl->count("--twol-minus-v"), "missing_flag", "--g/--twol-minus-v",
                "--type type12 needs --g and --twol-minus-v");
        require(!gl->count("--n") || n == 3, "domain", "--n", "type (1,2) is implemented for rank 3 only");
        inputs["g"] = g;
        inputs["n"] = 3;
        inputs["twol_minus_v"] = twol_minus_v;
        json r = to_json(mult_type12_rank3(g, twol_minus_v));
        return r;
      }
      std::optional<ChainHiggsBundle> c;
      if (!chain_file.empty()) {
        c = chain_from_json(cli_detail::read_json_file(chain_file, "--chain-file"));
        inputs["chain"] = to_json(*c);
      } else {
        require(gl->count("--g") && gl->count("--m"), "missing_flag", "--m",
                "--type chain needs --chain-file or --g with --m");
        require(!gl->count("--n") || static_cast<std::size_t>(n) == mvec.size() + 1, "domain", "--n",
                "--m must have n-1 entries");
        c = ChainHiggsBundle::from_m(g, mvec);
        inputs["g"] = g;
        inputs["n"] = c->rank();
        inputs["m"] = mvec;
      }
      json r = to_json(mult_type111(*c));
      r["m"] = c->m_vector();
      r["tplus_dims"] = to_json(tplus_dims(*c));
      r["base_dims"] = to_json(gl_hitchin_base_dims(c->genus(), c->rank()));
      return r;
    };
  });

  auto* simple = mult->add_subcommand("simple", "Simple group G with per-node zero counts m_i");
  std::string family;
  int rank = 0;
  simple->add_option("--type", family, "Lie family A-G")->required();
  simple->add_option("--rank", rank, "Rank")->required();
  simple->add_option("--m", mvec, "Comma-separated m-vector (length = rank)")->required()->delimiter(',');
  add_common(simple);
  simple->callback([&] {
    command = "mult simple";
    action = [&]() -> json {
      const RootSystem r(cli_detail::parse_lie_type(family, rank));
      inputs = json{{"type", r.label()}, {"m", mvec}, {"numbering", "Bourbaki"}};
      return to_json(mult_simple(r, mvec));
    };
  });

  auto* cls = app.add_subcommand("classify", "Stability and very-stability of a chain");
  cls->add_option("--chain-file", chain_file, "Chain JSON")->required();
  add_common(cls);
  cls->callback([&] {
    command = "classify";
    action = [&]() -> json {
      const auto c = chain_from_json(cli_detail::read_json_file(chain_file, "--chain-file"));
      inputs["chain"] = to_json(c);
      const auto v = classify(c);
      return json{{"stable", v.stable},
                  {"very_stable", v.very_stable},
                  {"reason", v.very_stable ? json(nullptr) : json(v.reason)},
                  {"m", c.m_vector()}};
    };
  });

  auto* hk = app.add_subcommand("hecke", "Apply a list of Hecke moves to a chain");
  std::string moves_text, moves_file;
  hk->add_option("--chain-file", chain_file, "Chain JSON")->required();
  auto* mv_inline = hk->add_option("--moves", moves_text, "Move list as inline JSON");
  auto* mv_file = hk->add_option("--moves-file", moves_file, "Move list JSON file");
  mv_inline->excludes(mv_file);
  add_common(hk);
  hk->callback([&] {
    command = "hecke";
    action = [&]() -> json {
      auto c = chain_from_json(cli_detail::read_json_file(chain_file, "--chain-file"));
      json mj;
      if (!moves_file.empty()) {
        mj = cli_detail::read_json_file(moves_file, "--moves-file");
      } else {
        require(!moves_text.empty(), "missing_flag", "--moves", "hecke needs --moves or --moves-file");
        try {
          mj = json::parse(moves_text);
        } catch (const json::parse_error& e) {
          throw DomainError("parse_error", "--moves", e.what());
        }
      }
      const auto moves = moves_from_json(mj);
      inputs["chain"] = to_json(c);
      inputs["moves"] = mj;
      json steps = json::array();
      for (const auto& m : moves) {
        c = apply_move(c, m);
        steps.push_back(json{{"move", to_json(m)}, {"chain", to_json(c)}, {"stable", is_stable(c)},
                             {"very_stable", is_very_stable(c)}});
      }
      return json{{"steps", steps}, {"final", to_json(c)}};
    };
  });

  auto* ri = app.add_subcommand("rootinfo", "Positive roots, heights, degrees and cominuscule nodes");
  ri->add_option("--type", family, "Lie family A-G")->required();
  ri->add_option("--rank", rank, "Rank")->required();
  add_common(ri);
  ri->callback([&] {
    command = "rootinfo";
    action = [&]() -> json {
      const RootSystem r(cli_detail::parse_lie_type(family, rank));
      inputs = json{{"type", r.label()}};
      json roots = json::array();
      for (const auto& a : r.positive_roots()) roots.push_back(json{{"coeffs", a.coeffs}, {"height", a.height}});
      json hist = json::object();
      for (const auto& [h, c] : height_histogram(r)) hist[std::to_string(h)] = c;
      json levi = json::object();
      for (int node : cominuscule_nodes(r)) levi[std::to_string(node)] = levi_degrees(r, node);
      BigInt order = 1;
      for (int d : degrees(r)) order *= d;
      return json{{"numbering", "Bourbaki"},
                  {"cartan", r.cartan()},
                  {"positive_roots", roots},
                  {"height_histogram", hist},
                  {"degrees", degrees(r)},
                  {"weyl_group_order", order.str()},
                  {"cominuscule_nodes", cominuscule_nodes(r)},
                  {"levi_degrees", levi}};
    };
  });

  auto* sc = app.add_subcommand("scan", "Polynomiality of mult simple over the grid [0, bound]^rank");
  int bound = 0;
  std::uint64_t cap = 0;
  sc->add_option("--type", family, "Lie family A-G")->required();
  sc->add_option("--rank", rank, "Rank")->required();
  sc->add_option("--bound", bound, "Upper bound for each m_i")->required();
  sc->add_option("--cap", cap, "Maximum grid size")->default_val(kDefaultScanCap);
  add_common(sc);
  sc->callback([&] {
    command = "scan";
    action = [&]() -> json {
      const RootSystem r(cli_detail::parse_lie_type(family, rank));
      inputs = json{{"type", r.label()}, {"bound", bound}, {"cap", cap}, {"numbering", "Bourbaki"}};
      const auto report = polynomiality_scan(r, bound, cap);
      json entries = json::array();
      for (const auto& e : report.entries) {
        const auto* p = std::get_if<IntPoly>(&e.expansion);
        const auto* np = std::get_if<NotPolynomial>(&e.expansion);
        entries.push_back(json{{"m", e.m},
                               {"polynomial", p ? to_json(*p) : json(nullptr)},
                               {"not_polynomial_witness_degree", np ? json(np->remainder_degree) : json(nullptr)}});
      }
      return json{{"entries", entries},
                  {"total", report.entries.size()},
                  {"polynomial_count", report.polynomial_count()}};
    };
  });

  auto* pr = app.add_subcommand("pair", "Series of m_A(t) m_B(t) chi_T(Sym A*) for GL_n");
  std::vector<std::string> ma_text{"1"}, mb_text{"1"};
  std::size_t order = 10;
  pr->add_option("--g", g, "Genus")->required();
  pr->add_option("--n", n, "Rank")->required();
  pr->add_option("--ma", ma_text, "Coefficients of m_A, ascending, comma-separated")->delimiter(',');
  pr->add_option("--mb", mb_text, "Coefficients of m_B, ascending, comma-separated")->delimiter(',');
  pr->add_option("--order", order, "Truncation order")->default_val(10);
  add_common(pr);
  pr->callback([&] {
    command = "pair";
    action = [&]() -> json {
      auto to_mult = [](const std::vector<std::string>& text, const std::string& field) {
        std::vector<BigInt> c;
        for (const auto& s : text) c.push_back(bigint_from_json(json(s), field));
        IntPoly p(std::move(c));
        require(!p.is_zero(), "domain", field, field + " must be nonzero");
        return MultResult{FactoredChar{}, p};
      };
      const auto ma = to_mult(ma_text, "--ma");
      const auto mb = to_mult(mb_text, "--mb");
      inputs = json{{"g", g}, {"n", n}, {"order", order}, {"ma", to_json(*ma.polynomial())},
                    {"mb", to_json(*mb.polynomial())}};
      const auto ab = euler_pairing_series(ma, mb, g, n, order);
      const auto ba = euler_pairing_series(mb, ma, g, n, order);
      return json{{"series", to_json(ab)}, {"symmetric", ab == ba}, {"euler_prefactor", euler_prefactor(g, n)}};
    };
  });

  auto* ct = app.add_subcommand("count", "Upward-flow points in a generic Hitchin fibre");
  bool enumerate = false;
  std::uint64_t ecap = kDefaultEnumerationCap;
  ct->add_option("--chain-file", chain_file, "Chain JSON")->required();
  ct->add_flag("--enumerate", enumerate, "List every sheet-subset assignment");
  ct->add_option("--cap", ecap, "Maximum enumeration size")->default_val(kDefaultEnumerationCap);
  add_common(ct);
  ct->callback([&] {
    command = "count";
    action = [&]() -> json {
      const auto c = chain_from_json(cli_detail::read_json_file(chain_file, "--chain-file"));
      inputs = json{{"chain", to_json(c)}, {"enumerate", enumerate}, {"cap", ecap}};
      json r{{"count", intersection_count(c).str()}, {"m", c.m_vector()}};
      if (enumerate) {
        const auto slots = zero_slots(c);
        json list = json::array();
        for (const auto& a : intersection_enumerate(c, ecap)) {
          json row = json::array();
          for (std::size_t s = 0; s < a.size(); ++s) {
            row.push_back(json{{"i", slots[s].i}, {"point", slots[s].point}, {"sheets", a[s]}});
          }
          list.push_back(row);
        }
        r["assignments"] = list;
        r["enumerated"] = list.size();
      }
      return r;
    };
  });

  std::vector<const char*> argv{"nilcone"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.name() << " (field " << (e.field().empty() ? "-" : e.field()) << "): " << e.what() << '\n';
    return dynamic_cast<const ResourceError*>(&e) ? kResource : dynamic_cast<const DomainError*>(&e) ? kDomain
                                                                                                   : kInternal;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    json result = action();
    const auto t1 = std::chrono::steady_clock::now();
    json report{{"schema", kReportSchema},
                {"command", command},
                {"argv", cli_detail::join_command(args)},
                {"inputs", inputs},
                {"result", result},
                {"version", kVersion}};
    if (timing) report["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (format == "text") {
      out << cli_detail::render_text(report);
    } else {
      out << report.dump(2) << '\n';
    }
    return kOk;
  } catch (const ResourceError& e) {
    err << "error: " << e.name() << " (field " << (e.field().empty() ? "-" : e.field()) << "): " << e.what() << '\n';
    return kResource;
  } catch (const DomainError& e) {
    err << "error: " << e.name() << " (field " << (e.field().empty() ? "-" : e.field()) << "): " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace nilcone
