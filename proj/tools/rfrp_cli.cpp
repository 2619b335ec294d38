// rfrp command-line tool. Talks to the library only through rfrp/rfrp.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rfrp/rfrp.h"

using nlohmann::json;

namespace {

struct Failure {
  int code;
  std::string message;
};

void check(rfrp_status s) {
  if (s != RFRP_OK) throw Failure{static_cast<int>(s), rfrp_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  rfrp_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

using GroupPtr = std::unique_ptr<rfrp_group, decltype(&rfrp_group_free)>;
using GraphPtr = std::unique_ptr<rfrp_classx, decltype(&rfrp_classx_free)>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{2, "cannot read '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON, or the contents of a file.
std::string json_text(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  return read_file(arg);
}

GroupPtr load_group(const std::string& spec) {
  rfrp_group* g = nullptr;
  if (rfrp_group_from_fixture(spec.c_str(), &g) == RFRP_OK) return {g, rfrp_group_free};
  if (spec.find_first_of("{[") != 0 && !std::filesystem::exists(spec))
    throw Failure{2, "'" + spec + "' is neither a fixture nor a readable file"};
  json j = json::parse(json_text(spec));
  // A report envelope or a class X graph may be passed where a group is expected.
  if (j.contains("result") && j.contains("tool")) j = j["result"];
  std::string text = j.dump();
  if (j.contains("vertices")) {
    rfrp_classx* x = nullptr;
    check(rfrp_classx_from_json(text.c_str(), &x));
    GraphPtr graph(x, rfrp_classx_free);
    check(rfrp_classx_pi1(graph.get(), &g));
    return {g, rfrp_group_free};
  }
  if (j.contains("group") && !j.contains("generators")) text = j["group"].dump();
  check(rfrp_group_from_json(text.c_str(), &g));
  return {g, rfrp_group_free};
}

// Arrangement fixture name, arrangement JSON, or class X graph JSON.
GraphPtr load_graph(const std::string& spec) {
  rfrp_classx* x = nullptr;
  if (rfrp_classx_from_fixture(spec.c_str(), &x) == RFRP_OK) return {x, rfrp_classx_free};
  json j = json::parse(json_text(spec));
  if (j.contains("result") && j.contains("tool")) j = j["result"];
  std::string text = j.dump();
  if (j.contains("vertices")) check(rfrp_classx_from_json(text.c_str(), &x));
  else check(rfrp_classx_from_arrangement(text.c_str(), &x));
  return {x, rfrp_classx_free};
}

struct Options {
  std::string format = "json";
  int jobs = 1;
  bool list_fixtures = false;
  std::string group;
  std::string word;
  int p = 2;
  int depth = 3;
  unsigned long long index_bound = 4096;
  unsigned long long generator_bound = 20000;
  std::string method = "auto";
  std::string hints;
  bool nilpotent = false;
  std::vector<long> circle_bundle;
  std::string torsion;
  std::string label;
  std::vector<int> orders;
  std::size_t budget = 100000;
  unsigned long long seed = 0x5eed0000ull;
  std::string character;
  std::string quotient;
  bool check = false;
  std::string action;
  std::string input;
  int degree = 1;
  std::string subgroup;
  int rank = 2;
  int x_index = 2;
  std::string certificate;
};

json bounds_config(const Options& o) { return {{"index_bound", o.index_bound}, {"generator_bound", o.generator_bound}}; }

rfrp_bounds bounds(const Options& o) { return {o.index_bound, o.generator_bound}; }

std::string text_summary(const std::string& cmd, const json& r) {
  std::ostringstream out;
  if (cmd == "separate") {
    if (r.value("status", "") == "CERTIFIED")
      out << "CERTIFIED at depth " << r.value("depth", 0) << " (quotient of order "
          << r.value("quotient_order", std::string("?")) << ", method " << r.value("method", "") << ")";
    else
      out << "INCONCLUSIVE(" << r.value("max_depth", 0) << ")";
  } else if (cmd == "cover-b1") {
    out << "b1 = " << r.at("predicted").get<std::size_t>();
    if (r.contains("oracle")) out << (r.at("agree").get<bool>() ? " = " : " != ") << r.at("oracle").get<std::size_t>();
  } else if (cmd == "verdict") {
    out << r.at("verdict").get<std::string>();
  } else if (cmd == "battery") {
    out << r.at("conclusion").get<std::string>();
    for (const auto& f : r.at("fired")) out << "\n  " << f.at("rule").get<std::string>();
  } else if (cmd == "closure" && r.contains("status")) {
    out << r.at("status").get<std::string>();
  } else if (cmd == "replay") {
    out << (r.at("valid").get<bool>() ? "VALID" : "REJECTED") << ": " << r.at("detail").get<std::string>();
  } else if (cmd == "fixtures") {
    for (const auto& e : r)
      out << e.at("name").get<std::string>() << "  [" << e.at("kind").get<std::string>() << "]  "
          << e.at("description").get<std::string>() << "\n";
    std::string s = out.str();
    if (!s.empty()) s.pop_back();
    return s;
  } else {
    return r.dump(2);
  }
  return out.str();
}

int run(const std::string& cmd, const Options& o) {
  json config = {{"command", cmd}, {"format", o.format}, {"jobs", o.jobs}};
  json result;
  int code = 0;
  std::string dot;

  if (cmd == "fixtures") {
    char* s = nullptr;
    check(rfrp_fixtures(&s));
    result = take_json(s);
  } else if (cmd == "filtrate") {
    auto g = load_group(o.group);
    config.update({{"group", o.group}, {"p", o.p}, {"depth", o.depth}});
    config.update(bounds_config(o));
    rfrp_filtration* f = nullptr;
    auto b = bounds(o);
    check(rfrp_filtration_new(g.get(), o.p, o.depth, &b, &f));
    std::unique_ptr<rfrp_filtration, decltype(&rfrp_filtration_free)> fp(f, rfrp_filtration_free);
    char* s = nullptr;
    check(rfrp_filtration_report(f, &s));
    result = take_json(s);
  } else if (cmd == "separate") {
    auto g = load_group(o.group);
    config.update({{"group", o.group}, {"word", o.word}, {"p", o.p}, {"depth", o.depth}, {"method", o.method}});
    config.update(bounds_config(o));
    rfrp_method m = o.method == "table" ? RFRP_METHOD_COSET_TABLE : o.method == "tower" ? RFRP_METHOD_TOWER : RFRP_METHOD_AUTO;
    auto b = bounds(o);
    char* s = nullptr;
    check(rfrp_separate(g.get(), o.word.c_str(), o.p, o.depth, m, &b, &s));
    result = take_json(s);
  } else if (cmd == "replay") {
    json j = json::parse(json_text(o.certificate));
    if (j.contains("result") && j.contains("tool")) j = j["result"];
    config["certificate"] = o.certificate;
    std::string text = j.dump();
    int valid = 0;
    char* s = nullptr;
    check(rfrp_replay(text.c_str(), &valid, &s));
    result = take_json(s);
    if (!valid) code = RFRP_ERR_MISMATCH;
  } else if (cmd == "battery") {
    auto g = load_group(o.group);
    json hints = o.hints.empty() ? json::object() : json::parse(json_text(o.hints));
    if (o.circle_bundle.size() == 2) hints["circle_bundle"] = {{"genus", o.circle_bundle[0]}, {"euler", o.circle_bundle[1]}};
    if (o.nilpotent) hints["nilpotent"] = true;
    if (!o.torsion.empty()) {
      auto comma = o.torsion.find(',');
      if (comma == std::string::npos) throw Failure{2, "--torsion expects ELEMENT,ORDER"};
      hints["torsion"] = {{"element", o.torsion.substr(0, comma)}, {"order", std::stol(o.torsion.substr(comma + 1))}};
    }
    config.update({{"group", o.group}, {"hints", hints}});
    std::string text = hints.dump();
    char* s = nullptr;
    check(rfrp_battery(g.get(), text.c_str(), &s));
    result = take_json(s);
  } else if (cmd == "verdict") {
    config["geometry"] = o.label;
    char* s = nullptr;
    check(rfrp_verdict(o.label.c_str(), &s));
    result = take_json(s);
  } else if (cmd == "jump") {
    auto g = load_group(o.group);
    config.update({{"group", o.group}});
    if (!o.character.empty()) {
      std::string text = json_text(o.character);
      config["character"] = json::parse(text);
      std::size_t dim = 0;
      check(rfrp_dim_h1(g.get(), text.c_str(), &dim));
      result = {{"character", json::parse(text)}, {"dim_h1", dim}};
    } else {
      config.update({{"orders", o.orders}, {"budget", o.budget}, {"seed", o.seed}});
      char* s = nullptr;
      check(rfrp_jump_scan(g.get(), o.orders.data(), o.orders.size(), o.budget, o.seed, o.jobs, &s));
      result = take_json(s);
    }
  } else if (cmd == "cover-b1") {
    auto g = load_group(o.group);
    std::string q = o.quotient;
    // Names such as z3 or tf2 are tried before files.
    bool named = q.find_first_of("{[./") == std::string::npos && !std::filesystem::exists(q);
    if (!named) q = json::parse(json_text(q)).dump();
    config.update({{"group", o.group}, {"quotient", o.quotient}, {"check", o.check}});
    char* s = nullptr;
    rfrp_status st = rfrp_cover_b1(g.get(), q.c_str(), o.check ? 1 : 0, o.jobs, &s);
    if (st == RFRP_ERR_MISMATCH && s) {
      std::cerr << "rfrp: " << rfrp_last_error() << "\n";
      code = RFRP_ERR_MISMATCH;
    } else {
      check(st);
    }
    result = take_json(s);
  } else if (cmd == "closure") {
    config.update({{"action", o.action}, {"p", o.p}, {"depth", o.depth}});
    char* s = nullptr;
    if (o.action == "induced") {
      auto g = load_group(o.group);
      config.update({{"group", o.group}, {"subgroup", o.subgroup}});
      std::string text = json_text(o.subgroup);
      check(rfrp_induced_topology(g.get(), text.c_str(), o.p, o.depth, &s));
    } else if (o.action == "edge") {
      config.update({{"rank", o.rank}, {"x", o.x_index}, {"word", o.word}});
      check(rfrp_edge_closure(o.rank, o.x_index, o.word.c_str(), o.p, o.depth, &s));
    } else {
      throw Failure{2, "closure action must be induced or edge"};
    }
    result = take_json(s);
  } else if (cmd == "arr" || cmd == "mfd") {
    config.update({{"action", o.action}, {"input", o.input}});
    char* s = nullptr;
    if (cmd == "arr" && o.action == "curve") {
      config["degree"] = o.degree;
      check(rfrp_smooth_curve(o.degree, &s));
      result = take_json(s);
    } else if (cmd == "arr" && o.action == "incidence") {
      check(rfrp_arrangement_incidence(json_text(o.input).c_str(), &s));
      result = take_json(s);
    } else {
      auto x = load_graph(o.input);
      std::string what = o.action;
      if (what == "build") what = "graph";
      if (what == "check") what = "validate";
      if (what == "dot" || o.format == "dot") {
        check(rfrp_classx_report(x.get(), "dot", &s));
        dot = take(s);
      } else if (what == "cover") {
        config["p"] = o.p;
        check(rfrp_classx_girth_cover(x.get(), o.p, &s));
        result = take_json(s);
      } else {
        check(rfrp_classx_report(x.get(), what.c_str(), &s));
        result = take_json(s);
      }
    }
  }

  if (!dot.empty()) {
    std::cout << dot;
    return code;
  }
  if (o.format == "dot") throw Failure{2, "--format dot is only available for arr and mfd graphs"};
  if (o.format == "text") {
    std::cout << text_summary(cmd, result) << "\n";
    return code;
  }
  json envelope = {{"tool", "rfrp"}, {"version", rfrp_version()}, {"config", config}, {"result", result}};
  std::cout << envelope.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residually finite rational p filtrations, certificates and graph manifolds"};
  Options o;
  app.set_version_flag("--version", std::string(rfrp_version()));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--list-fixtures", o.list_fixtures, "List the built-in fixtures");
  app.require_subcommand(0, 1);
  app.fallthrough();

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group,-g", o.group, "Fixture name or presentation JSON file")->required();
  };
  auto add_prime = [&](CLI::App* c, int depth) {
    o.depth = depth;
    c->add_option("-p", o.p, "Prime")->capture_default_str();
    c->add_option("--depth,-d", o.depth, "Depth")->capture_default_str()->check(CLI::Range(1, 64));
  };
  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--index-bound", o.index_bound, "Largest coset table")->capture_default_str()->check(CLI::PositiveNumber);
    c->add_option("--generator-bound", o.generator_bound, "Largest subgroup presentation")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* filtrate = app.add_subcommand("filtrate", "Standard filtration K_1 > ... > K_depth");
  add_group(filtrate);
  add_prime(filtrate, 3);
  add_bounds(filtrate);

  auto* separate = app.add_subcommand("separate", "Separate a word from the identity in G/K_{d+1}");
  add_group(separate);
  separate->add_option("--word,-w", o.word, "Word, e.g. xyXY")->required();
  add_prime(separate, 3);
  add_bounds(separate);
  separate->add_option("--method", o.method, "auto, table or tower")->check(CLI::IsMember({"auto", "table", "tower"}));

  auto* replay = app.add_subcommand("replay", "Check a separation certificate");
  replay->add_option("certificate", o.certificate, "Certificate or report JSON file")->required();

  auto* battery = app.add_subcommand("battery", "Obstruction battery");
  add_group(battery);
  battery->add_option("--hints", o.hints, "Hints JSON (file or inline)");
  battery->add_option("--circle-bundle", o.circle_bundle, "GENUS EULER")->expected(2);
  battery->add_flag("--nilpotent", o.nilpotent, "Declare the group nilpotent");
  battery->add_option("--torsion", o.torsion, "ELEMENT,ORDER");

  auto* verdict = app.add_subcommand("verdict", "Verdict for a geometric 3-manifold group");
  verdict->add_option("geometry", o.label, "S3, S2xR, R3, Nil, Sol, H2xR, PSLtilde or H3")->required();

  auto* jump = app.add_subcommand("jump", "Torsion points of the characteristic varieties");
  add_group(jump);
  jump->add_option("--orders", o.orders, "Character orders")->delimiter(',')->check(CLI::Range(2, 1000000));
  jump->add_option("--budget", o.budget, "Characters per order before sampling")->capture_default_str()->check(CLI::PositiveNumber);
  jump->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  jump->add_option("--character", o.character, "Single character JSON {\"order\":m,\"exponents\":[...]}");

  auto* cover = app.add_subcommand("cover-b1", "b1 of a finite abelian cover");
  add_group(cover);
  cover->add_option("--quotient,-q", o.quotient, "z<N>, tf<N>, or a quotient JSON")->required();
  cover->add_flag("--check", o.check, "Also compute the cover directly; exit 4 on disagreement");

  auto* closure = app.add_subcommand("closure", "Induced topology and edge closure checks");
  closure->add_option("action", o.action, "induced or edge")->required()->check(CLI::IsMember({"induced", "edge"}));
  closure->add_option("--group,-g", o.group, "Ambient group (induced)");
  closure->add_option("--subgroup", o.subgroup, "Subgroup JSON {\"group\":...,\"images\":[...]}");
  closure->add_option("--rank", o.rank, "Free rank of Z x F_n (edge)")->capture_default_str()->check(CLI::Range(1, 16));
  closure->add_option("--x", o.x_index, "Generator index of x in Z x F_n (edge)")->capture_default_str();
  closure->add_option("--word,-w", o.word, "Word w (edge)");
  add_prime(closure, 3);

  auto* arr = app.add_subcommand("arr", "Affine curve arrangements");
  arr->add_option("action", o.action, "build, h1, check, dot, incidence or curve")
      ->required()
      ->check(CLI::IsMember({"build", "h1", "check", "dot", "incidence", "curve", "pi1", "inclusions"}));
  arr->add_option("input", o.input, "Fixture name (pencil3, generic4, ...) or arrangement JSON");
  arr->add_option("--degree", o.degree, "Degree for arr curve")->check(CLI::Range(1, 12));

  auto* mfd = app.add_subcommand("mfd", "Class X graph manifolds");
  mfd->add_option("action", o.action, "check, h1, pi1, inclusions, girth, cover or dot")
      ->required()
      ->check(CLI::IsMember({"build", "check", "h1", "pi1", "inclusions", "girth", "cover", "dot"}));
  mfd->add_option("input", o.input, "Graph JSON, arrangement JSON or arrangement fixture")->required();
  mfd->add_option("-p", o.p, "Prime for the girth-fixing cover")->capture_default_str();

  app.add_subcommand("fixtures", "List the built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string cmd;
  if (!app.get_subcommands().empty()) cmd = app.get_subcommands().front()->get_name();
  if (o.list_fixtures) cmd = "fixtures";
  if (cmd.empty()) {
    std::cout << app.help();
    return 2;
  }
  if (cmd == "arr" && o.action != "curve" && o.input.empty()) {
    std::cerr << "rfrp: arr " << o.action << " needs an input\n";
    return 2;
  }
  if (cmd == "closure" && o.action == "induced" && (o.group.empty() || o.subgroup.empty())) {
    std::cerr << "rfrp: closure induced needs --group and --subgroup\n";
    return 2;
  }
  if (cmd == "closure" && o.action == "edge" && o.word.empty()) {
    std::cerr << "rfrp: closure edge needs --word\n";
    return 2;
  }

  try {
    return run(cmd, o);
  } catch (const Failure& f) {
    std::cerr << "rfrp: " << f.message << "\n";
    return f.code == RFRP_ERR_INTERNAL ? 1 : f.code;
  } catch (const json::exception& e) {
    std::cerr << "rfrp: json: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rfrp: " << e.what() << "\n";
    return 1;
  }
}
