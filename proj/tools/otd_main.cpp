// Command-line front end. Talks to the library exclusively through the C
// interface in otd/otd.h: it reads files, composes JSON requests, prints the
// JSON/DOT replies, and maps status codes to exit codes (1 invalid input,
// 2 validation failure, 3 cap exceeded, higher codes passed through). Error
// records go to stderr as JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "otd/otd.h"

namespace {

using Json = nlohmann::json;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

std::string error_json(int code, const std::string& message) {
  static const char* names[] = {"ok",        "invalid-input",      "validation",
                                "cap-exceeded",  "oracle-violation", "exhausted",
                                "not-nesting",   "empty-intersection", "corner-contained",
                                "internal"};
  Json j;
  j["code"] = code;
  j["error"] = (code >= 0 && code <= 9) ? names[code] : "unknown";
  j["message"] = message;
  return j.dump();
}

// "-" reads all of stdin; anything else is a file path.
std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(1, "cannot open file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Json parse_file(const std::string& path) {
  Json j = Json::parse(slurp(path), nullptr, false);
  if (j.is_discarded()) die(1, "invalid JSON in " + path);
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

// Wraps a C API string output so every exit path frees it.
struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { otd_string_free(ptr); }
  std::string take() const { return ptr ? std::string(ptr) : std::string(); }
};

// Raises the C API's error record as a CliError carrying its status code.
void check_rc(int rc) {
  if (rc == OTD_OK) return;
  std::string record = otd_last_error();
  Json j = Json::parse(record, nullptr, false);
  std::string message = (!j.is_discarded() && j.contains("message"))
                            ? j["message"].get<std::string>()
                            : record;
  throw CliError{rc, message};
}

std::string call_pipeline(int (*fn)(const char*, char**), const Json& request) {
  OwnedString out;
  check_rc(fn(request.dump().c_str(), &out.ptr));
  return out.take();
}

void print_out(const std::string& text) { std::fwrite(text.data(), 1, text.size(), stdout); }

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      die(1, "bad integer in " + what + ": " + item);
    }
  }
  return out;
}

struct GraphHandle {
  otd_graph* ptr = nullptr;
  ~GraphHandle() { otd_graph_free(ptr); }
};

struct DecompHandle {
  otd_decomp* ptr = nullptr;
  ~DecompHandle() { otd_decomp_free(ptr); }
};

void parse_graph(const std::string& path, GraphHandle& g) {
  check_rc(otd_graph_parse(slurp(path).c_str(), &g.ptr));
}

void parse_decomp_json(const Json& j, DecompHandle& d) {
  check_rc(otd_decomp_parse(j.dump().c_str(), &d.ptr));
}

// Runs one request per seed, optionally across threads, and prints replies in
// seed order so the output is independent of the thread count.
std::string run_seed_batch(int (*fn)(const char*, char**), Json request, int first_seed,
                           int count, int jobs) {
  struct Slot {
    int rc = 0;
    std::string text;
  };
  std::vector<Slot> slots(count);
  if (jobs < 1) jobs = 1;
  auto worker = [&](int offset) {
    for (int i = offset; i < count; i += jobs) {
      Json req = request;
      req["seed"] = first_seed + i;
      OwnedString out;
      slots[i].rc = fn(req.dump().c_str(), &out.ptr);
      slots[i].text = slots[i].rc == OTD_OK ? out.take() : std::string(otd_last_error());
    }
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker, t);
  worker(0);
  for (auto& t : threads) t.join();

  Json results = Json::array();
  for (int i = 0; i < count; ++i) {
    if (slots[i].rc != OTD_OK) {
      Json err = Json::parse(slots[i].text, nullptr, false);
      std::string message = (!err.is_discarded() && err.contains("message"))
                                ? err["message"].get<std::string>()
                                : slots[i].text;
      throw CliError{slots[i].rc, "seed " + std::to_string(first_seed + i) + ": " + message};
    }
    Json reply = Json::parse(slots[i].text);
    reply["seed"] = first_seed + i;
    results.push_back(std::move(reply));
  }
  Json j;
  j["results"] = std::move(results);
  return dump_canonical(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition pairs, liftings, width compression, and geometric clique hunting"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Threads for independent seeded instances")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a named graph family");
  std::string gen_family, gen_input, gen_format = "json";
  int gen_n = 0, gen_q = 0, gen_r = 0, gen_h = 0, gen_d = 0;
  gen->add_option("family", gen_family,
                  "grid | knn | tripartite | subdiv-knn | shift | line-grid | 2tree | "
                  "dominant | line-graph")
      ->required();
  auto* gen_n_opt = gen->add_option("--n", gen_n, "Size parameter");
  auto* gen_q_opt = gen->add_option("--q", gen_q, "Grid parameter q");
  auto* gen_r_opt = gen->add_option("--r", gen_r, "Subdivision parameter r");
  auto* gen_h_opt = gen->add_option("--height", gen_h, "Height");
  auto* gen_d_opt = gen->add_option("--d", gen_d, "Branching");
  gen->add_option("--input", gen_input, "Input graph file (dominant, line-graph); - for stdin");
  gen->add_option("--format", gen_format, "json | dot")->check(CLI::IsMember({"json", "dot"}));

  // check
  auto* check = app.add_subcommand("check", "Validate a decomposition against a graph");
  std::string check_decomp, check_graph, check_format = "json";
  check->add_option("decomposition", check_decomp, "Decomposition file; - for stdin")->required();
  check->add_option("--graph", check_graph, "Graph file")->required();
  check->add_option("--format", check_format, "json | dot")->check(CLI::IsMember({"json", "dot"}));

  // ortho
  auto* ortho = app.add_subcommand("ortho", "Largest bag intersection across two decompositions");
  std::vector<std::string> ortho_inputs;
  ortho->add_option("inputs", ortho_inputs,
                    "Two decomposition files, or one pair file with \"first\"/\"second\"")
      ->expected(1, 2)
      ->required();

  // construct
  auto* construct = app.add_subcommand("construct", "Build a decomposition pair or domino");
  std::string con_kind, con_graph, con_a, con_b, con_tree, con_layering;
  int con_n = 0;
  construct->add_option("kind", con_kind, "grid-pair | knn-pair | star-pair | subdiv-pair | domino")
      ->required();
  auto* con_n_opt = construct->add_option("--n", con_n, "Size parameter");
  construct->add_option("--graph", con_graph, "Graph file (star-pair, domino)");
  construct->add_option("--a", con_a, "Comma-separated first part (star-pair)");
  construct->add_option("--b", con_b, "Comma-separated second part (star-pair)");
  construct->add_option("--tree", con_tree, "Tree decomposition file (domino)");
  construct->add_option("--layering", con_layering, "Layering file (domino)");

  // compress
  auto* compress = app.add_subcommand("compress", "Compress an orthogonal pair into one tree");
  std::string cmp_graph, cmp_tree, cmp_weak;
  int cmp_k = 0;
  compress->add_option("--graph", cmp_graph)->required();
  compress->add_option("--tree", cmp_tree)->required();
  compress->add_option("--weakpath", cmp_weak)->required();
  compress->add_option("--k", cmp_k, "Orthogonality parameter")->required();

  // separator
  auto* separator = app.add_subcommand("separator", "Balanced separator from a tree decomposition");
  std::string sep_graph, sep_tree;
  separator->add_option("--graph", sep_graph)->required();
  separator->add_option("--tree", sep_tree)->required();

  // lift
  auto* lift = app.add_subcommand("lift", "Lift a planarization decomposition pair");
  std::string lift_mode, lift_input, lift_base = "heuristic";
  int lift_seed = 0, lift_root = 0, lift_cap = 14;
  lift->add_option("mode", lift_mode, "string | drawing")->required();
  lift->add_option("--input", lift_input, "Arrangement or drawing file; - for stdin")->required();
  lift->add_option("--base", lift_base, "heuristic | exact")
      ->check(CLI::IsMember({"heuristic", "exact"}));
  lift->add_option("--seed", lift_seed, "Heuristic tie-break seed");
  lift->add_option("--root", lift_root, "Layering root vertex");
  lift->add_option("--exact-cap", lift_cap, "Vertex cap for the exact solver");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  long long b_k = 0, b_s = 0, b_n = 0, b_g = 0, b_m = 0, b_tw = 0;
  auto* b_k_opt = bounds->add_option("--k", b_k);
  auto* b_s_opt = bounds->add_option("--s", b_s);
  auto* b_n_opt = bounds->add_option("--n", b_n);
  auto* b_g_opt = bounds->add_option("--g", b_g);
  auto* b_m_opt = bounds->add_option("--m", b_m);
  auto* b_tw_opt = bounds->add_option("--tw", b_tw);

  // rect
  auto* rect = app.add_subcommand("rect", "Rectangle geometry and clique hunting");
  std::string rect_op, rect_input, rect_oracle = "random", rect_root, rect_first, rect_second,
              rect_graph, rect_pair;
  int rect_k = 0, rect_seed = 0, rect_seeds = 0;
  rect->add_option("op", rect_op, "classify | hvo | clique | to-paths | from-paths")->required();
  rect->add_option("--input", rect_input, "Rectangle family file; - for stdin");
  rect->add_option("--k", rect_k, "Clique size");
  rect->add_option("--oracle", rect_oracle,
                   "random | stall-h | stall-v | corner-flood | file:<path>");
  rect->add_option("--seed", rect_seed, "Oracle seed");
  rect->add_option("--seeds", rect_seeds, "Run this many consecutive seeds");
  rect->add_option("--root", rect_root, "Root pair file {\"rects\": [r0, r1]}");
  rect->add_option("--first", rect_first, "First decomposition file (from-paths)");
  rect->add_option("--second", rect_second, "Second decomposition file (from-paths)");
  rect->add_option("--graph", rect_graph, "Graph file (from-paths)");
  rect->add_option("--pair", rect_pair, "Pair file with first/graph/second (from-paths)");

  // box
  auto* box = app.add_subcommand("box", "Box clique hunting");
  std::string box_op, box_oracle = "random", box_root;
  int box_d = 1, box_k = 0, box_seed = 0, box_seeds = 0;
  box->add_option("op", box_op, "clique")->required();
  box->add_option("--d", box_d, "Dimension")->required();
  box->add_option("--k", box_k, "Clique size")->required();
  box->add_option("--oracle", box_oracle, "random | file:<path>");
  box->add_option("--seed", box_seed, "Oracle seed");
  box->add_option("--seeds", box_seeds, "Run this many consecutive seeds");
  box->add_option("--root", box_root, "Root file {\"boxes\": [...]}");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact brute-force computations");
  std::string orc_op, orc_input;
  int orc_cap = 0;
  oracle->add_option("op", orc_op, "tw | pw | clique | chi | sep")->required();
  oracle->add_option("--input", orc_input, "Graph file; - for stdin")->required();
  auto* orc_cap_opt = oracle->add_option("--cap", orc_cap, "Instance size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::fprintf(stderr, "%s\n", error_json(1, e.what()).c_str());
    return 1;
  }

  try {
    if (gen->parsed()) {
      Json req;
      req["family"] = gen_family;
      if (gen_n_opt->count()) req["n"] = gen_n;
      if (gen_q_opt->count()) req["q"] = gen_q;
      if (gen_r_opt->count()) req["r"] = gen_r;
      if (gen_h_opt->count()) req["h"] = gen_h;
      if (gen_d_opt->count()) req["d"] = gen_d;
      if (!gen_input.empty()) req["graph"] = parse_file(gen_input);
      GraphHandle g;
      check_rc(otd_graph_gen(req.dump().c_str(), &g.ptr));
      OwnedString out;
      check_rc(gen_format == "dot" ? otd_graph_dot(g.ptr, &out.ptr)
                                   : otd_graph_emit(g.ptr, &out.ptr));
      print_out(out.take());
    } else if (check->parsed()) {
      GraphHandle g;
      parse_graph(check_graph, g);
      DecompHandle d;
      check_rc(otd_decomp_parse(slurp(check_decomp).c_str(), &d.ptr));
      OwnedString report;
      int rc = otd_decomp_validate(d.ptr, g.ptr, &report.ptr);
      if (rc == OTD_E_VALIDATION) {
        print_out(report.take());
        std::fprintf(stderr, "%s\n", otd_last_error());
        return 2;
      }
      check_rc(rc);
      if (check_format == "dot") {
        OwnedString dot;
        check_rc(otd_decomp_dot(d.ptr, &dot.ptr));
        print_out(dot.take());
      } else {
        print_out(report.take());
      }
    } else if (ortho->parsed()) {
      Json first, second;
      if (ortho_inputs.size() == 1) {
        Json pair = parse_file(ortho_inputs[0]);
        if (!pair.contains("first") || !pair.contains("second"))
          die(1, "pair file needs \"first\" and \"second\" fields");
        first = pair["first"];
        second = pair["second"];
      } else {
        first = parse_file(ortho_inputs[0]);
        second = parse_file(ortho_inputs[1]);
      }
      DecompHandle d1, d2;
      parse_decomp_json(first, d1);
      parse_decomp_json(second, d2);
      int value = 0;
      check_rc(otd_orthogonality(d1.ptr, d2.ptr, &value));
      std::printf("%d\n", value);
    } else if (construct->parsed()) {
      Json req;
      req["kind"] = con_kind;
      if (con_n_opt->count()) req["n"] = con_n;
      if (!con_graph.empty()) req["graph"] = parse_file(con_graph);
      if (!con_a.empty()) req["a"] = parse_int_list(con_a, "--a");
      if (!con_b.empty()) req["b"] = parse_int_list(con_b, "--b");
      if (!con_tree.empty()) req["tree"] = parse_file(con_tree);
      if (!con_layering.empty()) req["layering"] = parse_file(con_layering);
      print_out(call_pipeline(otd_construct, req));
    } else if (compress->parsed()) {
      Json req;
      req["graph"] = parse_file(cmp_graph);
      req["tree"] = parse_file(cmp_tree);
      req["weakpath"] = parse_file(cmp_weak);
      req["k"] = cmp_k;
      print_out(call_pipeline(otd_compress_pair, req));
    } else if (separator->parsed()) {
      Json req;
      req["graph"] = parse_file(sep_graph);
      req["tree"] = parse_file(sep_tree);
      print_out(call_pipeline(otd_separator, req));
    } else if (lift->parsed()) {
      Json req;
      req["mode"] = lift_mode;
      req["input"] = parse_file(lift_input);
      req["base"] = lift_base;
      req["seed"] = lift_seed;
      req["root"] = lift_root;
      req["exact_cap"] = lift_cap;
      print_out(call_pipeline(otd_lift, req));
    } else if (bounds->parsed()) {
      Json req;
      if (b_k_opt->count()) req["k"] = b_k;
      if (b_s_opt->count()) req["s"] = b_s;
      if (b_n_opt->count()) req["n"] = b_n;
      if (b_g_opt->count()) req["g"] = b_g;
      if (b_m_opt->count()) req["m"] = b_m;
      if (b_tw_opt->count()) req["tw"] = b_tw;
      print_out(call_pipeline(otd_bounds, req));
    } else if (rect->parsed()) {
      Json req;
      req["op"] = rect_op;
      if (rect_op == "classify" || rect_op == "hvo" || rect_op == "to-paths") {
        if (rect_input.empty()) die(1, "rect " + rect_op + " needs --input");
        Json in = parse_file(rect_input);
        if (!in.contains("rects")) die(1, "rectangle file needs a \"rects\" field");
        req["rects"] = in["rects"];
        print_out(call_pipeline(otd_rect, req));
      } else if (rect_op == "from-paths") {
        if (!rect_pair.empty()) {
          Json pair = parse_file(rect_pair);
          for (const char* key : {"first", "second", "graph"}) {
            if (!pair.contains(key)) die(1, std::string("pair file needs \"") + key + "\"");
            req[key] = pair[key];
          }
        } else {
          if (rect_first.empty() || rect_second.empty() || rect_graph.empty())
            die(1, "rect from-paths needs --first, --second and --graph (or --pair)");
          req["first"] = parse_file(rect_first);
          req["second"] = parse_file(rect_second);
          req["graph"] = parse_file(rect_graph);
        }
        print_out(call_pipeline(otd_rect, req));
      } else if (rect_op == "clique") {
        req["k"] = rect_k;
        if (rect_oracle.rfind("file:", 0) == 0) {
          Json script = parse_file(rect_oracle.substr(5));
          if (!script.contains("levels")) die(1, "oracle file needs a \"levels\" field");
          req["oracle"] = "script";
          req["levels"] = script["levels"];
        } else {
          req["oracle"] = rect_oracle;
        }
        if (!rect_root.empty()) {
          Json root = parse_file(rect_root);
          if (!root.contains("rects")) die(1, "root file needs a \"rects\" field");
          req["root"] = root["rects"];
        }
        if (rect_seeds > 0) {
          print_out(run_seed_batch(otd_rect, req, rect_seed, rect_seeds, jobs));
        } else {
          req["seed"] = rect_seed;
          print_out(call_pipeline(otd_rect, req));
        }
      } else {
        die(1, "unknown rect op: " + rect_op);
      }
    } else if (box->parsed()) {
      Json req;
      req["op"] = box_op;
      req["d"] = box_d;
      req["k"] = box_k;
      if (box_oracle.rfind("file:", 0) == 0) {
        Json script = parse_file(box_oracle.substr(5));
        if (!script.contains("boxes")) die(1, "oracle file needs a \"boxes\" field");
        req["oracle"] = "script";
        req["boxes"] = script["boxes"];
      } else {
        req["oracle"] = box_oracle;
      }
      if (!box_root.empty()) {
        Json root = parse_file(box_root);
        if (!root.contains("boxes")) die(1, "root file needs a \"boxes\" field");
        req["root"] = root["boxes"];
      }
      if (box_seeds > 0) {
        print_out(run_seed_batch(otd_box, req, box_seed, box_seeds, jobs));
      } else {
        req["seed"] = box_seed;
        print_out(call_pipeline(otd_box, req));
      }
    } else if (oracle->parsed()) {
      Json req;
      req["op"] = orc_op;
      req["graph"] = parse_file(orc_input);
      if (orc_cap_opt->count()) req["cap"] = orc_cap;
      print_out(call_pipeline(otd_oracle, req));
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "%s\n", error_json(e.code, e.message).c_str());
    return e.code;
  }
  return 0;
}
