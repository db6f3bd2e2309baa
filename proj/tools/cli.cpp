// Copyright 2026 The dconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "dconv/classes.hpp"
#include "dconv/error.hpp"
#include "dconv/io.hpp"
#include "dconv/lab.hpp"
#include "dconv/lattice.hpp"
#include "dconv/network.hpp"
#include "dconv/ops.hpp"

namespace dconv::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Document load(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <typename T>
T load_as(const std::string& path, DocumentKind kind) {
  Document doc = load(path);
  if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
  throw InputError(path + ": expected a " + std::string(document_kind_name(kind)) + " document, got " +
                   std::string(document_kind_name(kind_of(doc))));
}

Instance load_instance(const std::string& path) {
  Document doc = load(path);
  if (auto* s = std::get_if<LatticeSet>(&doc)) return std::move(*s);
  if (auto* f = std::get_if<LatticeFn>(&doc)) return std::move(*f);
  throw InputError(path + ": expected a set or fn document, got " +
                   std::string(document_kind_name(kind_of(doc))));
}

std::optional<Window> load_window(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_as<Window>(path, DocumentKind::Window);
}

Instance restrict(Instance in, const std::optional<Window>& w) {
  if (!w) return in;
  return std::visit([&](const auto& x) -> Instance { return restrict_to_window(x, *w); }, in);
}

bool is_set(const Instance& in) { return std::holds_alternative<LatticeSet>(in); }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot write " + out_path);
  f << text;
  if (!f) throw InputError("cannot write " + out_path);
}

std::string print_instance(const Instance& in) {
  return std::visit([](const auto& x) { return print_document(Document(x)); }, in);
}

struct CheckArgs {
  std::string input;
  std::string label;
  std::string window;
};

int cmd_check(const CheckArgs& a, const std::string& out_path, std::ostream& out) {
  std::optional<ClassLabel> label = parse_label(a.label);
  if (!label) throw InputError("unknown class label '" + a.label + "'");
  Instance in = restrict(load_instance(a.input), load_window(a.window));
  if (is_set_label(*label) != is_set(in)) {
    throw InputError("class " + a.label + " expects a " + (is_set_label(*label) ? "set" : "fn") +
                     " document, got a " + (is_set(in) ? "set" : "fn"));
  }
  Verdict v = is_set(in) ? check_set(std::get<LatticeSet>(in), *label) : check_fn(std::get<LatticeFn>(in), *label);
  emit(print_document(VerdictDocument{*label, v}), out_path, out);
  return v.member ? kExitOk : kExitNegative;
}

struct OpArgs {
  std::string name;
  std::vector<std::string> inputs;
  std::string spec;
  std::string window;
};

void require_arity(const OpArgs& a, std::size_t n) {
  if (a.inputs.size() != n) {
    throw InputError("op " + a.name + " takes " + std::to_string(n) + " input document(s), got " +
                     std::to_string(a.inputs.size()));
  }
}

void require_same_kind(const Instance& x, const Instance& y, const std::string& op) {
  if (is_set(x) != is_set(y)) throw InputError("op " + op + " needs two sets or two functions");
}

int cmd_op(const OpArgs& a, const std::string& out_path, std::ostream& out) {
  std::optional<Window> w = load_window(a.window);
  Instance result;
  if (a.name == "split") {
    require_arity(a, 1);
    if (a.spec.empty()) throw InputError("op split needs --spec (a split-spec document)");
    if (!w) throw InputError("op split needs --window (the output box)");
    SplitSpec spec = load_as<SplitSpec>(a.spec, DocumentKind::SplitSpec);
    Instance in = load_instance(a.inputs[0]);
    if (is_set(in)) {
      result = split_set(std::get<LatticeSet>(in), spec, *w);
    } else {
      result = split_fn(std::get<LatticeFn>(in), spec, *w);
    }
  } else if (a.name == "aggregate") {
    require_arity(a, 1);
    if (a.spec.empty()) throw InputError("op aggregate needs --spec (a partition-spec document)");
    PartitionSpec spec = load_as<PartitionSpec>(a.spec, DocumentKind::PartitionSpec);
    Instance in = restrict(load_instance(a.inputs[0]), w);
    if (is_set(in)) {
      result = aggregate_set(std::get<LatticeSet>(in), spec);
    } else {
      result = aggregate_fn(std::get<LatticeFn>(in), spec);
    }
  } else if (a.name == "direct-sum" || a.name == "minkowski" || a.name == "convolve") {
    require_arity(a, 2);
    Instance x = restrict(load_instance(a.inputs[0]), w);
    Instance y = restrict(load_instance(a.inputs[1]), w);
    require_same_kind(x, y, a.name);
    if (a.name == "direct-sum") {
      if (is_set(x)) {
        result = direct_sum_set(std::get<LatticeSet>(x), std::get<LatticeSet>(y));
      } else {
        result = direct_sum_fn(std::get<LatticeFn>(x), std::get<LatticeFn>(y));
      }
    } else if (a.name == "minkowski") {
      if (!is_set(x)) throw InputError("op minkowski takes set documents; use convolve for functions");
      result = minkowski_sum_set(std::get<LatticeSet>(x), std::get<LatticeSet>(y));
    } else {
      if (is_set(x)) throw InputError("op convolve takes fn documents; use minkowski for sets");
      result = convolution_fn(std::get<LatticeFn>(x), std::get<LatticeFn>(y));
    }
  } else {
    throw InputError("unknown op '" + a.name + "'");
  }
  emit(print_instance(result), out_path, out);
  return kExitOk;
}

struct InduceArgs {
  std::string network;
  std::string input;
  std::string window;
};

int cmd_induce(const InduceArgs& a, const std::string& out_path, std::ostream& out) {
  Network net = load_as<Network>(a.network, DocumentKind::Network);
  Instance in = restrict(load_instance(a.input), load_window(a.window));
  Instance result;
  if (is_set(in)) {
    result = transform_set(std::get<LatticeSet>(in), net);
  } else {
    result = induce_fn(std::get<LatticeFn>(in), net);
  }
  emit(print_instance(result), out_path, out);
  return kExitOk;
}

struct MatrixArgs {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_dim = 4;
  bool json = false;
};

int cmd_matrix(const MatrixArgs& a, const std::string& out_path, std::ostream& out) {
  if (a.max_dim < 2) throw InputError("--max-dim must be at least 2");
  ClosureReport report = closure_matrix(a.trials, a.seed, a.max_dim);
  std::string doc = report_document(report);
  if (a.json) {
    emit(doc, out_path, out);
  } else {
    out << report.render();
    if (!out_path.empty()) emit(doc, out_path, out);
  }
  return report.ok() ? kExitOk : kExitNegative;
}

struct ExamplesArgs {
  std::string run = "all";
  bool json = false;
};

std::string render_records(const std::vector<RecordReport>& reports) {
  std::ostringstream os;
  for (const RecordReport& r : reports) {
    os << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << '\n';
    for (const RecordCheck& c : r.checks) {
      if (!c.ok) os << "  failed: " << c.what << '\n';
    }
  }
  return os.str();
}

int cmd_examples(const ExamplesArgs& a, const std::string& out_path, std::ostream& out) {
  std::vector<RecordReport> reports;
  if (a.run == "all") {
    reports = run_counterexamples();
  } else {
    const CounterexampleRecord* rec = find_record(a.run);
    if (!rec) throw InputError("unknown record '" + a.run + "'");
    reports.push_back(replay_record(*rec));
  }
  std::string doc = report_document(reports);
  if (a.json) {
    emit(doc, out_path, out);
  } else {
    out << render_records(reports);
    if (!out_path.empty()) emit(doc, out_path, out);
  }
  bool ok = true;
  for (const RecordReport& r : reports) ok = ok && r.passed;
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete convexity recognizers, operations and the closure harness", "dconv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dconv 0.1.0");
  std::string out_path;

  CheckArgs check;
  CLI::App* c = app.add_subcommand("check", "Decide membership of a set or function in a class");
  c->add_option("input", check.input, "set or fn document")->required();
  c->add_option("--class", check.label, "class label, e.g. lnat-set or jump-m-fn")->required();
  c->add_option("--window", check.window, "window document; lifted inputs are cut to it");
  c->add_option("--out", out_path, "write the verdict document here instead of stdout");

  OpArgs op;
  CLI::App* o = app.add_subcommand("op", "Apply an operation and print the result document");
  o->add_option("name", op.name, "direct-sum, split, aggregate, minkowski or convolve")
      ->required()
      ->check(CLI::IsMember({"direct-sum", "split", "aggregate", "minkowski", "convolve"}));
  o->add_option("inputs", op.inputs, "input documents")->required();
  o->add_option("--spec", op.spec, "split-spec or partition-spec document");
  o->add_option("--window", op.window, "output box for split; input window otherwise");
  o->add_option("--out", out_path, "write the result document here instead of stdout");

  InduceArgs induce;
  CLI::App* i = app.add_subcommand("induce", "Transform a set or function by a network");
  i->add_option("--network", induce.network, "network document")->required();
  i->add_option("--input", induce.input, "set or fn document on the entrance vertices")->required();
  i->add_option("--window", induce.window, "window document applied to the input");
  i->add_option("--out", out_path, "write the result document here instead of stdout");

  MatrixArgs matrix;
  CLI::App* m = app.add_subcommand("matrix", "Reproduce the closure tables by randomized trials");
  m->add_option("--trials", matrix.trials, "trials per Y cell")->capture_default_str();
  m->add_option("--seed", matrix.seed, "master seed")->required();
  m->add_option("--max-dim", matrix.max_dim, "largest instance dimension")->capture_default_str();
  m->add_flag("--json", matrix.json, "print the report document instead of the grid");
  m->add_option("--out", out_path, "write the report document here");

  ExamplesArgs examples;
  CLI::App* e = app.add_subcommand("examples", "Replay the counterexample registry");
  e->add_option("--run", examples.run, "record id or 'all'")->capture_default_str();
  e->add_flag("--json", examples.json, "print the report document instead of a summary");
  e->add_option("--out", out_path, "write the report document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s, out, err);
  } catch (const CLI::ParseError& pe) {
    app.exit(pe, out, err);
    return kExitInputError;
  }

  try {
    if (*c) return cmd_check(check, out_path, out);
    if (*o) return cmd_op(op, out_path, out);
    if (*i) return cmd_induce(induce, out_path, out);
    if (*m) return cmd_matrix(matrix, out_path, out);
    if (*e) return cmd_examples(examples, out_path, out);
  } catch (const Error& ex) {
    err << "dconv: " << ex.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& ex) {
    err << "dconv: " << ex.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace dconv::cli
