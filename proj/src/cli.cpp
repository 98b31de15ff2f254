#include "lkgraph/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lkgraph/classify.hpp"
#include "lkgraph/errors.hpp"
#include "lkgraph/linking.hpp"
#include "lkgraph/moves.hpp"
#include "lkgraph/perturb.hpp"
#include "lkgraph/sgd.hpp"
#include "lkgraph/smith.hpp"

namespace lkgraph::cli {
namespace {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

json to_json(const CycleBasis& basis) {
  json cycles = json::array();
  for (const auto& c : basis.cycles) {
    json coeffs = json::object();
    for (const auto& [edge, k] : c.coeffs) coeffs[edge] = k;
    cycles.push_back(std::move(coeffs));
  }
  return {{"tree_edges", basis.tree_edges}, {"cycles", cycles}};
}

std::string describe(const Cycle& c) {
  std::string out;
  for (const auto& [edge, k] : c.coeffs) {
    out += (out.empty() ? "" : " ") + std::string(k > 0 ? "+" : "-");
    if (k != 1 && k != -1) out += std::to_string(k > 0 ? k : -k) + "*";
    out += edge;
  }
  return out.empty() ? "0" : out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw Error("cannot write '" + path + "'");
}

struct Options {
  bool json = false;

  std::string path;
  std::string second_path;
  bool two_components = false;
  bool show_basis = false;
  bool show_matrix = false;
  bool ordered = false;
  bool handlebody = false;

  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::int64_t> divisors;
  std::string out_path;
  std::string moves_path;

  std::size_t steps = 20;
  std::uint64_t seed = kDefaultSeed;
  std::string replay_path;
};

class Commands {
 public:
  Commands(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int validate() {
    const Diagram d = parse_sgd_unchecked(read_text_file(opt_.path));
    const auto violations =
        lkgraph::validate(d, opt_.two_components ? ComponentRequirement::Two : ComponentRequirement::Any);
    if (opt_.json) {
      json list = json::array();
      for (const auto& v : violations) {
        list.push_back({{"kind", std::string(to_string(v.kind))}, {"entity", v.entity}, {"message", v.message}});
      }
      emit({{"valid", violations.empty()}, {"violations", list}});
    } else if (violations.empty()) {
      out_ << "OK\n";
    } else {
      for (const auto& v : violations) out_ << to_string(v.kind) << ": " << v.message << '\n';
    }
    return violations.empty() ? kOk : kDomainViolation;
  }

  int invariant() {
    const Diagram d = read_sgd_file(opt_.path);
    const LinkingMatrix lm = linking_matrix(d);
    const SnfCertificate snf = smith_normal_form(lm.entries);
    const LkInvariant inv(snf.divisors);
    const bool consistent = lm.entries == linking_matrix_under(d);

    if (opt_.json) {
      json doc = {{"ranks", {lm.rows(), lm.cols()}},
                  {"matrix", to_json(lm.entries)},
                  {"divisors", to_json(snf.divisors)},
                  {"invariant", inv.is_zero() ? "0" : "chain"},
                  {"over_under_consistent", consistent}};
      if (opt_.show_basis) doc["basis"] = json::array({to_json(lm.basis1), to_json(lm.basis2)});
      emit(doc);
      return kOk;
    }
    out_ << inv.to_string() << '\n';
    if (opt_.show_matrix) {
      out_ << "ranks: " << lm.rows() << ' ' << lm.cols() << '\n';
      out_ << "matrix:\n" << lm.entries.to_string();
      out_ << "over/under consistent: " << (consistent ? "yes" : "no") << '\n';
    }
    if (opt_.show_basis) {
      for (const auto* basis : {&lm.basis1, &lm.basis2}) {
        out_ << "component " << basis->component + 1 << " tree:";
        for (const auto& e : basis->tree_edges) out_ << ' ' << e;
        out_ << '\n';
        for (std::size_t k = 0; k < basis->cycles.size(); ++k) {
          out_ << "  cycle " << k + 1 << " (" << basis->defining_edges[k] << "): " << describe(basis->cycles[k])
               << '\n';
        }
      }
    }
    return kOk;
  }

  int classify() {
    const Diagram a = read_sgd_file(opt_.path);
    const Diagram b = read_sgd_file(opt_.second_path);
    Verdict v = lkgraph::classify(a, b, opt_.ordered);
    v.handlebody = opt_.handlebody;
    if (opt_.json) {
      emit({{"result", std::string(to_string(v.result))},
            {"pairing", std::string(to_string(v.pairing))},
            {"obstruction", v.obstruction.empty() ? json(nullptr) : json(v.obstruction)},
            {"invariants", {v.first.to_string(), v.second.to_string()}},
            {opt_.handlebody ? "genera" : "ranks", v.ranks},
            {"mode", opt_.handlebody ? "handlebody" : "spatial-graph"}});
    } else {
      out_ << v.summary() << '\n';
    }
    return v.result == VerdictResult::Equivalent ? kOk : kInequivalent;
  }

  int canonical() {
    const std::string text = serialize_sgd(canonical_diagram(opt_.m, opt_.n, opt_.divisors));
    if (!opt_.out_path.empty()) write_file(opt_.out_path, text);
    if (opt_.json) {
      emit({{"sgd", text}, {"path", opt_.out_path}});
    } else if (opt_.out_path.empty()) {
      out_ << text;
    }
    return kOk;
  }

  int perturb() {
    const Diagram d = read_sgd_file(opt_.path);
    require_two_components(d);
    const CheckedWalk walk = opt_.replay_path.empty()
                                 ? perturb_checked(d, opt_.steps, opt_.seed)
                                 : replay_checked(d, parse_move_list(read_text_file(opt_.replay_path)));
    if (walk.failed_step) {
      err_ << "internal error: Lk changed at step " << *walk.failed_step + 1 << " ("
           << format_move(walk.moves.at(*walk.failed_step)) << "): " << walk.before.to_string() << " -> "
           << lk_invariant(walk.diagram).to_string() << '\n';
      return kInternalFailure;
    }

    const std::string text = serialize_sgd(walk.diagram);
    std::string move_text;
    for (const auto& m : walk.moves) move_text += format_move(m) + '\n';
    if (!opt_.out_path.empty()) write_file(opt_.out_path, text);
    if (!opt_.moves_path.empty()) write_file(opt_.moves_path, move_text);

    if (opt_.json) {
      json moves = json::array();
      for (const auto& m : walk.moves) moves.push_back(format_move(m));
      emit({{"sgd", text},
            {"moves", moves},
            {"invariant_before", walk.before.to_string()},
            {"invariant_after", walk.after.to_string()},
            {"over_under_consistent", walk.over_under_consistent}});
      return kOk;
    }
    if (opt_.out_path.empty()) {
      out_ << text;
      // Comment lines keep stdout a valid SGD file.
      if (opt_.moves_path.empty()) {
        for (const auto& m : walk.moves) out_ << "# " << format_move(m) << '\n';
      }
    }
    return kOk;
  }

  int snf() {
    const IntMatrix m = parse_int_matrix(read_text_file(opt_.path));
    const SnfCertificate cert = smith_normal_form(m);
    if (auto defect = certificate_defect(m, cert); !defect.empty()) {
      err_ << "internal error: certificate rejected: " << defect << '\n';
      return kInternalFailure;
    }
    if (opt_.json) {
      emit({{"divisors", to_json(cert.divisors)},
            {"invariant", LkInvariant(cert.divisors).to_string()},
            {"U", to_json(cert.U)},
            {"D", to_json(cert.D)},
            {"V", to_json(cert.V)}});
      return kOk;
    }
    for (std::size_t i = 0; i < cert.divisors.size(); ++i) out_ << (i ? " " : "") << cert.divisors[i];
    out_ << '\n';
    return kOk;
  }

 private:
  void emit(json doc) {
    doc["schema"] = kJsonSchemaVersion;
    out_ << doc.dump(2) << '\n';
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Two-component spatial graph classification up to neighborhood homotopy", "lkgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Emit JSON (schema 1)");

  auto* validate = app.add_subcommand("validate", "Check an SGD file against the diagram invariants");
  validate->add_option("path", opt.path, "SGD file")->required();
  validate->add_flag("--two-components", opt.two_components, "Also require exactly two components");

  auto* invariant = app.add_subcommand("invariant", "Print the Lk invariant of a two-component diagram");
  invariant->add_option("path", opt.path, "SGD file")->required();
  invariant->add_flag("--show-basis", opt.show_basis, "Print spanning trees and fundamental cycles");
  invariant->add_flag("--show-matrix", opt.show_matrix, "Print the linking matrix");

  auto* classify = app.add_subcommand("classify", "Decide neighborhood homotopy of two diagrams");
  classify->add_option("first", opt.path, "SGD file")->required();
  classify->add_option("second", opt.second_path, "SGD file")->required();
  classify->add_flag("--ordered", opt.ordered, "Pair components in file order only");
  classify->add_flag("--handlebody", opt.handlebody, "Treat inputs as handlebody-link spines");

  auto* canonical = app.add_subcommand("canonical", "Write the canonical diagram for ranks and a divisor chain");
  canonical->add_option("m", opt.m, "Rank of the first component")->required();
  canonical->add_option("n", opt.n, "Rank of the second component")->required();
  canonical->add_option("divisors", opt.divisors, "Divisor chain d1 | d2 | ...");
  canonical->add_option("--out", opt.out_path, "Output path (default: stdout)");

  auto* perturb = app.add_subcommand("perturb", "Apply homotopy-preserving moves with an invariance self-check");
  perturb->add_option("path", opt.path, "SGD file")->required();
  perturb->add_option("--steps", opt.steps, "Number of random moves")->capture_default_str();
  perturb->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  perturb->add_option("--replay", opt.replay_path, "Replay a move list instead of a random walk");
  perturb->add_option("--out", opt.out_path, "Write the perturbed SGD here (default: stdout)");
  perturb->add_option("--moves", opt.moves_path, "Write the move list here");

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf->add_option("path", opt.path, "Matrix file: 'rows cols' then row-major entries")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kDomainViolation;
  }

  Commands commands(opt, out, err);
  try {
    if (*validate) return commands.validate();
    if (*invariant) return commands.invariant();
    if (*classify) return commands.classify();
    if (*canonical) return commands.canonical();
    if (*perturb) return commands.perturb();
    if (*snf) return commands.snf();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
  return kDomainViolation;
}

}  // namespace lkgraph::cli
