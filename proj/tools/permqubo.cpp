#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permqubo/encodings.hpp"
#include "permqubo/io.hpp"
#include "permqubo/solve.hpp"
#include "permqubo/verify.hpp"

using namespace permqubo;

namespace {

Permutation parse_perm_list(const std::string& s) {
  Permutation p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) p.push_back(std::stoi(item));
  }
  if (p.empty()) throw CLI::ValidationError("empty permutation list: " + s);
  return p;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

ConstraintSpec parse_constraint(const std::string& s) {
  auto parts = split(s, ':');
  ConstraintSpec c;
  c.kind = parts[0];
  auto arity = [&](std::size_t want) {
    if (parts.size() != want + 1) {
      throw CLI::ValidationError("constraint " + parts[0] + " takes " +
                                 std::to_string(want) + " argument(s)");
    }
  };
  if (c.kind == "value" || c.kind == "forbid") {
    arity(2);
    c.i = std::stoi(parts[1]);
    c.j = std::stoi(parts[2]);
  } else if (c.kind == "fixed") {
    arity(1);
    c.kind = "value";
    c.i = c.j = std::stoi(parts[1]);
  } else if (c.kind == "power" || c.kind == "order") {
    arity(1);
    c.r = std::stoi(parts[1]);
  } else if (c.kind == "forbid_perm") {
    arity(1);
    c.tau = parse_perm_list(parts[1]);
  } else if (c.kind == "parity") {
    arity(1);
    if (parts[1] != "even" && parts[1] != "odd") {
      throw CLI::ValidationError("parity takes even or odd");
    }
    c.parity = parts[1] == "odd" ? ParityKind::Odd : ParityKind::Even;
  } else if (c.kind == "derangement" || c.kind == "involution") {
    arity(0);
  } else {
    throw CLI::ValidationError("unknown constraint: " + parts[0]);
  }
  return c;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

json load_instance(const std::string& path) {
  return json::parse(read_text_file(path));
}

json size_stats(const Encoding& e) {
  json j;
  const std::size_t vars = e.reg->size();
  j["variables"] = vars;
  j["inputs"] = e.reg->count_role(Role::Input);
  j["outputs"] = e.reg->count_role(Role::Output);
  j["controls"] = e.reg->count_role(Role::Control);
  j["auxiliaries"] = e.reg->count_role(Role::Auxiliary);
  j["interactions"] = e.poly.quadratic().size();
  auto deg = degree_profile(e.poly);
  int mx = 0;
  long long sum = 0;
  for (const auto& [v, d] : deg) {
    mx = std::max(mx, d);
    sum += d;
  }
  j["max_degree"] = mx;
  j["mean_degree"] =
      deg.empty() ? 0.0 : static_cast<double>(sum) / static_cast<double>(deg.size());
  j["density"] = vars < 2 ? 0.0
                          : 2.0 * static_cast<double>(e.poly.quadratic().size()) /
                                (static_cast<double>(vars) *
                                 static_cast<double>(vars - 1));

  json expect;
  if (e.meta.construction == "perm" && e.meta.constraints.empty()) {
    const long long m = e.topology.gate_count();
    const long long expected_aux = m * (7 * e.k + 1) -
                                   static_cast<long long>(e.n) * e.k;
    expect["auxiliaries"] = expected_aux;
    expect["auxiliaries_delta"] =
        static_cast<long long>(e.reg->count_role(Role::Auxiliary)) -
        expected_aux;
  } else if (e.meta.construction == "matrix") {
    expect["variables"] = static_cast<long long>(e.n) * e.n;
    expect["variables_delta"] =
        static_cast<long long>(vars) - static_cast<long long>(e.n) * e.n;
    expect["max_degree"] = 2 * (e.n - 1);
    expect["max_degree_delta"] = mx - 2 * (e.n - 1);
  }
  if (!expect.empty()) j["expected"] = expect;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse QUBO instances for permutation problems"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Construct an instance");
  std::string construction, network = "batcher", pattern, fixed, out_path;
  int n = 0, width = 0;
  std::vector<std::string> constraint_args;
  build->add_option("construction", construction,
                    "perm|matrix|match|compose|commute|conjugate|matrix_compose")
      ->required();
  build->add_option("--n", n, "problem size")->required();
  build->add_option("--network", network, "batcher|oet|bitonic");
  build->add_option("--width", width, "bus width override");
  build->add_option("--pattern", pattern, "match pattern, e.g. 2,1");
  build->add_option("--fixed", fixed, "fixed factor for commute/conjugate");
  build->add_option("--constraint", constraint_args,
                    "constraint, e.g. derangement or value:1:2");
  build->add_option("-o,--output", out_path, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify an instance file");
  std::string vfile, vmode = "auto";
  std::uint64_t vseed = 1;
  int vneg = 500;
  verify->add_option("file", vfile)->required();
  verify->add_option("--mode", vmode, "auto|free|oracle");
  verify->add_option("--seed", vseed);
  verify->add_option("--negatives", vneg);

  // sample
  auto* sample = app.add_subcommand("sample", "Sample an instance by annealing");
  std::string sfile, sout;
  AnnealParams ap;
  sample->add_option("file", sfile)->required();
  sample->add_option("--reads", ap.reads);
  sample->add_option("--sweeps", ap.sweeps);
  sample->add_option("--seed", ap.seed);
  sample->add_option("--beta-min", ap.beta_min);
  sample->add_option("--beta-max", ap.beta_max);
  sample->add_option("-o,--output", sout);

  // stats
  auto* stats = app.add_subcommand("stats", "Size and sparsity report");
  std::string tfile;
  stats->add_option("file", tfile)->required();

  // export
  auto* exp = app.add_subcommand("export", "Export to qubo or ising text");
  std::string efile, eformat = "qubo", eout;
  exp->add_option("file", efile)->required();
  exp->add_option("--format", eformat, "qubo|ising");
  exp->add_option("-o,--output", eout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) {
      EncodingMeta m;
      m.construction = construction;
      m.n = n;
      m.k = width;
      m.topo = topology_from_name(network);
      if (!pattern.empty()) m.pattern = parse_perm_list(pattern);
      if (!fixed.empty()) m.fixed_other = parse_perm_list(fixed);
      for (const auto& s : constraint_args) {
        m.constraints.push_back(parse_constraint(s));
      }
      Encoding e = build_encoding(m);
      emit(instance_to_json(e).dump(2) + "\n", out_path);
      return 0;
    }
    if (*verify) {
      Encoding e = encoding_from_instance(load_instance(vfile));
      VerifyOptions opts;
      opts.mode = vmode;
      opts.seed = vseed;
      opts.negatives = vneg;
      VerifyReport r = verify_encoding(e, opts);
      std::cout << report_to_json(r).dump(2) << "\n";
      return r.pass ? 0 : 1;
    }
    if (*sample) {
      Encoding e = encoding_from_instance(load_instance(sfile));
      auto samples = sa_sample(e.poly, e.reg->size(), ap);
      json j;
      j["params"] = {{"reads", ap.reads},
                     {"sweeps", ap.sweeps},
                     {"seed", ap.seed},
                     {"beta_min", ap.beta_min},
                     {"beta_max", ap.beta_max}};
      json arr = json::array();
      for (const auto& s : samples) {
        json js;
        js["energy"] = s.energy;
        std::string bits(e.reg->size(), '0');
        for (std::size_t i = 0; i < e.reg->size(); ++i) {
          if (s.asg.get(static_cast<VarId>(i))) bits[i] = '1';
        }
        js["bits"] = bits;
        if (s.energy == 0) {
          DecodedObject d = decode(e, s.asg);
          if (d.valid) js["solution"] = d.key();
        }
        arr.push_back(js);
      }
      j["samples"] = arr;
      j["stats"] = stats_to_json(sample_stats(e, samples));
      emit(j.dump(2) + "\n", sout);
      return 0;
    }
    if (*stats) {
      Encoding e = encoding_from_instance(load_instance(tfile));
      std::cout << size_stats(e).dump(2) << "\n";
      return 0;
    }
    if (*exp) {
      QuadPoly p = poly_from_json(load_instance(efile));
      if (eformat == "qubo") {
        emit(to_qubo_text(p), eout);
      } else if (eformat == "ising") {
        emit(ising_to_text(to_ising(p)), eout);
      } else {
        std::cerr << "unknown format: " << eformat << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
