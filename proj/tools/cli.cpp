#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eigconf/bkr.hpp"
#include "eigconf/engine.hpp"
#include "eigconf/errors.hpp"
#include "eigconf/instances.hpp"
#include "eigconf/io.hpp"
#include "eigconf/oracle.hpp"
#include "eigconf/verify.hpp"

namespace eigconf::cli {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

struct RunConfig {
  std::string matrix_f;
  std::string matrix_g;
  std::string method = "signature";
  bool emit_trace = false;
  std::string sign_matrix;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 1;
  int bound = 5;
  int count = 1;
  int threads = -1;
  std::string out_dir = ".";
};

json config_json(const EigenConfig& c) { return c.counts; }

json trace_json(const PipelineTrace& t) {
  json signs = json::array();
  for (const auto& row : t.sign_matrix.rows()) signs.push_back(to_string(row));
  json derivs = json::array();
  for (const auto& d : t.derivatives) derivs.push_back(d.to_string());
  return {{"scale", t.scale.to_string()}, {"f", t.f.to_string()}, {"derivatives", std::move(derivs)},
          {"sign_matrix", std::move(signs)},   {"sigma", t.sigma},         {"q", t.q}};
}

unsigned thread_count(const RunConfig& cfg) {
  if (cfg.threads >= 0) return static_cast<unsigned>(cfg.threads);
  if (const char* env = std::getenv("EC_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  SymmetricMatrix f = read_matrix_file(cfg.matrix_f);
  SymmetricMatrix g = read_matrix_file(cfg.matrix_g);
  EngineOptions options;
  options.threads = thread_count(cfg);

  json doc{{"schema", kSchema}, {"method", cfg.method}};
  if (cfg.method == "oracle") {
    doc["config"] = config_json(eigen_configuration_oracle(f, g));
    emit(out, doc);
    return kOk;
  }
  EngineResult engine = eigen_configuration(f, g, options);
  doc["config"] = config_json(engine.config);
  if (cfg.emit_trace) doc["trace"] = trace_json(engine.trace);
  int code = kOk;
  if (cfg.method == "both") {
    EigenConfig oracle = eigen_configuration_oracle(f, g);
    doc["engine"] = config_json(engine.config);
    doc["oracle"] = config_json(oracle);
    doc["agree"] = engine.config == oracle;
    if (!(engine.config == oracle)) code = kDisagreement;
  }
  emit(out, doc);
  return code;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  SymmetricMatrix f = read_matrix_file(cfg.matrix_f);
  SymmetricMatrix g = read_matrix_file(cfg.matrix_g);
  EngineOptions options;
  options.threads = thread_count(cfg);
  CrossValidation report = cross_validate(f, g, options);
  json doc{{"schema", kSchema},
           {"engine", config_json(report.engine)},
           {"oracle", config_json(report.oracle)},
           {"agree", report.agree}};
  if (report.trace) doc["trace"] = trace_json(*report.trace);
  emit(out, doc);
  return report.agree ? kOk : kDisagreement;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
  SignMatrix s = SignMatrix::parse(read_text_file(cfg.sign_matrix), cfg.m, cfg.n);
  json doc{{"schema", kSchema}, {"sigma", sigma_from_sign_matrix(s)}};
  try {
    TransformResult r = transform(s);
    doc["q"] = r.q;
    doc["config"] = config_json(r.config);
  } catch (const InfeasibleSignMatrix& e) {
    json q = json::array();
    for (const auto& x : e.q()) q.push_back(x.to_string());
    doc["infeasible"] = true;
    doc["q"] = std::move(q);
    doc["reason"] = e.what();
  }
  emit(out, doc);
  return kOk;
}

std::string instance_name(int index, char which) {
  std::ostringstream os;
  os << "instance_" << std::setw(4) << std::setfill('0') << index << '_' << which << ".json";
  return os.str();
}

class WriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw WriteError("cannot write " + path.string());
  f << text;
  if (!f) throw WriteError("cannot write " + path.string());
}

int cmd_random(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m < 1 || cfg.n < 1) throw DomainError("-m and -n must be >= 1");
  if (cfg.bound < 1) throw DomainError("--bound must be >= 1");
  if (cfg.count < 0) throw DomainError("--count must be >= 0");
  std::filesystem::path dir(cfg.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw WriteError("cannot create " + dir.string() + ": " + ec.message());

  auto instances = random_instances(cfg.m, cfg.n, cfg.seed, cfg.bound, cfg.count);
  json listing = json::array();
  for (int i = 0; i < static_cast<int>(instances.size()); ++i) {
    const auto& inst = instances[static_cast<std::size_t>(i)];
    std::string fname = instance_name(i, 'F');
    std::string gname = instance_name(i, 'G');
    write_file(dir / fname, matrix_to_json(inst.f).dump(2) + "\n");
    write_file(dir / gname, matrix_to_json(inst.g).dump(2) + "\n");
    listing.push_back({{"index", i}, {"f", fname}, {"g", gname}, {"degeneracy", to_string(inst.degeneracy)}});
  }
  json manifest{{"schema", kSchema}, {"generator", "splitmix64"}, {"seed", cfg.seed}, {"m", cfg.m},
                {"n", cfg.n},        {"bound", cfg.bound},        {"count", cfg.count}, {"instances", listing}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  emit(out, manifest);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact eigenvalue configuration of two rational symmetric matrices", "ecconf"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads (default: EC_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_matrices = [&](CLI::App* sub) {
    sub->add_option("--matrix-f", cfg.matrix_f, "JSON file with the m x m matrix F")->required();
    sub->add_option("--matrix-g", cfg.matrix_g, "JSON file with the n x n matrix G")->required();
  };

  auto* compute = app.add_subcommand("compute", "Eigenvalue configuration of (F, G)");
  add_matrices(compute);
  compute->add_option("--method", cfg.method, "signature | oracle | both")
      ->check(CLI::IsMember({"signature", "oracle", "both"}));
  compute->add_flag("--emit-trace", cfg.emit_trace, "Include sigma, q and the sign matrix");
  add_threads(compute);

  auto* verify = app.add_subcommand("verify", "Cross-check the signature method against root isolation");
  add_matrices(verify);
  add_threads(verify);

  auto* transform_cmd = app.add_subcommand("transform", "Apply tau to a sign matrix");
  transform_cmd->add_option("--sign-matrix", cfg.sign_matrix, "Text file: 3^m lines of n signs")->required();
  transform_cmd->add_option("-m", cfg.m, "Dimension of F")->required()->check(CLI::PositiveNumber);
  transform_cmd->add_option("-n", cfg.n, "Dimension of G")->required()->check(CLI::PositiveNumber);

  auto* random = app.add_subcommand("random", "Write seeded random instance files and a manifest");
  random->add_option("-m", cfg.m, "Dimension of F")->required()->check(CLI::PositiveNumber);
  random->add_option("-n", cfg.n, "Dimension of G")->required()->check(CLI::PositiveNumber);
  random->add_option("--seed", cfg.seed, "Generator seed");
  random->add_option("--bound", cfg.bound, "Entries are drawn from [-bound, bound]")->check(CLI::PositiveNumber);
  random->add_option("--count", cfg.count, "Number of instances")->check(CLI::NonNegativeNumber);
  random->add_option("--out", cfg.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ecconf: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (transform_cmd->parsed()) return cmd_transform(cfg, out);
    if (random->parsed()) return cmd_random(cfg, out);
  } catch (const ParseError& e) {
    err << "ecconf: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "ecconf: " << e.what() << '\n';
    return kInputError;
  } catch (const WriteError& e) {
    err << "ecconf: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace eigconf::cli
