#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bordx/bordclass.hpp"
#include "bordx/error.hpp"
#include "bordx/genfactory.hpp"
#include "bordx/io.hpp"
#include "bordx/numbers.hpp"
#include "bordx/tower.hpp"
#include "verify.hpp"

namespace {

using bordx::io::json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInconsistent = 3 };

struct RunConfig {
  std::string format = "tsv";
  std::string output;
  int threads = 0;
};

unsigned resolve_threads(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("BORDX_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("BORDX_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const RunConfig& cfg, const std::string& tsv, const json& j) {
  const std::string text = cfg.format == "json" ? j.dump(2) + "\n" : tsv;
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::invalid_argument("cannot open output file " + cfg.output);
  out << text;
}

std::string chern_rows(const bordx::ChernVector& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.keys().size(); ++i) out << "c(" << a.keys()[i].key() << ")\t" << a.at(i) << '\n';
  return out.str();
}

struct ChernArgs {
  std::string spec_path;
  std::string family;
  int n1 = -1;
  int n2 = -1;
  std::string omega;
  std::string convention;
  std::string backend = "triangular";
};

int cmd_chern(const RunConfig& cfg, const ChernArgs& args) {
  bordx::TowerSpec spec;
  if (!args.spec_path.empty()) {
    std::ifstream in(args.spec_path);
    if (!in) throw std::invalid_argument("cannot read spec file " + args.spec_path);
    spec = bordx::io::tower_spec_from_json(json::parse(in));
  } else if (!args.family.empty()) {
    bordx::FamilyParams params;
    params.n1 = args.n1;
    params.n2 = args.n2;
    if (!args.omega.empty()) params.omega = bordx::Partition::parse(args.omega);
    spec = bordx::build_family(bordx::parse_family(args.family), params);
  } else {
    throw std::invalid_argument("chern needs --spec or --family");
  }
  if (args.convention == "toric")
    spec = bordx::with_convention(spec, bordx::Orientation::toric);
  else if (args.convention == "bordism")
    spec = bordx::with_convention(spec, bordx::Orientation::bordism);
  else if (!args.convention.empty())
    throw std::invalid_argument("--convention must be toric or bordism");
  const auto backend = args.backend == "lattice" ? bordx::Backend::lattice : bordx::Backend::triangular;
  const bordx::ChernVector numbers = bordx::chern_numbers(spec, backend);
  const bordx::Integer s = bordx::s_num(numbers);
  std::string tsv = "partition\tvalue\n" + chern_rows(numbers) + "s\t" + s.get_str() + "\n";
  json j = {{"spec", bordx::io::to_json(spec)}, {"chern", bordx::io::to_json(numbers)}, {"s", bordx::io::integer_to_json(s)}};
  emit(cfg, tsv, j);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& lemma, const bordx::cli::VerifyRange& range) {
  const auto results = bordx::cli::run_verification(lemma, range, resolve_threads(cfg.threads));
  std::ostringstream tsv;
  json rows = json::array();
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    tsv << (r.pass ? "PASS" : "FAIL") << '\t' << lemma << '\t' << r.instance << '\t' << r.detail << '\n';
    rows.push_back({{"instance", r.instance}, {"pass", r.pass}, {"detail", r.detail}});
  }
  tsv << "summary\t" << lemma << '\t' << (results.size() - static_cast<std::size_t>(failed)) << " passed\t" << failed
      << " failed\n";
  json j = {{"lemma", lemma},
            {"results", rows},
            {"passed", results.size() - static_cast<std::size_t>(failed)},
            {"failed", failed}};
  emit(cfg, tsv.str(), j);
  return failed ? kVerifyFailed : kOk;
}

int cmd_gens(const RunConfig& cfg, int dim, const std::string& source) {
  if (dim <= 0 || dim % 2 != 0) throw std::invalid_argument("--dim must be a positive even integer");
  const int i = dim / 2;
  bordx::GeneratorCertificate cert;
  if (source == "cy") {
    if (dim < 4) throw std::invalid_argument("Calabi-Yau generators start in dimension 4 (Omega^SU vanishes in dimension 2)");
    cert = bordx::cy_generator_combo(i + 1);
  } else if (source == "quasitoric") {
    if (dim < 10)
      throw std::invalid_argument(
          "quasitoric SU-manifolds of dimension below 10 are null-bordant, so they cannot represent generators");
    cert = i % 2 ? bordx::quasitoric_generator_odd((i - 1) / 2) : bordx::quasitoric_generator_even(i / 2);
  } else {
    throw std::invalid_argument("--source must be cy or quasitoric");
  }
  std::ostringstream tsv;
  tsv << "dimension\t" << cert.dimension << '\n';
  for (const auto& t : cert.combination) tsv << "term\t" << t.coefficient << '\t' << t.source << '\n';
  tsv << "s_value\t" << cert.s_value << '\n' << "target\t" << cert.target << '\n';
  tsv << "c1_vanish\t" << std::boolalpha << cert.su_checks.c1_vanish << '\n';
  tsv << "in_W\t" << cert.su_checks.in_w << '\n';
  tsv << "in_ker_boundary\t" << cert.su_checks.in_ker_boundary << '\n';
  tsv << "valid\t" << cert.valid() << '\n';
  emit(cfg, tsv.str(), bordx::io::to_json(cert));
  return cert.valid() ? kOk : kVerifyFailed;
}

int cmd_ranks(const RunConfig& cfg, int max_dim) {
  if (max_dim < 0) throw std::invalid_argument("--max-dim must be nonnegative");
  const auto table = bordx::rank_table(max_dim / 2);
  emit(cfg, bordx::io::rank_table_tsv(table), bordx::io::to_json(table));
  return kOk;
}

int cmd_cy3(const RunConfig& cfg, long h11, long h21) {
  const auto r = bordx::cy3_criterion(h11, h21);
  std::ostringstream tsv;
  tsv << "chi\t" << r.chi << "\ns3\t" << r.s3 << "\ntag\t" << bordx::cy_tag_name(r.tag, 3) << '\n';
  emit(cfg, tsv.str(), bordx::io::to_json(r));
  return kOk;
}

int cmd_cy4(const RunConfig& cfg, long h11, long h21, long h31, std::optional<long> h22) {
  const auto r = bordx::cy4_invariants(h11, h21, h31, h22);
  std::ostringstream tsv;
  tsv << "chi1_neg\t" << r.chi1_neg << "\nc4\t" << r.c4 << "\nc2sq\t" << r.c2sq << "\nchi2\t" << r.chi2 << "\nh22\t"
      << r.h22 << "\ns4\t" << r.s4 << "\ntag\t" << bordx::cy_tag_name(r.tag, 4) << '\n';
  emit(cfg, tsv.str(), bordx::io::to_json(r));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern numbers, SU-bordism generators and lemma checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("-o,--output", cfg.output, "Write output to this file");
  app.add_option("--threads", cfg.threads, "Worker threads (overrides BORDX_THREADS)")->check(CLI::PositiveNumber);

  ChernArgs chern;
  auto* chern_cmd = app.add_subcommand("chern", "Chern numbers of a tower or family instance");
  chern_cmd->add_option("--spec", chern.spec_path, "TowerSpec JSON file");
  chern_cmd->add_option("--family", chern.family, "L, Ltilde, Ntilde or CPprod");
  chern_cmd->add_option("--n1", chern.n1);
  chern_cmd->add_option("--n2", chern.n2);
  chern_cmd->add_option("--omega", chern.omega, "Partition for CPprod, e.g. 2,1");
  chern_cmd->add_option("--convention", chern.convention, "toric or bordism");
  chern_cmd->add_option("--backend", chern.backend)->check(CLI::IsMember({"triangular", "lattice"}));

  std::string lemma;
  bordx::cli::VerifyRange range;
  auto* verify_cmd = app.add_subcommand("verify", "Check a lemma over a range of instances");
  verify_cmd->add_option("--lemma", lemma)->required();
  verify_cmd->add_option("--kmax", range.kmax);
  verify_cmd->add_option("--nmax", range.nmax);
  verify_cmd->add_option("--imax", range.imax);

  int gens_dim = 0;
  std::string source = "cy";
  auto* gens_cmd = app.add_subcommand("gens", "Certify a generator of Omega^SU in the given dimension");
  gens_cmd->add_option("--dim", gens_dim, "Real dimension")->required();
  gens_cmd->add_option("--source", source, "cy or quasitoric");

  int max_dim = 16;
  auto* ranks_cmd = app.add_subcommand("ranks", "Rank table of Omega^U, W and Omega^SU");
  ranks_cmd->add_option("--max-dim", max_dim, "Largest real dimension");

  long h11 = 0, h21 = 0, h31 = 0;
  std::optional<long> h22;
  auto* cy3_cmd = app.add_subcommand("cy3", "Classify a Calabi-Yau 3-fold by Hodge numbers");
  cy3_cmd->add_option("--h11", h11)->required();
  cy3_cmd->add_option("--h21", h21)->required();
  auto* cy4_cmd = app.add_subcommand("cy4", "Classify a Calabi-Yau 4-fold by Hodge numbers");
  cy4_cmd->add_option("--h11", h11)->required();
  cy4_cmd->add_option("--h21", h21)->required();
  cy4_cmd->add_option("--h31", h31)->required();
  cy4_cmd->add_option("--h22", h22, "Checked against the Euler characteristic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*chern_cmd) return cmd_chern(cfg, chern);
    if (*verify_cmd) return cmd_verify(cfg, lemma, range);
    if (*gens_cmd) return cmd_gens(cfg, gens_dim, source);
    if (*ranks_cmd) return cmd_ranks(cfg, max_dim);
    if (*cy3_cmd) return cmd_cy3(cfg, h11, h21);
    if (*cy4_cmd) return cmd_cy4(cfg, h11, h21, h31, h22);
  } catch (const bordx::InconsistencyError& e) {
    std::cerr << "inconsistent input: " << e.what() << '\n';
    return kInconsistent;
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
