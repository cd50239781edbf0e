#include "cli/job.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace nll::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint32_t parse_prime(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size() || v > 0xFFFFFFFFull) throw std::out_of_range(text);
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw UsageError("bad prime '" + text + "'");
  }
}

}  // namespace

DegreeData JobSpec::degrees() const { return DegreeData::make(a, b); }

std::vector<int> parse_csv_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

std::vector<std::vector<std::string>> parse_matrix_document(const std::string& json_text) {
  const auto doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) throw UsageError("matrix must be a JSON array of arrays");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw UsageError("matrix rows must be arrays");
    std::vector<std::string> out;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw UsageError("matrix entries must be polynomial strings");
      out.push_back(cell.get<std::string>());
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

void apply_job_document(const std::string& json_text, JobSpec& spec) {
  const auto doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw UsageError("job file must hold a JSON object");
  try {
    if (doc.contains("a")) spec.a = doc.at("a").get<std::vector<int>>();
    if (doc.contains("b")) spec.b = doc.at("b").get<std::vector<int>>();
    if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("matrix")) spec.matrix = parse_matrix_document(doc.at("matrix").dump());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("job file: ") + e.what());
  }
}

JobSpec parse_command_line(int argc, const char* const* argv, const char* env_prime) {
  JobSpec spec;
  CLI::App app{"Non-Lefschetz locus of coker(phi) over k[x1,x2,x3]", "lefschetz-locus"};
  std::string a_text, b_text, matrix_file, job_file, line_text, prime_text;

  app.add_option("command", spec.command, "hilbert | locus | line | survey")
      ->required()
      ->check(CLI::IsMember({"hilbert", "locus", "line", "survey"}));
  auto* a_opt = app.add_option("--a", a_text, "source degrees a_1,...,a_{n+2}");
  auto* b_opt = app.add_option("--b", b_text, "target degrees b_1,...,b_n");
  auto* m_opt = app.add_option("--matrix", matrix_file, "JSON file with the entries of phi");
  app.add_option("--job", job_file, "JSON job file");
  auto* seed_opt = app.add_option("--seed", spec.seed, "seed for phi and sampled lines");
  app.add_option("--prime", prime_text, "field characteristic (default 65521, env LL_PRIME)");
  app.add_option("--line", line_text, "line coefficients l1,l2,l3");
  app.add_option("--samples", spec.samples, "sampled lines per check");
  app.add_flag("--pretty", spec.pretty, "table on stderr");
  app.add_option("--min-degree", spec.grid.min_degree, "survey: smallest a_i");
  app.add_option("--max-degree", spec.grid.max_degree, "survey: largest a_i");
  app.add_option("--random-n2", spec.grid.random_n2, "survey: number of seeded n = 2 sequences");
  app.add_flag("--monomial", spec.grid.include_monomial, "survey: add the monomial (3,4,4) row");
  app.add_option("--workers", spec.workers, "survey: worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (!job_file.empty()) {
    const std::uint64_t cli_seed = spec.seed;
    apply_job_document(read_file(job_file), spec);
    if (seed_opt->count() > 0) spec.seed = cli_seed;
  }
  if (a_opt->count() > 0) spec.a = parse_csv_ints(a_text);
  if (b_opt->count() > 0) spec.b = parse_csv_ints(b_text);
  if (m_opt->count() > 0) spec.matrix = parse_matrix_document(read_file(matrix_file));

  if (!prime_text.empty())
    spec.prime = parse_prime(prime_text);
  else if (env_prime != nullptr && *env_prime != '\0')
    spec.prime = parse_prime(env_prime);

  if (!line_text.empty()) {
    std::stringstream ss(line_text);
    std::string item;
    std::vector<std::int64_t> v;
    while (std::getline(ss, item, ',')) {
      try {
        v.push_back(std::stoll(item));
      } catch (const std::exception&) {
        throw UsageError("bad line coefficient '" + item + "'");
      }
    }
    if (v.size() != 3) throw UsageError("--line needs exactly three coefficients");
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw UsageError("--line must not be the zero form");
    spec.line = std::array<std::int64_t, 3>{v[0], v[1], v[2]};
  }

  if (spec.command != "survey") {
    if (spec.a.empty()) throw UsageError(spec.command + " needs --a (or a job file)");
    if (spec.b.empty()) throw UsageError("--b needs at least one target degree (n >= 1)");
  }
  if (spec.command == "line" && !spec.line) throw UsageError("line needs --line l1,l2,l3");
  if (spec.grid.min_degree > spec.grid.max_degree) throw UsageError("--min-degree exceeds --max-degree");
  return spec;
}

}  // namespace nll::cli
