#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "cayley/errors.hpp"
#include "cayley/framework.hpp"
#include "cayley/report_json.hpp"

namespace cayley::cli {

namespace {

struct Options {
  std::string group;
  std::optional<std::string> word;
  std::optional<std::string> nf;
  std::string gen;
  std::uint64_t seed = 42;
  std::uint64_t trials = 100;
  std::uint64_t max_len = 200;
  std::size_t samples = 10;
  std::vector<std::size_t> sizes = {64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
  std::vector<std::size_t> checkpoints = {500, 1000, 2000};
  std::vector<std::int64_t> ks = {10, 20, 40, 60, 80, 100};
  std::size_t max_walk = 2000;
  std::string format = "text";
  std::optional<std::string> out_path;
  bool drop_case = false;
  bool quadratic_mutant = false;
};

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  out << text;
  if (o.out_path) {
    std::ofstream f(*o.out_path);
    if (!f) throw std::runtime_error("cannot write " + *o.out_path);
    f << text;
  }
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void cmd_normalize(const Options& o, std::istream& in, std::ostream& out) {
  const Representation rep = make_representation(parse_group(o.group));
  const std::vector<Gen> word = parse_gen_word(o.word ? *o.word : slurp(in));
  const NfRun r = word_to_nf(rep, word);
  if (o.format == "json")
    emit(o, out, json_text({{"group", o.group}, {"nf", render(r.nf)}, {"steps", r.steps}}));
  else
    emit(o, out, render(r.nf) + "\n");
}

void cmd_mul(const Options& o, std::istream& in, std::ostream& out) {
  const Representation rep = make_representation(parse_group(o.group), {o.drop_case});
  const Word nf = rep.parse_nf(o.nf ? *o.nf : trim(slurp(in)));
  const Gen g = parse_gen(o.gen);
  if (!rep.has_gen(g)) throw BadWord("generator " + o.gen + " is not in " + o.group);
  const TapeRun run = rep.apply(nf, g);
  if (o.format == "json")
    emit(o, out,
         json_text({{"group", o.group},
                    {"nf", render(run.output)},
                    {"steps", run.steps},
                    {"branch", run.branch}}));
  else
    emit(o, out, render(run.output) + "\nsteps " + std::to_string(run.steps) + "\n");
}

void cmd_wp(const Options& o, std::istream& in, std::ostream& out) {
  const Representation rep = make_representation(parse_group(o.group));
  const bool trivial = word_problem(rep, parse_gen_word(o.word ? *o.word : slurp(in)));
  if (o.format == "json")
    emit(o, out, json_text({{"group", o.group}, {"trivial", trivial}}));
  else
    emit(o, out, trivial ? "trivial\n" : "nontrivial\n");
}

void cmd_fuzz(const Options& o, std::ostream& out) {
  const Representation rep = make_representation(parse_group(o.group), {o.drop_case});
  emit(o, out, json_text(to_json(differential_fuzz(rep, o.trials, o.max_len, o.seed))));
}

void cmd_bench(const Options& o, std::ostream& out) {
  Representation rep = make_representation(parse_group(o.group));
  const Gen g = parse_gen(o.gen);
  if (o.quadratic_mutant) rep = with_quadratic_mutant(rep, g);
  emit(o, out, json_text(to_json(linearity_bench(rep, g, o.sizes, o.samples, o.seed))));
}

void cmd_probe(const Options& o, std::ostream& out) {
  const Representation rep = make_representation(parse_group(o.group));
  emit(o, out,
       json_text(to_json(quasigeodesic_probe(rep, o.trials, o.max_walk, o.checkpoints, o.seed))));
}

void cmd_demo_nonqg(const Options& o, std::ostream& out) {
  if (parse_group(o.group) != GroupId::z2wrz2)
    throw CLI::ValidationError("--group", "demo-nonqg is defined for z2wrz2 only");
  const std::vector<NonQgRow> rows = nonqg_family(o.ks);
  if (o.format == "json") {
    emit(o, out, json_text(to_json(rows)));
    return;
  }
  std::ostringstream s;
  s << std::setw(6) << "k" << std::setw(10) << "word_len" << std::setw(10) << "nf_len"
    << std::setw(12) << "ratio" << "\n";
  for (const NonQgRow& r : rows)
    s << std::setw(6) << r.k << std::setw(10) << r.word_len << std::setw(10) << r.nf_len
      << std::setw(12) << std::fixed << std::setprecision(3) << r.ratio << "\n";
  emit(o, out, s.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Normal forms and linear-time generator programs for Z2 wr Z2, Z2 wr F2 and "
               "Thompson's group F"};
  app.require_subcommand(1);
  const std::vector<std::string> groups = {"z2wrz2", "z2wrf2", "thompson-f"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "z2wrz2 | z2wrf2 | thompson-f")
        ->required()
        ->check(CLI::IsMember(groups));
    sub->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out_path, "also write the output to this file");
  };

  CLI::App* normalize = app.add_subcommand("normalize", "normal form of a generator word");
  common(normalize);
  normalize->add_option("--word", o.word, "whitespace-separated generators (default: stdin)");

  CLI::App* mul = app.add_subcommand("mul", "multiply a normal form by one generator");
  common(mul);
  mul->add_option("--nf", o.nf, "normal form (default: stdin)");
  mul->add_option("--gen", o.gen, "a a- b b- c x0 x0- x1 x1-")->required();
  mul->add_flag("--drop-case-2.2.2b", o.drop_case, "run the fault-injected x1- program");

  CLI::App* wp = app.add_subcommand("wp", "decide whether a word is trivial");
  common(wp);
  wp->add_option("--word", o.word, "whitespace-separated generators (default: stdin)");

  CLI::App* fuzz = app.add_subcommand("fuzz", "differential fuzzing against the model");
  common(fuzz);
  fuzz->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  fuzz->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", o.seed);
  fuzz->add_flag("--drop-case-2.2.2b", o.drop_case, "fuzz the fault-injected x1- program");

  CLI::App* bench = app.add_subcommand("bench", "step counts against input length");
  common(bench);
  bench->add_option("--gen", o.gen)->required();
  bench->add_option("--sizes", o.sizes, "strictly increasing input lengths")->delimiter(',');
  bench->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed);
  bench->add_flag("--quadratic-mutant", o.quadratic_mutant, "bench a planted quadratic program");

  CLI::App* probe = app.add_subcommand("probe", "normal form length along random walks");
  common(probe);
  probe->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  probe->add_option("--max-walk", o.max_walk)->check(CLI::PositiveNumber);
  probe->add_option("--checkpoints", o.checkpoints)->delimiter(',');
  probe->add_option("--seed", o.seed);

  CLI::App* demo = app.add_subcommand("demo-nonqg", "lamp at (k,k): normal form against word length");
  common(demo);
  demo->add_option("--ks", o.ks)->delimiter(',');

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (normalize->parsed()) cmd_normalize(o, in, out);
    else if (mul->parsed()) cmd_mul(o, in, out);
    else if (wp->parsed()) cmd_wp(o, in, out);
    else if (fuzz->parsed()) cmd_fuzz(o, out);
    else if (bench->parsed()) cmd_bench(o, out);
    else if (probe->parsed()) cmd_probe(o, out);
    else cmd_demo_nonqg(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotInLanguage& e) {
    err << "not in language: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const BadWord& e) {
    err << "bad word: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace cayley::cli
