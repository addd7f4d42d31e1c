// morank: generate benchmark instances, rank point sets, run the rank-
// distribution study, run single MOEA searches, and run paired comparison
// grids. Every command is deterministic given its flags and seed.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morank/compare.hpp"
#include "morank/experiment.hpp"
#include "morank/io.hpp"
#include "morank/moea.hpp"
#include "morank/pareto.hpp"
#include "morank/problems.hpp"
#include "morank/rank_stats.hpp"
#include "morank/ranking.hpp"

namespace {

using json = nlohmann::json;

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << content;
}

morank::RankingMethod parse_ranking_method(const std::string& s) {
  if (s == "ar") return morank::RankingMethod::AverageRank;
  if (s == "sr") return morank::RankingMethod::SumOfRatios;
  if (s == "favour") return morank::RankingMethod::Favour;
  if (s == "ko") return morank::RankingMethod::KOptimality;
  if (s == "ws") return morank::RankingMethod::WinningScore;
  throw CLI::ValidationError("method must be one of ar, sr, favour, ko, ws");
}

morank::ProblemInstance load_instance(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open instance file " + path);
  return morank::read_instance(is);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ranking nondominated points in many-objective optimization"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a benchmark instance file");
  gen->require_subcommand(1);
  std::string gen_out = "-";
  int gen_cities = 30, gen_jobs = 30, gen_k = 5;
  double gen_pc = 0.0;
  std::uint64_t gen_seed = 1;

  auto* gen_tsp = gen->add_subcommand("tsp", "k-objective 30-city style TSP");
  gen_tsp->add_option("--cities", gen_cities, "number of cities")
      ->capture_default_str();
  gen_tsp->add_option("--k", gen_k, "number of objectives")->capture_default_str();
  gen_tsp->add_option("--pc", gen_pc, "correlation parameter in (-1,1)")
      ->capture_default_str();
  gen_tsp->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen_tsp->add_option("-o,--out", gen_out, "output file ('-' for stdout)");

  auto* gen_jsp = gen->add_subcommand("jsp", "k-customer single-machine JSP");
  gen_jsp->add_option("--jobs", gen_jobs, "number of jobs")->capture_default_str();
  gen_jsp->add_option("--k", gen_k, "number of customers/objectives")
      ->capture_default_str();
  gen_jsp->add_option("--pc", gen_pc, "due-date spread parameter (> 0)");
  gen_jsp->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen_jsp->add_option("-o,--out", gen_out, "output file ('-' for stdout)");

  // --- rank --------------------------------------------------------------
  auto* rank = app.add_subcommand("rank", "rank a point-set CSV");
  std::string rank_file, rank_method = "ar";
  rank->add_option("file", rank_file, "point-set CSV (header f1..fk)")
      ->required();
  rank->add_option("--method", rank_method, "ar|sr|favour|ko|ws")
      ->capture_default_str();

  // --- entropy-study -----------------------------------------------------
  auto* ent = app.add_subcommand(
      "entropy-study", "rank-distribution relative-entropy histograms");
  std::vector<int> ent_ks{5, 6, 7, 8, 9, 10, 12, 14, 16, 18, 20};
  int ent_pops = 1000, ent_popsize = 50, ent_cities = 30;
  double ent_pc = 0.0;
  std::uint64_t ent_seed = 1;
  std::vector<std::string> ent_methods{"favour", "ko"};
  std::string ent_out = "-";
  ent->add_option("--k", ent_ks, "objective counts")->delimiter(',');
  ent->add_option("--pops", ent_pops, "populations per histogram")
      ->capture_default_str();
  ent->add_option("--popsize", ent_popsize, "individuals per population")
      ->capture_default_str();
  ent->add_option("--cities", ent_cities, "TSP cities")->capture_default_str();
  ent->add_option("--pc", ent_pc, "TSP correlation parameter")
      ->capture_default_str();
  ent->add_option("--seed", ent_seed, "base seed")->capture_default_str();
  ent->add_option("--methods", ent_methods, "ranking methods")->delimiter(',');
  ent->add_option("-o,--out", ent_out, "histogram CSV output");

  // --- run ---------------------------------------------------------------
  auto* run = app.add_subcommand("run", "single MOEA run on an instance file");
  std::string run_instance, run_method = "ARF", run_out = "run";
  morank::MoeaParams run_params;
  std::uint64_t run_seed = 1;
  run->add_option("--instance", run_instance, "instance file")->required();
  run->add_option("--method", run_method, "ARF|SRF|FR|KO|RF|SO|RR")
      ->capture_default_str();
  run->add_option("--popsize", run_params.popsize)->capture_default_str();
  run->add_option("--generations", run_params.generations)
      ->capture_default_str();
  run->add_option("--tournament", run_params.tournament_size)
      ->capture_default_str();
  run->add_option("--archive", run_params.archive_capacity)
      ->capture_default_str();
  run->add_option("--seed", run_seed)->capture_default_str();
  run->add_option("-o,--out", run_out,
                  "output prefix (.archive.csv, .genomes.txt, .meta.json)")
      ->capture_default_str();

  // --- compare -----------------------------------------------------------
  auto* cmp = app.add_subcommand(
      "compare", "paired method comparison over an experiment grid");
  std::string cmp_family = "tsp";
  std::vector<int> cmp_ks{5, 10, 15, 20};
  std::vector<double> cmp_pcs;
  std::vector<std::string> cmp_methods{"ARF", "SRF", "FR", "KO",
                                       "RF",  "SO",  "RR"};
  int cmp_trials = 20, cmp_n = 30, cmp_threshold = 17, cmp_threads = 1;
  morank::MoeaParams cmp_params;
  std::uint64_t cmp_seed = 1;
  std::string cmp_out = "compare-out";
  cmp->add_option("--family", cmp_family, "tsp|jsp")->capture_default_str();
  cmp->add_option("--k", cmp_ks, "objective counts")->delimiter(',');
  cmp->add_option("--pc", cmp_pcs,
                  "correlation values (default: tsp -0.4..0.4, jsp 10..50)")
      ->delimiter(',');
  cmp->add_option("--methods", cmp_methods, "selection methods")->delimiter(',');
  cmp->add_option("--trials", cmp_trials, "paired trials per cell")
      ->capture_default_str();
  cmp->add_option("--size", cmp_n, "cities or jobs")->capture_default_str();
  cmp->add_option("--threshold", cmp_threshold, "win threshold for significance")
      ->capture_default_str();
  cmp->add_option("--threads", cmp_threads, "worker threads")
      ->capture_default_str();
  cmp->add_option("--popsize", cmp_params.popsize)->capture_default_str();
  cmp->add_option("--generations", cmp_params.generations)
      ->capture_default_str();
  cmp->add_option("--tournament", cmp_params.tournament_size)
      ->capture_default_str();
  cmp->add_option("--archive", cmp_params.archive_capacity)
      ->capture_default_str();
  cmp->add_option("--seed", cmp_seed, "base seed")->capture_default_str();
  cmp->add_option("-o,--out", cmp_out, "output directory")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      morank::ProblemInstance inst;
      if (gen_tsp->parsed()) {
        inst = morank::generate_tsp(gen_cities, gen_k, gen_pc, gen_seed);
      } else {
        inst = morank::generate_jsp(gen_jobs, gen_k, gen_pc, gen_seed);
      }
      std::ostringstream os;
      morank::write_instance(os, inst);
      write_text(gen_out, os.str());
    } else if (rank->parsed()) {
      std::ifstream is(rank_file);
      if (!is) throw std::runtime_error("cannot open " + rank_file);
      const morank::Population points(morank::read_point_csv(is));
      const morank::RankAssignment ranks =
          morank::rank_points(points, parse_ranking_method(rank_method));
      std::cout << "index,rank,score\n";
      for (std::size_t i = 0; i < points.size(); ++i) {
        std::cout << i << "," << ranks.ranks[i] << ","
                  << morank::format_double(ranks.scores[i]) << "\n";
      }
    } else if (ent->parsed()) {
      std::string csv = "method,k,bin_lo,bin_hi,count\n";
      for (const std::string& ms : ent_methods) {
        const morank::RankingMethod method = parse_ranking_method(ms);
        for (int k : ent_ks) {
          const morank::EntropyHistogram h = morank::entropy_study(
              k, ent_pops, ent_popsize,
              morank::derive_seed(ent_seed, {static_cast<std::uint64_t>(k)}),
              method, {ent_cities, ent_pc});
          csv += h.method + "," + std::to_string(k) + ",0,0," +
                 std::to_string(h.zero_count) + "\n";
          for (int b = 0; b < morank::EntropyHistogram::kBins; ++b) {
            csv += h.method + "," + std::to_string(k) + "," +
                   morank::format_double(0.05 * b) + "," +
                   morank::format_double(0.05 * (b + 1)) + "," +
                   std::to_string(h.bins[b]) + "\n";
          }
        }
      }
      write_text(ent_out, csv);
    } else if (run->parsed()) {
      const morank::ProblemInstance inst = load_instance(run_instance);
      morank::MoeaConfig cfg;
      cfg.popsize = run_params.popsize;
      cfg.generations = run_params.generations;
      cfg.tournament_size = run_params.tournament_size;
      cfg.archive_capacity = run_params.archive_capacity;
      cfg.method = morank::parse_method(run_method);
      cfg.seed = run_seed;
      const auto t0 = std::chrono::steady_clock::now();
      const morank::Archive archive = morank::run_moea(inst, cfg);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();

      std::ostringstream points;
      morank::write_point_csv(points, archive.values());
      write_text(run_out + ".archive.csv", points.str());

      std::string genomes;
      for (const auto& e : archive.entries()) {
        for (std::size_t i = 0; i < e.genome.size(); ++i) {
          genomes += (i ? " " : "") + std::to_string(e.genome[i]);
        }
        genomes += "\n";
      }
      write_text(run_out + ".genomes.txt", genomes);

      json meta{{"instance", run_instance},
                {"method", run_method},
                {"popsize", cfg.popsize},
                {"generations", cfg.generations},
                {"tournament_size", cfg.tournament_size},
                {"archive_capacity", cfg.archive_capacity},
                {"seed", cfg.seed},
                {"archive_size", archive.size()},
                {"wall_seconds", secs}};
      write_text(run_out + ".meta.json", meta.dump(2) + "\n");
    } else if (cmp->parsed()) {
      if (cmp_pcs.empty()) {
        cmp_pcs = cmp_family == "jsp"
                      ? std::vector<double>{10, 20, 30, 40, 50}
                      : std::vector<double>{-0.4, -0.2, 0.0, 0.2, 0.4};
      }
      std::vector<morank::MethodId> methods;
      for (const auto& m : cmp_methods) methods.push_back(morank::parse_method(m));

      std::vector<morank::CellResult> cells;
      std::string covs = morank::covs_csv_header();
      for (int k : cmp_ks) {
        for (double pc : cmp_pcs) {
          const morank::CellSpec spec{cmp_family, k, pc, cmp_n};
          cells.push_back(morank::run_cell(spec, methods, cmp_trials, cmp_params,
                                           cmp_seed, cmp_threshold, cmp_threads));
          morank::append_covs_csv(covs, cells.back());
          std::cerr << "cell " << cmp_family << " k=" << k << " pc=" << pc
                    << " done\n";
        }
      }

      std::filesystem::create_directories(cmp_out);
      write_text(cmp_out + "/covs.csv", covs);

      std::string t1_csv = "family,k,pair,cells\n", t1_txt;
      for (const auto& row : morank::table1_rows(cells)) {
        t1_csv += cmp_family + "," + std::to_string(row.k) + "," + row.pair +
                  "," + row.cells + "\n";
        std::ostringstream line;
        line.width(12);
        line << std::left << row.pair;
        t1_txt += line.str() + " k=" + std::to_string(row.k) + "  " +
                  row.cells + "\n";
      }
      write_text(cmp_out + "/table1.csv", t1_csv);
      write_text(cmp_out + "/table1.txt", t1_txt);

      std::string t2_csv = "family,k,pc,ordering\n", t2_txt;
      for (const auto& row : morank::table2_rows(cells)) {
        t2_csv += cmp_family + "," + std::to_string(row.k) + "," +
                  morank::format_double(row.pc) + ",\"" + row.ordering + "\"\n";
        t2_txt += cmp_family + " " + std::to_string(row.k) + " / " +
                  morank::format_double(row.pc) + ": " + row.ordering + "\n";
      }
      write_text(cmp_out + "/table2.csv", t2_csv);
      write_text(cmp_out + "/table2.txt", t2_txt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
