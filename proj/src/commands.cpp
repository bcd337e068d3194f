#include "skt/commands.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace skt {

int effective_threads(const Config& config) {
  if (config.threads > 0) return config.threads;
  if (const char* env = std::getenv("SKT_LAB_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

namespace {

// Runs jobs over a small worker pool; results land at their job index, so the
// merged output is deterministic regardless of scheduling.
void run_jobs(int threads, int count, const std::function<void(int)>& job) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int workers = std::min(threads, count);
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) job(i);
    });
  for (auto& t : pool) t.join();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedInput {
  LieAlgebra algebra;
  RatMat J;
  RatMat metric;
  std::vector<std::string> warnings;
};

LoadedInput load_input(const CheckArgs& args) {
  std::string notation = args.notation;
  if (notation.empty() && !args.input_path.empty()) notation = read_file(args.input_path);
  if (notation.empty()) throw ParseError(0, "no input: pass --notation or --input");
  ParsedAlgebra parsed = parse_notation(notation, args.params);
  int n = parsed.algebra.dim();
  LoadedInput in{parsed.algebra, RatMat(), RatMat(), parsed.warnings};
  in.J = args.j_path.empty() ? canonical_J(n) : matrix_from_json(read_file(args.j_path));
  in.metric = args.metric_path.empty() ? RatMat::identity(n)
                                       : matrix_from_json(read_file(args.metric_path));
  return in;
}

std::string flag_str(bool b) { return b ? "yes" : "no"; }

std::string binding_to_string(const Bindings& b) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : b) {
    if (!first) s += ", ";
    first = false;
    s += k + "=" + rat_str(v);
  }
  return s + "}";
}

}  // namespace

CommandResult cmd_check(const CheckArgs& args, const Config& config) {
  CommandResult res;
  try {
    LoadedInput in = load_input(args);
    if (!in.algebra.jacobi_check()) {
      res.exit_code = 2;
      res.output = "error: structure constants violate the Jacobi identity\n";
      return res;
    }
    HermitianStructure h = HermitianStructure::make(in.J, in.metric);
    NijenhuisTable nij = nijenhuis(in.algebra, in.J);
    if (!nij.all_zero) {
      auto [i, j] = *nij.witness;
      res.exit_code = 2;
      res.output = "error: J is not integrable; N(e_" + std::to_string(i + 1) + ", e_" +
                   std::to_string(j + 1) + ") = " +
                   rat_vec_str(nij.n[static_cast<size_t>(i)][static_cast<size_t>(j)]) + "\n";
      return res;
    }
    StructureVerdict v = evaluate_structure(in.algebra, h, config.tol);
    res.output = emit_report(args.name, in.algebra, v,
                             config.json ? ReportFormat::Json : ReportFormat::Markdown);
  } catch (const ParseError& ex) {
    res.exit_code = 3;
    res.output = std::string("parse error: ") + ex.what() + "\n";
  } catch (const std::domain_error& ex) {
    res.exit_code = 2;
    res.output = std::string("error: ") + ex.what() + "\n";
  }
  return res;
}

CommandResult cmd_classify(const CheckArgs& args, const Config& config) {
  CommandResult res;
  try {
    LoadedInput in = load_input(args);
    if (!in.algebra.jacobi_check()) {
      res.exit_code = 2;
      res.output = "error: structure constants violate the Jacobi identity\n";
      return res;
    }
    NijenhuisTable nij = nijenhuis(in.algebra, in.J);
    if (!nij.all_zero) {
      res.exit_code = 2;
      res.output = "error: J is not integrable on this algebra\n";
      return res;
    }
    ExistenceReport ex = exists_twisted_skt(in.algebra, in.J, config.tol);
    bool lcskt = ex.exists && exists_lcskt(in.algebra, in.J, config.tol);
    bool kahler = false, lcb = false, brf = false;
    if (ex.exists) {
      kahler = exists_kahler(ex.data, config.tol);
      lcb = exists_lcb(ex.data);
      brf = exists_brf(ex.data, config.tol);
    }
    bool unimod = in.algebra.unimodular_check();

    nlohmann::json j;
    j["schema"] = "skt-lab/1";
    j["kind"] = "classification";
    j["name"] = args.name;
    j["structure_equations"] = print_notation(in.algebra);
    j["exists"] = {{"twisted_skt", ex.exists}, {"lcskt", lcskt}, {"kahler", kahler},
                   {"lcb", lcb},               {"bismut_ricci_flat", brf}};
    j["unimodular"] = unimod;
    nlohmann::json spec = nlohmann::json::array();
    for (const auto& ev : ex.spectrum.eigenvalues) {
      nlohmann::json e = {{"re", ev.value.real()}, {"im", ev.value.imag()},
                          {"multiplicity", ev.multiplicity}};
      if (ev.exact) e["exact"] = grat_str(*ev.exact);
      spec.push_back(e);
    }
    j["spectrum"] = {{"eigenvalues", spec},
                     {"diagonalizable", ex.spectrum.diagonalizable},
                     {"real_part_classes", ex.spectrum.real_part_classes}};
    if (ex.exists) {
      try {
        RatMat G1 = construct_normalizing_metric(ex.data.A, ex.data.J1, config.tol);
        AlmostAbelianData with_metric = ex.data;
        with_metric.G1 = G1;
        AlphaSpace alpha = construct_alpha(with_metric, config.tol);
        // witness metric on the ambient space: G1 on n_1, frame e_1, e_2n unit
        int n = in.algebra.dim();
        RatMat Gfull = RatMat::identity(n);
        RatMat frame_inv = *ex.data.frame.inverse();
        RatMat Gadapted = RatMat::identity(n);
        for (int r = 0; r < n - 2; ++r)
          for (int c = 0; c < n - 2; ++c) Gadapted(r + 1, c + 1) = G1(r, c);
        Gfull = frame_inv.transpose() * Gadapted * frame_inv;
        j["witness"] = {{"metric", nlohmann::json::parse(matrix_to_json(Gfull))},
                        {"alpha_family", alpha_space_str(alpha)}};
      } catch (const std::domain_error& ex2) {
        j["witness"] = {{"note", std::string("no exact witness: ") + ex2.what()}};
      }
    }
    if (config.json) {
      res.output = j.dump(2) + "\n";
    } else {
      std::ostringstream out;
      out << "classification of " << args.name << " (" << print_notation(in.algebra) << ")\n";
      out << "  twisted SKT metric exists: " << flag_str(ex.exists) << "\n";
      out << "  LCSKT metric exists:       " << flag_str(lcskt) << "\n";
      out << "  Kahler metric exists:      " << flag_str(kahler) << "\n";
      out << "  LCB metric exists:         " << flag_str(lcb) << "\n";
      out << "  Bismut-Ricci-flat exists:  " << flag_str(brf) << "\n";
      out << "  unimodular:                " << flag_str(unimod) << "\n";
      if (j.contains("witness") && j["witness"].contains("alpha_family"))
        out << "  witness alpha family: " << j["witness"]["alpha_family"].get<std::string>() << "\n";
      res.output = out.str();
    }
  } catch (const ParseError& ex) {
    res.exit_code = 3;
    res.output = std::string("parse error: ") + ex.what() + "\n";
  } catch (const std::domain_error& ex) {
    res.exit_code = 2;
    res.output = std::string("error: ") + ex.what() + "\n";
  }
  return res;
}

CommandResult cmd_catalog_verify(int table, const Config& config, const std::string& catalog_path) {
  CommandResult res;
  std::ostringstream out;
  if (table == 1) {
    auto rows = verify_alpha_table(config.seed, std::max(config.samples, 5));
    bool ok = true;
    for (const auto& r : rows) {
      bool row_ok = r.families_match && r.failures.empty();
      ok = ok && row_ok;
      out << (row_ok ? "[pass]" : "[FAIL]") << " alpha-table row " << r.row << ": " << r.samples
          << " samples, closed-form family == direct solve\n";
      for (const auto& n : r.notes) out << "       note: " << n << "\n";
      for (const auto& f : r.failures) out << "       " << f << "\n";
    }
    res.exit_code = ok ? 0 : 1;
    res.output = out.str();
    return res;
  }

  Catalog cat = catalog_path.empty() ? builtin_catalog() : load_catalog(read_file(catalog_path));
  std::vector<std::string> columns;
  if (table == 2) columns = {"kahler", "skt", "lcskt"};
  if (table == 3) columns = {"unimodular", "lcb", "brf"};

  std::vector<EntryReport> reports(cat.entries.size());
  run_jobs(effective_threads(config), static_cast<int>(cat.entries.size()), [&](int i) {
    reports[static_cast<size_t>(i)] = verify_entry(cat, cat.entries[static_cast<size_t>(i)],
                                                   config.samples, config.seed, columns);
  });

  bool ok = true;
  int documented = 0;
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    bool entry_ok = r.passed();
    ok = ok && entry_ok;
    out << (entry_ok ? "[pass]" : "[FAIL]") << " " << cat.entries[i].display << " (" << r.samples
        << " samples)";
    std::vector<const CellDiscrepancy*> doc;
    for (const auto& d : r.discrepancies)
      if (d.documented) doc.push_back(&d);
    if (!doc.empty()) {
      out << " [" << doc.size() << " documented discrepancies]";
      documented += static_cast<int>(doc.size());
    }
    out << "\n";
    // one line per documented cell (first occurrence per column)
    std::vector<std::string> seen;
    for (const auto* d : doc) {
      bool first = true;
      for (const auto& s : seen)
        if (s == d->column) first = false;
      if (!first) continue;
      seen.push_back(d->column);
      out << "       " << d->column << " recorded as '" << d->printed << "', computed "
          << (d->computed ? "true" : "false") << " at " << d->binding << "; " << d->note << "\n";
    }
    for (const auto& f : r.failures) out << "       " << f << "\n";
  }
  out << (ok ? "catalog verification passed" : "catalog verification FAILED") << " ("
      << reports.size() << " entries";
  if (documented) out << ", " << documented << " documented discrepancies";
  out << ")\n";
  res.exit_code = ok ? 0 : 1;
  res.output = out.str();
  return res;
}

CommandResult cmd_sweep(const CheckArgs& args, const std::vector<SweepRange>& ranges,
                        const Config& config) {
  CommandResult res;
  try {
    // build the lattice in deterministic row-major order
    std::vector<Bindings> grid;
    grid.push_back(args.params);
    for (const auto& r : ranges) {
      if (sgn(r.step) <= 0) throw std::domain_error("sweep: step must be positive");
      std::vector<Bindings> next;
      for (const auto& base : grid)
        for (Rat x = r.from; x <= r.to; x += r.step) {
          Bindings b = base;
          b[r.param] = x;
          next.push_back(std::move(b));
        }
      grid = std::move(next);
    }
    if (ranges.empty()) grid.clear();

    struct Row {
      Bindings binding;
      bool ok = false;
      std::string error;
      ComputedFlags flags;
      bool balanced = false;
    };
    std::vector<Row> rows(grid.size());
    std::string notation = args.notation;
    if (notation.empty() && !args.input_path.empty()) notation = read_file(args.input_path);
    if (notation.empty() && !grid.empty()) throw ParseError(0, "no input: pass --notation or --input");

    run_jobs(effective_threads(config), static_cast<int>(grid.size()), [&](int i) {
      Row& row = rows[static_cast<size_t>(i)];
      row.binding = grid[static_cast<size_t>(i)];
      try {
        ParsedAlgebra parsed = parse_notation(notation, row.binding);
        if (!parsed.jacobi_ok) throw std::domain_error("Jacobi identity fails");
        int n = parsed.algebra.dim();
        RatMat J = args.j_path.empty() ? canonical_J(n) : matrix_from_json(read_file(args.j_path));
        RatMat metric = args.metric_path.empty() ? RatMat::identity(n)
                                                 : matrix_from_json(read_file(args.metric_path));
        HermitianStructure h = HermitianStructure::make(J, metric);
        StructureVerdict v = evaluate_structure(parsed.algebra, h, config.tol);
        row.flags.kahler = v.kaehler;
        row.flags.skt = v.skt;
        row.flags.lcskt = v.lcskt;
        row.flags.unimodular = parsed.algebra.unimodular_check();
        row.balanced = v.balanced;
        if (v.data) {
          row.flags.kahler_exists = exists_kahler(*v.data, config.tol);
          row.flags.lcb_exists = exists_lcb(*v.data);
          row.flags.brf_exists = exists_brf(*v.data, config.tol);
          row.flags.brf_metric = v.bismut_ricci_flat;
        }
        row.ok = true;
      } catch (const std::exception& ex) {
        row.error = ex.what();
      }
    });

    std::vector<std::string> param_names;
    for (const auto& r : ranges) param_names.push_back(r.param);
    if (config.json) {
      nlohmann::json j;
      j["schema"] = "skt-lab/1";
      j["kind"] = "sweep";
      nlohmann::json jrows = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json jr;
        for (const auto& [k, v] : row.binding) jr["params"][k] = rat_str(v);
        if (!row.ok) {
          jr["error"] = row.error;
        } else {
          jr["kahler"] = row.flags.kahler;
          jr["skt"] = row.flags.skt;
          jr["lcskt"] = row.flags.lcskt;
          jr["balanced"] = row.balanced;
          jr["unimodular"] = row.flags.unimodular;
          jr["kahler_exists"] = row.flags.kahler_exists;
          jr["lcb_exists"] = row.flags.lcb_exists;
          jr["brf_exists"] = row.flags.brf_exists;
          jr["brf_metric"] = row.flags.brf_metric;
        }
        jrows.push_back(jr);
      }
      j["rows"] = jrows;
      res.output = j.dump(2) + "\n";
    } else {
      std::ostringstream out;
      out << "#";
      for (const auto& p : param_names) out << " " << p;
      out << " kahler skt lcskt balanced unimodular kahler_exists lcb_exists brf_exists brf_metric\n";
      for (const auto& row : rows) {
        if (!row.ok) {
          out << "# error at " << binding_to_string(row.binding) << ": " << row.error << "\n";
          continue;
        }
        for (const auto& p : param_names) out << rat_str(row.binding.at(p)) << " ";
        out << (row.flags.kahler ? 1 : 0) << " " << (row.flags.skt ? 1 : 0) << " "
            << (row.flags.lcskt ? 1 : 0) << " " << (row.balanced ? 1 : 0) << " "
            << (row.flags.unimodular ? 1 : 0) << " " << (row.flags.kahler_exists ? 1 : 0) << " "
            << (row.flags.lcb_exists ? 1 : 0) << " " << (row.flags.brf_exists ? 1 : 0) << " "
            << (row.flags.brf_metric ? 1 : 0) << "\n";
      }
      res.output = out.str();
    }
  } catch (const ParseError& ex) {
    res.exit_code = 3;
    res.output = std::string("parse error: ") + ex.what() + "\n";
  } catch (const std::domain_error& ex) {
    res.exit_code = 2;
    res.output = std::string("error: ") + ex.what() + "\n";
  }
  return res;
}

}  // namespace skt
